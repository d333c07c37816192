#pragma once

// Random measures over a finite ground space [k]: Poisson and Gamma laws,
// the Dirichlet-Ferguson (normalized Gamma) measure, their moment/cumulant
// formulae in Bell and cycle-index form, seeded samplers, and checks for the
// structural identities relating them (convolution exponential, Mecke
// equation, conic/simplicial product decomposition, asymptotic regimes).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/polynomial.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// Non-negative weights sigma_1..sigma_k on the points of the ground space;
/// the total mass beta = |sigma| plays the role of the concentration
/// parameter throughout.
struct FiniteMeasure {
    std::vector<Rat> weights;

    FiniteMeasure() = default;
    /// Throws std::invalid_argument if any weight is negative.
    explicit FiniteMeasure(std::vector<Rat> w);

    std::size_t size() const { return weights.size(); }
    Rat total() const;
    /// sigma / |sigma|. Throws std::domain_error when the total mass is zero.
    std::vector<Rat> normalized() const;
};

/// Pointwise values f(1)..f(k) of a test function on the ground space.
using TestFunction = std::vector<Rat>;

/// A jump-intensity (Levy) measure entering computations only through its
/// moment sequence n -> integral of s^n d lambda(s), queried for n >= 1.
/// The measure itself may have infinite mass; order 0 is never asked for.
struct LevyMoments {
    std::function<Rat(unsigned long)> provider;

    Rat moment(unsigned long n) const;

    /// lambda = delta_1: every moment equals 1 (plain Poisson case).
    static LevyMoments point_mass_at_one();
    /// d lambda(s) = theta s^{-1} e^{-ks} ds, whose n-th moment is
    /// theta * (n-1)! / k^n.
    static LevyMoments gamma_intensity(const Rat& theta, const Rat& k);
};

enum class MeasureKind { Poisson, Gamma, DirichletFerguson };

/// A deterministic batch of sampler output: `samples[r][i]` is the mass the
/// r-th realization puts on ground point i. Row r depends only on
/// (seed, r), never on the batch size or evaluation order.
struct MeasureSampleBatch {
    MeasureKind kind{};
    std::uint64_t seed = 0;
    std::size_t ground_size = 0;
    std::vector<std::vector<double>> samples;
};

/// The power expectations < f^i >_sigma = sum_x sigma_x f(x)^i for i = 1..n,
/// the arguments fed to every Bell / cycle-index moment formula below.
std::vector<Rat> power_expectations(const FiniteMeasure& sigma,
                                    const TestFunction& f, unsigned long n);

/// n-th moment of <f, eta> under the Poisson law of intensity sigma:
/// the complete Bell polynomial B_n at the power expectations of f.
Rat poisson_measure_moment(const FiniteMeasure& sigma, const TestFunction& f,
                           unsigned long n);

/// n-th moment of <f, gamma> under the Gamma law of intensity sigma:
/// n! * Z_n at the power expectations of f.
Rat gamma_measure_moment(const FiniteMeasure& sigma, const TestFunction& f,
                         unsigned long n);

/// n-th cumulant (n - 1)! * < f^n >_sigma of the Gamma law; n >= 1.
Rat gamma_measure_cumulant(const FiniteMeasure& sigma, const TestFunction& f,
                           unsigned long n);

/// Joint cumulant of a compound-Poisson-type law with intensity sigma and
/// jump moments lambda: the |m|-th lambda-moment times the sigma-expectation
/// of prod_i f_i^{m_i}. Requires one test function per entry of m and
/// |m| >= 1.
Rat cpt_cumulant(const FiniteMeasure& sigma, const LevyMoments& lambda,
                 const MultiIndex& m, const std::vector<TestFunction>& f);

/// n-th moment of <f, eta> under the Dirichlet-Ferguson measure directed by
/// sigma: (n!/Poch(beta, n)) * Z_n at the (unnormalized) power expectations,
/// which is the Dirichlet moment of the weight projection of sigma.
Rat df_moment(const FiniteMeasure& sigma, const TestFunction& f,
              unsigned long n);

/// Laplace transform of the Dirichlet-Ferguson measure truncated at total
/// order `degree`: sum_{n <= degree} df_moment(sigma, f, n) / n!.
/// Requires total mass 1 and ||f||_inf < 1.
Rat df_laplace(const FiniteMeasure& sigma, const TestFunction& f,
               unsigned long degree);

struct LaplaceGammaResult {
    /// True when every weight is a non-negative integer, so the product
    /// prod_i (1 - f_i)^{-sigma_i} is itself rational.
    bool exact = false;
    Rat exact_value;  // set only when exact
    double value = 0.0;
};

/// Laplace transform prod_i (1 - f_i)^{-sigma_i} of the Gamma law at f,
/// each f_i < 1; exact when the weights are integers, floating otherwise.
LaplaceGammaResult laplace_gamma(const FiniteMeasure& sigma,
                                 const TestFunction& f);

/// Draw `count` independent realizations. Poisson rows hold counts with
/// means sigma_i; Gamma rows hold independent Gamma(sigma_i, 1) masses;
/// Dirichlet-Ferguson rows are Gamma rows divided by their total.
MeasureSampleBatch sample_measure(MeasureKind kind, const FiniteMeasure& sigma,
                                  std::uint64_t seed, std::size_t count);

/// Convolution-exponential identity at a single configuration m: the left
/// value is the truncated series sum_{j <= level} nu^{*j}({m}) / j! for
/// nu = delta_sharp sigma, computed by explicit convolution powers; the
/// right value is sigma^m / m!. They agree whenever level >= |m|.
std::pair<Rat, Rat> conv_exp_check(const FiniteMeasure& sigma,
                                   const MultiIndex& m, unsigned long level);

struct MeckeReport {
    bool exact = false;
    Rat lhs_exact;  // set only in exact mode
    Rat rhs_exact;
    double lhs = 0.0;
    double rhs = 0.0;
    double diff_se = 0.0;     // standard error of lhs - rhs (sampling mode)
    std::size_t samples = 0;  // 0 in exact mode
};

/// Mecke identity for the Gamma law: compares
///   E sum_x eta_x F_x(eta)   with   sum_x sigma_x Int e^{-s} E F_x(eta + s e^x) ds,
/// where `functional[x]` is a polynomial in the masses eta_1..eta_k.
/// The two-argument overload evaluates both sides exactly through Gamma
/// moments; the seeded overload estimates them by sampling.
MeckeReport mecke_check(const FiniteMeasure& sigma,
                        const std::vector<SparsePoly>& functional);
MeckeReport mecke_check(const FiniteMeasure& sigma,
                        const std::vector<SparsePoly>& functional,
                        std::uint64_t seed, std::size_t count);

struct DecompositionReport {
    /// z-scores of the empirical moments E |gamma|^j against Poch(beta, j),
    /// j = 1..n.
    std::vector<double> charge_moment_z;
    double covariance = 0.0;  // cov(|gamma|^n, <g>_{normalized gamma})
    double covariance_se = 0.0;
    double correlation = 0.0;  // Pearson corr(|gamma|, <g>_{normalized gamma})
    double correlation_bound = 0.0;
    std::size_t samples = 0;
    bool moments_pass = false;
    bool product_pass = false;
    bool correlation_pass = false;
};

/// Product decomposition of the Gamma law into total charge and simplicial
/// part: from `count` Gamma samples, checks that |gamma| has the moments of
/// a Gamma(beta, 1) variable and is uncorrelated with the first-moment
/// functional <g> of the normalized sample. Requires count >= 10^4.
DecompositionReport decomposition_check(const FiniteMeasure& sigma,
                                        const TestFunction& g, unsigned long n,
                                        std::uint64_t seed, std::size_t count);

struct DfAsymptoticReport {
    std::vector<Rat> beta_grid;
    std::vector<Rat> moments;  // exact df_moment at beta * normalized sigma
    Rat limit_zero;            // sum_i normalized sigma_i f_i^n
    Rat limit_infinity;        // (<f>_{normalized sigma})^n
    bool monotone = false;
};

/// Exact n-th Dirichlet-Ferguson moments along a concentration grid,
/// together with the two degenerate limits the family interpolates.
DfAsymptoticReport df_asymptotic_check(const FiniteMeasure& sigma,
                                       const TestFunction& f, unsigned long n,
                                       const std::vector<Rat>& beta_grid);

}  // namespace momenta
