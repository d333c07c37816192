#include "momenta/random_measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "momenta/bell.hpp"
#include "momenta/rng.hpp"

namespace momenta {
namespace {

void require_matching_ground(const FiniteMeasure& sigma, const TestFunction& f) {
    if (f.size() != sigma.size())
        throw std::invalid_argument("test function and measure live on different ground spaces");
}

/// E prod_y eta_y^{m_y} for independent eta_y ~ Gamma(sigma_y, 1).
Rat gamma_monomial_moment(const FiniteMeasure& sigma, const std::vector<unsigned>& m) {
    Rat value(1);
    for (std::size_t y = 0; y < sigma.size(); ++y)
        if (m[y] != 0) value *= pochhammer(sigma.weights[y], m[y]);
    return value;
}

double sample_mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

/// Standard error of the sample mean.
double sample_se(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    const double mean = sample_mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace

FiniteMeasure::FiniteMeasure(std::vector<Rat> w) : weights(std::move(w)) {
    for (const Rat& x : weights)
        if (x < 0) throw std::invalid_argument("measure weights must be non-negative");
}

Rat FiniteMeasure::total() const {
    Rat beta(0);
    for (const Rat& x : weights) beta += x;
    return beta;
}

std::vector<Rat> FiniteMeasure::normalized() const {
    const Rat beta = total();
    if (beta == 0) throw std::domain_error("cannot normalize a measure of zero total mass");
    std::vector<Rat> out = weights;
    for (Rat& x : out) x /= beta;
    return out;
}

Rat LevyMoments::moment(unsigned long n) const {
    if (n == 0) throw std::domain_error("jump moments are defined for order >= 1 only");
    if (!provider) throw std::domain_error("empty jump-moment provider");
    return provider(n);
}

LevyMoments LevyMoments::point_mass_at_one() {
    return LevyMoments{[](unsigned long) { return Rat(1); }};
}

LevyMoments LevyMoments::gamma_intensity(const Rat& theta, const Rat& k) {
    if (theta <= 0 || k <= 0)
        throw std::domain_error("gamma jump intensity requires positive parameters");
    // Explicit return type: the deduced one would be a lazy gmp expression
    // referring to temporaries that die before the caller reads it.
    return LevyMoments{[theta, k](unsigned long n) -> Rat {
        return theta * factorial(n - 1) / pow_rat(k, static_cast<long>(n));
    }};
}

std::vector<Rat> power_expectations(const FiniteMeasure& sigma, const TestFunction& f,
                                    unsigned long n) {
    require_matching_ground(sigma, f);
    std::vector<Rat> xs(n, Rat(0));
    for (std::size_t x = 0; x < f.size(); ++x) {
        Rat power(1);
        for (unsigned long i = 0; i < n; ++i) {
            power *= f[x];
            xs[i] += sigma.weights[x] * power;
        }
    }
    return xs;
}

Rat poisson_measure_moment(const FiniteMeasure& sigma, const TestFunction& f, unsigned long n) {
    const std::vector<Rat> xs = power_expectations(sigma, f, n);
    return bell_complete(n).evaluate(xs);
}

Rat gamma_measure_moment(const FiniteMeasure& sigma, const TestFunction& f, unsigned long n) {
    const std::vector<Rat> xs = power_expectations(sigma, f, n);
    return factorial(n) * cycle_index_sn(n).evaluate(xs);
}

Rat gamma_measure_cumulant(const FiniteMeasure& sigma, const TestFunction& f, unsigned long n) {
    if (n == 0) throw std::domain_error("cumulant order must be >= 1");
    return factorial(n - 1) * power_expectations(sigma, f, n).back();
}

Rat cpt_cumulant(const FiniteMeasure& sigma, const LevyMoments& lambda, const MultiIndex& m,
                 const std::vector<TestFunction>& f) {
    if (f.size() != m.size())
        throw std::invalid_argument("need exactly one test function per entry of the index");
    for (const TestFunction& fi : f) require_matching_ground(sigma, fi);
    const unsigned long order = mi_size(m);
    if (order == 0) throw std::domain_error("cumulant order must be >= 1");

    Rat ground_moment(0);
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        Rat prod = sigma.weights[x];
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) prod *= pow_rat(f[i][x], m[i]);
        ground_moment += prod;
    }
    return lambda.moment(order) * ground_moment;
}

Rat df_moment(const FiniteMeasure& sigma, const TestFunction& f, unsigned long n) {
    const Rat beta = sigma.total();
    if (beta <= 0) throw std::domain_error("directing measure must have positive total mass");
    const std::vector<Rat> xs = power_expectations(sigma, f, n);
    return factorial(n) / pochhammer(beta, n) * cycle_index_sn(n).evaluate(xs);
}

Rat df_laplace(const FiniteMeasure& sigma, const TestFunction& f, unsigned long degree) {
    if (sigma.total() != 1)
        throw std::domain_error("Laplace expansion requires a directing measure of total mass 1");
    require_matching_ground(sigma, f);
    for (const Rat& v : f)
        if (v >= 1 || v <= -1) throw std::domain_error("Laplace expansion requires ||f|| < 1");

    const std::vector<Rat> xs = power_expectations(sigma, f, degree);
    Rat acc(1);
    for (unsigned long n = 1; n <= degree; ++n) {
        const std::vector<Rat> head(xs.begin(), xs.begin() + static_cast<long>(n));
        // At total mass 1 the n-th moment is Z_n itself, so each grade of the
        // transform carries the extra 1/n!.
        acc += cycle_index_sn(n).evaluate(head) / factorial(n);
    }
    return acc;
}

LaplaceGammaResult laplace_gamma(const FiniteMeasure& sigma, const TestFunction& f) {
    require_matching_ground(sigma, f);
    for (const Rat& v : f)
        if (v >= 1) throw std::domain_error("Laplace transform diverges unless every f_i < 1");

    LaplaceGammaResult out;
    out.exact = true;
    for (const Rat& w : sigma.weights)
        if (w.get_den() != 1 || !w.get_num().fits_slong_p()) out.exact = false;

    if (out.exact) {
        Rat prod(1);
        for (std::size_t i = 0; i < f.size(); ++i)
            prod *= pow_rat(Rat(1) - f[i], -sigma.weights[i].get_num().get_si());
        out.exact_value = prod;
        out.value = rat_to_double(prod);
    } else {
        double log_sum = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i)
            log_sum -= rat_to_double(sigma.weights[i]) * std::log1p(-rat_to_double(f[i]));
        out.value = std::exp(log_sum);
    }
    return out;
}

MeasureSampleBatch sample_measure(MeasureKind kind, const FiniteMeasure& sigma,
                                  std::uint64_t seed, std::size_t count) {
    if (count == 0) throw std::invalid_argument("sample count must be >= 1");
    const std::size_t k = sigma.size();
    if (kind == MeasureKind::DirichletFerguson && sigma.total() == 0)
        throw std::domain_error("normalized sampling requires positive total mass");

    std::vector<double> shape(k);
    for (std::size_t i = 0; i < k; ++i) shape[i] = rat_to_double(sigma.weights[i]);

    MeasureSampleBatch batch;
    batch.kind = kind;
    batch.seed = seed;
    batch.ground_size = k;
    batch.samples.assign(count, std::vector<double>(k, 0.0));

    for (std::size_t r = 0; r < count; ++r) {
        // Each row draws from its own substream, so row r is a function of
        // (seed, r) alone and batches may be produced in any order.
        Rng rng(derive_substream(seed, static_cast<std::uint64_t>(r)));
        std::vector<double>& row = batch.samples[r];
        if (kind == MeasureKind::Poisson) {
            for (std::size_t i = 0; i < k; ++i)
                row[i] = shape[i] == 0.0 ? 0.0 : static_cast<double>(rng.poisson(shape[i]));
            continue;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = shape[i] == 0.0 ? 0.0 : rng.gamma(shape[i]);
            sum += row[i];
        }
        if (kind == MeasureKind::DirichletFerguson) {
            if (sum > 0.0) {
                for (double& v : row) v /= sum;
            } else {
                const std::vector<Rat> bary = sigma.normalized();
                for (std::size_t i = 0; i < k; ++i) row[i] = rat_to_double(bary[i]);
            }
        }
    }
    return batch;
}

std::pair<Rat, Rat> conv_exp_check(const FiniteMeasure& sigma, const MultiIndex& m,
                                   unsigned long level) {
    if (m.size() != sigma.size())
        throw std::invalid_argument("configuration index and measure live on different ground spaces");
    if (level < mi_size(m))
        throw std::invalid_argument("truncation level must reach the configuration size");

    using Config = std::map<MultiIndex, Rat>;
    const auto fits_under = [&m](const MultiIndex& c) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (c[i] > m[i]) return false;
        return true;
    };

    // nu = image of sigma under x -> (unit mass at x); contributions to the
    // target configuration m only ever pass through configurations <= m.
    Config base;
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        if (sigma.weights[x] == 0) continue;
        MultiIndex unit(m.size(), 0);
        unit[x] = 1;
        if (fits_under(unit)) base.emplace(std::move(unit), sigma.weights[x]);
    }

    Config power{{MultiIndex(m.size(), 0), Rat(1)}};  // nu^{*0}
    Rat lhs = power.count(m) ? power.at(m) : Rat(0);
    for (unsigned long j = 1; j <= level; ++j) {
        Config next;
        for (const auto& [ca, va] : power) {
            for (const auto& [cb, vb] : base) {
                MultiIndex c = ca;
                for (std::size_t i = 0; i < c.size(); ++i) c[i] += cb[i];
                if (fits_under(c)) next[c] += va * vb;
            }
        }
        power = std::move(next);
        auto hit = power.find(m);
        if (hit != power.end()) lhs += hit->second / factorial(j);
    }

    Rat rhs(1);
    for (std::size_t x = 0; x < m.size(); ++x)
        rhs *= pow_rat(sigma.weights[x], m[x]) / factorial(m[x]);
    return {lhs, rhs};
}

MeckeReport mecke_check(const FiniteMeasure& sigma, const std::vector<SparsePoly>& functional) {
    const std::size_t k = sigma.size();
    if (functional.size() != k)
        throw std::invalid_argument("need one functional component per ground point");
    for (const SparsePoly& p : functional)
        if (p.arity() != k)
            throw std::invalid_argument("functional components must be polynomials in the k masses");

    Rat lhs(0);
    Rat rhs(0);
    for (std::size_t x = 0; x < k; ++x) {
        // lhs: E eta_x F_x(eta), termwise through independent Gamma moments.
        const SparsePoly weighted = functional[x] * SparsePoly::variable(static_cast<unsigned>(k),
                                                                         static_cast<unsigned>(x));
        for (const auto& [e, c] : weighted.terms()) lhs += c * gamma_monomial_moment(sigma, e);

        // rhs: sigma_x Int_0^inf e^{-s} E F_x(eta + s e^x) ds; expanding
        // (eta_x + s)^{m_x} binomially reduces the integral to factorials.
        for (const auto& [e, c] : functional[x].terms()) {
            Rat others(1);
            for (std::size_t y = 0; y < k; ++y)
                if (y != x && e[y] != 0) others *= pochhammer(sigma.weights[y], e[y]);
            Rat inner(0);
            for (unsigned j = 0; j <= e[x]; ++j)
                inner += binomial(e[x], j) * pochhammer(sigma.weights[x], j) *
                         factorial(e[x] - j);
            rhs += sigma.weights[x] * c * others * inner;
        }
    }

    MeckeReport report;
    report.exact = true;
    report.lhs_exact = lhs;
    report.rhs_exact = rhs;
    report.lhs = rat_to_double(lhs);
    report.rhs = rat_to_double(rhs);
    return report;
}

MeckeReport mecke_check(const FiniteMeasure& sigma, const std::vector<SparsePoly>& functional,
                        std::uint64_t seed, std::size_t count) {
    const std::size_t k = sigma.size();
    if (functional.size() != k)
        throw std::invalid_argument("need one functional component per ground point");
    for (const SparsePoly& p : functional)
        if (p.arity() != k)
            throw std::invalid_argument("functional components must be polynomials in the k masses");
    if (count == 0) throw std::invalid_argument("sample count must be >= 1");

    std::vector<double> shape(k), weight(k);
    for (std::size_t i = 0; i < k; ++i) {
        shape[i] = rat_to_double(sigma.weights[i]);
        weight[i] = shape[i];
    }

    std::vector<double> lhs_draws(count), rhs_draws(count), diff_draws(count);
    std::vector<double> eta(k), shifted(k);
    for (std::size_t r = 0; r < count; ++r) {
        Rng rng(derive_substream(seed, static_cast<std::uint64_t>(r)));
        for (std::size_t i = 0; i < k; ++i)
            eta[i] = shape[i] == 0.0 ? 0.0 : rng.gamma(shape[i]);

        double lhs = 0.0;
        double rhs = 0.0;
        for (std::size_t x = 0; x < k; ++x) {
            lhs += eta[x] * functional[x].evaluate_double(eta);
            const double s = -std::log(rng.uniform_pos());  // Exp(1)
            shifted = eta;
            shifted[x] += s;
            rhs += weight[x] * functional[x].evaluate_double(shifted);
        }
        lhs_draws[r] = lhs;
        rhs_draws[r] = rhs;
        diff_draws[r] = lhs - rhs;
    }

    MeckeReport report;
    report.lhs = sample_mean(lhs_draws);
    report.rhs = sample_mean(rhs_draws);
    report.diff_se = count > 1 ? sample_se(diff_draws) : 0.0;
    report.samples = count;
    return report;
}

DecompositionReport decomposition_check(const FiniteMeasure& sigma, const TestFunction& g,
                                        unsigned long n, std::uint64_t seed, std::size_t count) {
    require_matching_ground(sigma, g);
    if (count < 10000) throw std::invalid_argument("decomposition check needs at least 10^4 samples");
    const Rat beta = sigma.total();
    if (beta <= 0) throw std::domain_error("decomposition requires positive total mass");

    const MeasureSampleBatch batch = sample_measure(MeasureKind::Gamma, sigma, seed, count);
    std::vector<double> g_values(sigma.size());
    for (std::size_t i = 0; i < g.size(); ++i) g_values[i] = rat_to_double(g[i]);
    std::vector<double> bary(sigma.size());
    {
        const std::vector<Rat> nb = sigma.normalized();
        for (std::size_t i = 0; i < nb.size(); ++i) bary[i] = rat_to_double(nb[i]);
    }

    std::vector<double> charge(count), functional(count);
    for (std::size_t r = 0; r < count; ++r) {
        const std::vector<double>& row = batch.samples[r];
        double total = 0.0;
        for (double v : row) total += v;
        charge[r] = total;
        double u = 0.0;
        if (total > 0.0) {
            for (std::size_t i = 0; i < row.size(); ++i) u += row[i] / total * g_values[i];
        } else {
            for (std::size_t i = 0; i < row.size(); ++i) u += bary[i] * g_values[i];
        }
        functional[r] = u;
    }

    DecompositionReport report;
    report.samples = count;

    // (a) moments of the total charge against Poch(beta, j).
    report.moments_pass = true;
    std::vector<double> powers(count, 1.0);
    for (unsigned long j = 1; j <= n; ++j) {
        for (std::size_t r = 0; r < count; ++r) powers[r] *= charge[r];
        const double target = rat_to_double(pochhammer(beta, j));
        const double se = sample_se(powers);
        const double z = se > 0.0 ? (sample_mean(powers) - target) / se : 0.0;
        report.charge_moment_z.push_back(z);
        if (std::abs(z) > 4.0) report.moments_pass = false;
    }

    // (b) covariance of |gamma|^n with the simplicial functional.
    {
        const double zb = sample_mean(powers);
        const double wb = sample_mean(functional);
        std::vector<double> cross(count);
        for (std::size_t r = 0; r < count; ++r)
            cross[r] = (powers[r] - zb) * (functional[r] - wb);
        report.covariance = sample_mean(cross);
        report.covariance_se = sample_se(cross);
        report.product_pass = std::abs(report.covariance) <= 4.0 * report.covariance_se;
    }

    // (c) Pearson correlation of |gamma| itself with the functional.
    {
        const double zb = sample_mean(charge);
        const double wb = sample_mean(functional);
        double czz = 0.0, cww = 0.0, czw = 0.0;
        for (std::size_t r = 0; r < count; ++r) {
            const double dz = charge[r] - zb;
            const double dw = functional[r] - wb;
            czz += dz * dz;
            cww += dw * dw;
            czw += dz * dw;
        }
        report.correlation = (czz > 0.0 && cww > 0.0) ? czw / std::sqrt(czz * cww) : 0.0;
        report.correlation_bound = 4.0 / std::sqrt(static_cast<double>(count));
        report.correlation_pass = std::abs(report.correlation) < report.correlation_bound;
    }
    return report;
}

DfAsymptoticReport df_asymptotic_check(const FiniteMeasure& sigma, const TestFunction& f,
                                       unsigned long n, const std::vector<Rat>& beta_grid) {
    require_matching_ground(sigma, f);
    const std::vector<Rat> bar = sigma.normalized();

    DfAsymptoticReport report;
    report.beta_grid = beta_grid;
    for (const Rat& beta : beta_grid) {
        if (beta <= 0) throw std::domain_error("concentration grid must be positive");
        std::vector<Rat> scaled = bar;
        for (Rat& w : scaled) w *= beta;
        report.moments.push_back(df_moment(FiniteMeasure(scaled), f, n));
    }

    report.limit_zero = Rat(0);
    report.limit_infinity = Rat(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        report.limit_zero += bar[i] * pow_rat(f[i], static_cast<long>(n));
        report.limit_infinity += bar[i] * f[i];
    }
    report.limit_infinity = pow_rat(report.limit_infinity, static_cast<long>(n));

    bool up = true, down = true;
    for (std::size_t i = 1; i < report.moments.size(); ++i) {
        if (report.moments[i] < report.moments[i - 1]) up = false;
        if (report.moments[i] > report.moments[i - 1]) down = false;
    }
    report.monotone = up || down;
    return report;
}

}  // namespace momenta
