#pragma once

#include <cstdint>
#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/mvseries.hpp"
#include "momenta/polynomial.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// Weight vector s pairing a Dirichlet parameter: one rational per type.
using WeightVector = std::vector<Rat>;

/// Parameter of a Dirichlet distribution on the standard simplex: a vector
/// of positive rationals, one per type.
struct DirichletParams {
    std::vector<Rat> alpha;

    unsigned size() const { return static_cast<unsigned>(alpha.size()); }
    /// |alpha|, the parameter total.
    Rat total() const;
    bool valid() const;
    friend bool operator==(const DirichletParams&, const DirichletParams&) = default;
};

/// Throws std::domain_error unless all entries are positive (and any paired
/// weight vector has matching length).
void validate(const DirichletParams& params);
void validate(const DirichletParams& params, const WeightVector& s);

/// n-th moment of a Poisson distribution with expectation c: the Touchard
/// polynomial T_n evaluated at c. Requires c >= 0.
Rat poisson_moment(const Rat& c, unsigned n);

/// n-th moment of a Gamma distribution with shape theta and scale k:
/// Poch(theta, n) * k^n. Requires theta, k > 0.
Rat gamma_moment(const Rat& theta, const Rat& k, unsigned n);

/// n-th moment of s . x under Dir[alpha], by the multi-index sum
/// (n!/Poch(|alpha|, n)) * sum_{|m|=n} s^m Poch(alpha, m) / m!.
Rat dirichlet_moment_multiindex(const DirichletParams& params,
                                const WeightVector& s, unsigned n);

/// The same moment through the cycle index of S_n:
/// (n!/Poch(|alpha|, n)) * Z_n[s^{*1}.alpha, ..., s^{*n}.alpha], where
/// s^{*i}.alpha = sum_j s_j^i alpha_j. Agrees with the multi-index form.
Rat dirichlet_moment_cycleindex(const DirichletParams& params,
                                const WeightVector& s, unsigned n);

/// The normalized moment Poch(|alpha|, n)/n! * mu'_n as a polynomial in the
/// weight vector s (arity = number of types): sum_{|m|=n} Poch(alpha,m)/m! s^m.
SparsePoly dirichlet_normalized_moment_poly(const DirichletParams& params,
                                            unsigned n);

/// Merge of the adjacent types i and i+1 (0-based): the contracted parameter
/// (a_1, ..., a_i + a_{i+1}, ..., a_k).
DirichletParams dirichlet_aggregate(const DirichletParams& params, unsigned i);

/// General +-contraction along a set partition of the types: block B maps to
/// a single type with parameter sum_{j in B} alpha_j. Blocks are emitted in
/// order of their least element.
DirichletParams dirichlet_aggregate(const DirichletParams& params,
                                    const SetPartition& blocks);
/// The matching contraction of a weight vector; requires the weights to be
/// constant on every block (the merged types must be indistinguishable).
WeightVector aggregate_weights(const WeightVector& s, const SetPartition& blocks);

/// N simplex points drawn from Dir[alpha] as normalized independent Gamma
/// variables. Row r depends only on (seed, r), so any worker layout yields
/// identical batches.
std::vector<std::vector<double>> dirichlet_sample(const DirichletParams& params,
                                                  std::uint64_t seed,
                                                  std::size_t count);

/// Second Humbert function coefficients: the series with
/// coeff(m) = Poch(b, m) / (Poch(c, |m|) m!) truncated at total degree D.
/// Throws std::domain_error when c is a non-positive integer (pole).
TruncSeriesMV humbert_phi2(const std::vector<Rat>& b, const Rat& c, unsigned D);

/// Fourth Lauricella function coefficients: the series with
/// coeff(m) = Poch(a, |m|) Poch(b, m) / (Poch(c, |m|) m!) truncated at D.
/// Throws std::domain_error when c is a non-positive integer (pole).
TruncSeriesMV lauricella_fd(const Rat& a, const std::vector<Rat>& b,
                            const Rat& c, unsigned D);

/// Numeric Lauricella value through the Euler integral representation
/// (1/B[a, c-a]) * integral_0^1 t^{a-1} (1-t)^{c-a-1} prod_i (1 - t x_i)^{-b_i} dt.
/// Requires c > a > 0 and max_i |x_i| < 1.
double lauricella_fd_quadrature(const Rat& a, const std::vector<Rat>& b,
                                const Rat& c, const std::vector<double>& x,
                                double tol = 1e-10);

enum class ParamLimit { Zero, Infinity };

/// Limit of the n-th moment of s . x under Dir[beta * alpha] as the scale
/// beta tends to zero (mixture of vertex point masses) or to infinity
/// (point mass at the barycenter alpha/|alpha|).
Rat dirichlet_asymptotic_moment(const DirichletParams& params,
                                const WeightVector& s, unsigned n,
                                ParamLimit limit);

/// Operations on a weighted multiset of urns and the matching functional of
/// the Dirichlet distribution.
enum class UrnOp {
    TypeAdd,    ///< Append a new type (weight, parameter) pair.
    TypeDelete, ///< Remove the last type.
    Merge,      ///< Merge adjacent equal-weight types i and i+1.
    UrnAdd,     ///< One more urn of type i: parameter alpha + e^i.
    UrnDelete,  ///< One urn of type i removed: parameter alpha - e^i.
};

struct UrnState {
    WeightVector s;
    DirichletParams params;
};

/// Result of an urn operation: the new state together with the scalar that
/// multiplies the Dirichlet functional (1 except for urn addition, which
/// carries alpha_i, and urn deletion, which carries |alpha| - 1).
struct UrnOpResult {
    UrnState state;
    Rat prefactor;
};

/// Applies one row of the urn-operation table. `i` names the type acted on
/// (ignored for TypeDelete); `new_weight`/`new_param` feed TypeAdd only.
/// Preconditions: Merge needs s_i == s_{i+1}; UrnDelete needs alpha_i > 1;
/// TypeDelete needs at least two types. Violations throw std::domain_error.
UrnOpResult urn_table_map(UrnOp op, const UrnState& state, unsigned i = 0,
                          const Rat& new_weight = Rat(0),
                          const Rat& new_param = Rat(1));

}  // namespace momenta
