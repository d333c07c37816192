#pragma once

#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/rational.hpp"

namespace momenta {

// Moment and cumulant sequences are stored 1-based: entry i holds the value
// of order i+1. The order-0 raw/central moment is identically 1 and is never
// stored; cumulants have no order-0 entry.

/// Raw moments from cumulants: mu'_n = B_n[kappa_1, ..., kappa_n].
std::vector<Rat> cumulants_to_moments(const std::vector<Rat>& kappa);

/// Cumulants from raw moments:
/// kappa_n = sum_{r=1}^{n} (-1)^{r-1} (r-1)! B_{n,r}[mu'_1, ..., mu'_r...].
/// Inverse of cumulants_to_moments.
std::vector<Rat> moments_to_cumulants(const std::vector<Rat>& raw);

/// Central moments from raw moments:
/// mu_n = sum_k C(n,k) (-1)^{n-k} mu'_1^{n-k} mu'_k  (mu'_0 = 1).
/// The output satisfies mu_1 = 0 identically.
std::vector<Rat> raw_to_central(const std::vector<Rat>& raw);

/// Raw moments from central moments and the mean:
/// mu'_n = sum_k C(n,k) mean^{n-k} mu_k  (mu_0 = 1, mu_1 = 0).
/// Throws std::domain_error unless the stored mu_1 is zero.
std::vector<Rat> central_to_raw(const std::vector<Rat>& central, const Rat& mean);

/// Supplier of multivariate moments mu'_m over a fixed number of slots.
/// Implementations must return 1 for the zero multi-index. Queries must be
/// safe to issue concurrently.
class MultiMomentProvider {
public:
    virtual ~MultiMomentProvider() = default;
    virtual unsigned arity() const = 0;
    virtual Rat moment(const MultiIndex& m) const = 0;
};

enum class CumulantPath {
    Auto,          ///< Recursion (the cheaper path).
    PartitionSum,  ///< Moebius sum over set partitions of the position set.
    Recursion,     ///< Memoized peeling of the block containing the least position.
};

/// Joint cumulant kappa_L of the variables y_i = slot selection[i] for i in L.
///
/// `positions` names L as a set of distinct indices into `selection`;
/// `selection` assigns each position a provider slot, so repeated slots model
/// repeated variables. The two computation paths evaluate
///   kappa_L = sum_r (-1)^{r-1} (r-1)! sum_{L partitioned into r blocks}
///             prod_B mu'_B                            (PartitionSum)
///   kappa_L = mu'_L - sum_{min L in I, I proper} kappa_I mu'_{L \ I}
///                                                     (Recursion)
/// and agree identically. Throws std::domain_error when L is empty or larger
/// than `order_limit` (the subset recursion costs O(3^|L|)).
Rat multivariate_cumulant(const MultiMomentProvider& p,
                          const std::vector<unsigned>& positions,
                          const std::vector<unsigned>& selection,
                          CumulantPath path = CumulantPath::Auto,
                          unsigned order_limit = 12);

enum class MomentDirection { RawToCentral, CentralToRaw };

/// Componentwise binomial transform between multivariate raw and central
/// moments:
///   mu_m  = sum_{j <= m} C(m,j) (-1)^{|m-j|} mean^{m-j} mu'_j,
///   mu'_m = sum_{j <= m} C(m,j) mean^{m-j} mu_j,
/// with C(m,j) and powers taken per component. For RawToCentral the provider
/// serves raw moments and the mean vector is read off its first moments; for
/// CentralToRaw it serves central moments and `mean` must supply one entry
/// per slot (std::invalid_argument otherwise).
Rat multivariate_raw_central(const MultiMomentProvider& p,
                             const MultiIndex& m,
                             MomentDirection direction,
                             const std::vector<Rat>& mean = {});

}  // namespace momenta
