#pragma once

#include <map>

#include "momenta/combinatorics.hpp"
#include "momenta/polynomial.hpp"

namespace momenta {

/// Partial Bell polynomial B_{n,r} in variables x1..xn: the sum over the
/// partitions of n into exactly r parts of faa_di_bruno(lambda) * x^lambda.
/// Requires r <= n.
SparsePoly bell_partial(unsigned n, unsigned r);

/// Complete Bell polynomial B_n = sum_r B_{n,r}; B_0 = 1.
SparsePoly bell_complete(unsigned n);

/// Touchard polynomial T_n[x] = B_n with every variable set to the single
/// variable x (univariate result).
SparsePoly touchard(unsigned n);

/// Cycle index polynomial of the symmetric group S_n:
/// Z_n = (1/n!) * sum over partitions of multinomial_2nd(lambda) * x^lambda.
SparsePoly cycle_index_sn(unsigned n);

/// A permutation group given by its cycle-type census: for each cycle type
/// the number of group elements having it. All types partition the same n.
struct CycleTypeMultiset {
    std::map<IntPartition, unsigned long> counts;
    unsigned degree = 0;

    /// Group order (total multiplicity).
    unsigned long order() const;
    /// Census of the full symmetric group S_n.
    static CycleTypeMultiset symmetric_group(unsigned n);
    /// Census of the trivial group on [n].
    static CycleTypeMultiset trivial_group(unsigned n);
    /// Census of the cyclic group C_n generated by an n-cycle.
    static CycleTypeMultiset cyclic_group(unsigned n);
};

/// Cycle index (1/#G) * sum over group elements of x^{cycle type}.
/// Throws std::domain_error on an empty census.
SparsePoly cycle_index_group(const CycleTypeMultiset& g);

/// The inverse-direction Bell polynomial
/// B*_n = sum_{r=1}^{n} (-1)^{r-1} (r-1)! B_{n,r},
/// whose evaluation at raw moments yields the n-th cumulant. Requires n >= 1.
SparsePoly bell_star(unsigned n);

/// Pattern inventory: Z_n evaluated at the power sums p_i = sum_j s_j^i.
/// Counts weighted orbits of n-element arrangements under S_n.
Rat pattern_inventory(unsigned n, const std::vector<Rat>& s);

}  // namespace momenta
