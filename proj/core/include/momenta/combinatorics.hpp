#pragma once

#include <optional>
#include <vector>

#include "momenta/rational.hpp"

namespace momenta {

/// Multi-index: a tuple of non-negative integers. |m| denotes the entry sum.
using MultiIndex = std::vector<unsigned>;

/// Entry sum |m|.
unsigned long mi_size(const MultiIndex& m);

/// m! = prod_i m_i!.
Rat mi_factorial(const MultiIndex& m);

/// Integer partition of n in frequency representation: freq[i] counts the
/// parts of size i+1, so sum_i (i+1)*freq[i] == n. The freq vector always has
/// length n (empty for n == 0), which makes lexicographic comparison of
/// partitions of equal n well defined.
struct IntPartition {
    std::vector<unsigned> freq;
    unsigned n = 0;

    /// Number of parts r = sum_i freq[i].
    unsigned parts_count() const;

    /// Part sizes in ascending order, e.g. freq=(1,1,0) -> {1,2}.
    std::vector<unsigned> parts_ascending() const;

    /// Validates the frequency/total invariant.
    bool valid() const;

    friend bool operator==(const IntPartition&, const IntPartition&) = default;
    /// Lexicographic on (n, freq); used for canonical ordering and map keys.
    bool operator<(const IntPartition& other) const;
};

/// Build a partition from its frequency vector (padded/trimmed to length n).
IntPartition partition_from_freq(std::vector<unsigned> freq, unsigned n);

/// Build a partition from a list of part sizes (any order).
IntPartition partition_from_parts(const std::vector<unsigned>& parts);

/// All partitions of n, in ascending lexicographic order of frequency
/// vectors; when r is given, only those with exactly r parts.
/// n = 0 yields the single empty partition (when r is absent or 0).
std::vector<IntPartition> integer_partitions(unsigned n,
                                             std::optional<unsigned> r = std::nullopt);

/// Set partition of [n] = {1, ..., n}: disjoint non-empty blocks covering [n],
/// each block sorted, blocks ordered by least element.
struct SetPartition {
    std::vector<std::vector<unsigned>> blocks;

    unsigned ground_size() const;
    bool valid() const;
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// All set partitions of [n], n >= 1, in lexicographic order of their
/// restricted-growth strings. Throws std::domain_error for n == 0.
std::vector<SetPartition> set_partitions(unsigned n);

/// Permutation of [n] in one-line notation (1-based entries).
struct Permutation {
    std::vector<unsigned> one_line;

    unsigned size() const { return static_cast<unsigned>(one_line.size()); }
    bool valid() const;
    /// Cycle lengths, ascending.
    std::vector<unsigned> cycle_lengths() const;
    /// Composition (this after other): (a*b)(i) = a[b[i]].
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Block-size profile of a set partition: freq[i-1] = #blocks of size i.
IntPartition shape_of(const SetPartition& p);

/// Cycle type of a permutation as an integer partition.
IntPartition shape_of(const Permutation& p);

/// n! / (prod_i (i!)^{lambda_i} lambda_i!) for lambda a partition of n with
/// part sizes i; counts the set partitions of [n] with shape lambda.
Rat faa_di_bruno(const IntPartition& lambda);

/// n! / (prod_i i^{lambda_i} lambda_i!); counts the permutations of [n] with
/// cycle type lambda.
Rat multinomial_2nd(const IntPartition& lambda);

/// Binomial coefficient (|m| choose m) = |m|!/prod m_i!.
Rat multinomial_1st(const MultiIndex& m);

/// Pochhammer(alpha, n)/n!, the multiset coefficient; for integer alpha it
/// counts size-n multisets over alpha types. Requires alpha > 0.
Rat multiset_coeff(const Rat& alpha, unsigned n);

/// The partition whose parts are the non-zero entries of m; it partitions |m|.
IntPartition multiindex_cycle_partition(const MultiIndex& m);

}  // namespace momenta
