#include <momenta/combinatorics.hpp>
#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_support.hpp"

using namespace momenta;

namespace {

// OEIS A000041.
const unsigned long kPartitionCounts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
// OEIS A000110.
const unsigned long kBellNumbers[] = {1,    1,    2,     5,     15,    52,
                                      203,  877,  4140,  21147, 115975};

}  // namespace

TEST_CASE("integer partition enumeration matches known counts") {
    for (unsigned n = 0; n <= 10; ++n) {
        const auto parts = integer_partitions(n);
        CHECK(parts.size() == kPartitionCounts[n]);
        for (const auto& lambda : parts) {
            CHECK(lambda.valid());
            CHECK(lambda.n == n);
        }
        // Canonical order: strictly increasing, no duplicates.
        for (std::size_t i = 1; i < parts.size(); ++i)
            CHECK(parts[i - 1] < parts[i]);
    }
    // Exactly two parts.
    CHECK(integer_partitions(8, 2).size() == 4);  // 7+1, 6+2, 5+3, 4+4
}

TEST_CASE("partition constructors round trip") {
    const IntPartition lambda = partition_from_parts({3, 1, 1});
    CHECK(lambda.n == 5);
    CHECK(lambda.parts_count() == 3);
    CHECK(lambda.parts_ascending() == std::vector<unsigned>{1, 1, 3});
    CHECK(partition_from_freq(lambda.freq, 5) == lambda);
}

TEST_CASE("set partition shape counts recover the Faa di Bruno coefficients") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto shapes = integer_partitions(n);

        Rat shape_total(0);
        for (const auto& lambda : shapes) shape_total += faa_di_bruno(lambda);
        CHECK(shape_total == Rat(static_cast<long>(kBellNumbers[n])));

        if (n <= 9) {
            const auto blocks = set_partitions(n);
            CHECK(blocks.size() == kBellNumbers[n]);
            // Per-shape refinement: count enumerated partitions by shape.
            for (const auto& lambda : shapes) {
                unsigned long count = 0;
                for (const auto& p : blocks)
                    if (shape_of(p) == lambda) ++count;
                CHECK(Rat(static_cast<long>(count)) == faa_di_bruno(lambda));
            }
        }
    }
}

TEST_CASE("cycle type counts recover the permutation multinomials") {
    for (unsigned n = 1; n <= 10; ++n) {
        Rat total(0);
        for (const auto& lambda : integer_partitions(n))
            total += multinomial_2nd(lambda);
        CHECK(total == factorial(n));
    }
    // Set-partition and cycle-type counts differ by the cyclic orderings of
    // each block: Mnom(lambda) = Bella(lambda) * prod_i (i-1)!^{lambda_i}.
    for (unsigned n = 1; n <= 8; ++n) {
        for (const auto& lambda : integer_partitions(n)) {
            Rat orderings(1);
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned c = 0; c < lambda.freq[i - 1]; ++c)
                    orderings *= factorial(i - 1);
            CHECK(multinomial_2nd(lambda) == faa_di_bruno(lambda) * orderings);
        }
    }
}

TEST_CASE("cycle type is a conjugacy invariant") {
    Rng rng(2024);
    for (unsigned n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const Permutation pi{testsupport::draw_permutation(rng, n)};
            const Permutation tau{testsupport::draw_permutation(rng, n)};
            REQUIRE(pi.valid());
            REQUIRE(tau.valid());
            const Permutation conj = tau.compose(pi).compose(tau.inverse());
            CHECK(shape_of(conj) == shape_of(pi));
        }
    }
}

TEST_CASE("permutation composition and inverse") {
    const Permutation pi{{2, 3, 1}};
    const Permutation id{{1, 2, 3}};
    CHECK(pi.compose(pi.inverse()) == id);
    CHECK(pi.inverse().compose(pi) == id);
    CHECK(shape_of(pi).parts_ascending() == std::vector<unsigned>{3});
}

TEST_CASE("Pochhammer products obey the Chu-Vandermonde convolution") {
    Rng rng(77);
    for (int trial = 0; trial < 3; ++trial) {
        const Rat a = testsupport::draw_rat(rng, true);
        const Rat b = testsupport::draw_rat(rng, true);
        for (unsigned n = 0; n <= 10; ++n) {
            Rat sum(0);
            for (unsigned k = 0; k <= n; ++k)
                sum += binomial(n, k) * pochhammer(a, k) * pochhammer(b, n - k);
            CHECK(sum == pochhammer(a + b, n));
        }
    }
}

TEST_CASE("multiset coefficients count multisets and extend to rationals") {
    CHECK(multiset_coeff(Rat(3), 2) == Rat(6));   // multisets of size 2 over 3 types
    CHECK(multiset_coeff(Rat(1), 5) == Rat(1));
    CHECK(multiset_coeff(rat(1, 2), 2) == rat(3, 8));  // (1/2)(3/2)/2
    CHECK(multiset_coeff(Rat(4), 0) == Rat(1));
}

TEST_CASE("multi-index helpers") {
    const MultiIndex m{2, 0, 1};
    CHECK(mi_size(m) == 3);
    CHECK(mi_factorial(m) == Rat(2));
    CHECK(multinomial_1st(m) == Rat(3));  // 3!/2!
    const IntPartition lambda = multiindex_cycle_partition(m);
    CHECK(lambda.n == 3);
    CHECK(lambda.parts_ascending() == std::vector<unsigned>{1, 2});
}

TEST_CASE("set partition structural checks") {
    const auto parts = set_partitions(4);
    std::set<std::vector<std::vector<unsigned>>> seen;
    for (const auto& p : parts) {
        CHECK(p.valid());
        CHECK(p.ground_size() == 4);
        seen.insert(p.blocks);
    }
    CHECK(seen.size() == parts.size());  // no duplicates
}
