#include <momenta/bell.hpp>
#include <momenta/combinatorics.hpp>
#include <momenta/polynomial.hpp>
#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace momenta;

namespace {

// x_i -> factor * a^i x_i for i = 1..arity.
SparsePoly scale_power(const SparsePoly& p, const Rat& a, const Rat& factor) {
    std::vector<Rat> scale;
    Rat power(1);
    for (unsigned i = 0; i < p.arity(); ++i) {
        power *= a;
        scale.push_back(factor * power);
    }
    return p.scale_vars(scale);
}

}  // namespace

TEST_CASE("partial Bell polynomials are bi-homogeneous") {
    Rng rng(11);
    for (int trial = 0; trial < 3; ++trial) {
        const Rat a = testsupport::draw_rat(rng, true);
        const Rat b = testsupport::draw_rat(rng, true);
        for (unsigned n = 1; n <= 10; ++n) {
            for (unsigned r = 1; r <= n; ++r) {
                const SparsePoly base = bell_partial(n, r);
                const SparsePoly scaled = scale_power(base, a, b);
                const SparsePoly expected = base * pow_rat(a, n) * pow_rat(b, r);
                CHECK((scaled - expected).is_zero());
            }
            const SparsePoly whole = bell_complete(n);
            const SparsePoly scaled = scale_power(whole, a, Rat(1));
            CHECK((scaled - whole * pow_rat(a, n)).is_zero());
        }
    }
}

TEST_CASE("complete Bell polynomials satisfy the convolution recursion") {
    for (unsigned n = 0; n <= 9; ++n) {
        // B_{n+1} = sum_k C(n,k) B_{n-k} x_{k+1}, everything in n+1 variables.
        SparsePoly rhs(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            const SparsePoly tail = bell_complete(n - k).extended(n + 1);
            rhs = rhs + tail * SparsePoly::variable(n + 1, k) * binomial(n, k);
        }
        CHECK((bell_complete(n + 1) - rhs).is_zero());
    }
}

TEST_CASE("cycle index polynomials satisfy the weighted recursion") {
    // (n+1)! Z_{n+1} = sum_{k<=n} n! Z_{n-k} x_{k+1}.
    for (unsigned n = 0; n <= 9; ++n) {
        SparsePoly rhs(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            const SparsePoly tail = cycle_index_sn(n - k).extended(n + 1);
            rhs = rhs + tail * SparsePoly::variable(n + 1, k) * factorial(n);
        }
        const SparsePoly lhs = cycle_index_sn(n + 1) * factorial(n + 1);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("complete Bell polynomials are of binomial type") {
    // B_n[x + y] = sum_k C(n,k) B_k[x] B_{n-k}[y] in 2n variables
    // (x_1..x_n, y_1..y_n).
    for (unsigned n = 1; n <= 10; ++n) {
        std::vector<SparsePoly> sum_vars;
        for (unsigned i = 0; i < n; ++i)
            sum_vars.push_back(SparsePoly::variable(2 * n, i) +
                               SparsePoly::variable(2 * n, n + i));
        const SparsePoly lhs = bell_complete(n).substitute(sum_vars);

        SparsePoly rhs(2 * n);
        for (unsigned k = 0; k <= n; ++k) {
            std::vector<SparsePoly> x_vars, y_vars;
            for (unsigned i = 0; i < k; ++i)
                x_vars.push_back(SparsePoly::variable(2 * n, i));
            for (unsigned i = 0; i < n - k; ++i)
                y_vars.push_back(SparsePoly::variable(2 * n, n + i));
            const SparsePoly left = k == 0
                                        ? SparsePoly::constant(2 * n, Rat(1))
                                        : bell_complete(k).substitute(x_vars);
            const SparsePoly right = k == n
                                         ? SparsePoly::constant(2 * n, Rat(1))
                                         : bell_complete(n - k).substitute(y_vars);
            rhs = rhs + left * right * binomial(n, k);
        }
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("cycle index equals the Bell polynomial at factorial-weighted arguments") {
    for (unsigned n = 1; n <= 10; ++n) {
        std::vector<Rat> weights;
        for (unsigned i = 1; i <= n; ++i) weights.push_back(factorial(i - 1));
        const SparsePoly lhs = cycle_index_sn(n) * factorial(n);
        const SparsePoly rhs = bell_complete(n).scale_vars(weights);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("moment and cumulant Bell polynomials invert each other symbolically") {
    for (unsigned n = 1; n <= 8; ++n) {
        std::vector<SparsePoly> stars;
        for (unsigned i = 1; i <= n; ++i)
            stars.push_back(bell_star(i).extended(n));
        const SparsePoly round_trip = bell_complete(n).substitute(stars);
        CHECK((round_trip - SparsePoly::variable(n, n - 1)).is_zero());
    }
}

TEST_CASE("Touchard polynomials count set partitions by block count") {
    for (unsigned n = 1; n <= 8; ++n) {
        const SparsePoly t = touchard(n);
        // Coefficient of z^r is the Stirling partition count B_{n,r}[1,..].
        Rat total(0);
        for (unsigned r = 1; r <= n; ++r) {
            const Rat stirling = t.coefficient({r});
            std::vector<Rat> ones(n, Rat(1));
            CHECK(stirling == bell_partial(n, r).evaluate(ones));
            total += stirling;
        }
        std::vector<Rat> ones(n, Rat(1));
        CHECK(total == bell_complete(n).evaluate(ones));
    }
}

TEST_CASE("group cycle index on the full symmetric multiset") {
    for (unsigned n = 1; n <= 7; ++n) {
        CycleTypeMultiset g;
        g.degree = n;
        for (const auto& lambda : integer_partitions(n)) {
            const Rat count = multinomial_2nd(lambda);
            g.counts[lambda] = count.get_num().get_ui();
        }
        CHECK((cycle_index_group(g) - cycle_index_sn(n)).is_zero());
    }
}

TEST_CASE("pattern inventory counts weighted multisets") {
    // Two unit-weight colors: multisets of size n from two types.
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(pattern_inventory(n, {Rat(1), Rat(1)}) == Rat(static_cast<long>(n + 1)));
    CHECK(pattern_inventory(2, {Rat(1), Rat(1)}) == Rat(3));

    // Indicator weights: multisets supported on the unit-weight colors only.
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(pattern_inventory(n, {Rat(1), Rat(0), Rat(1)}) ==
              Rat(static_cast<long>(n + 1)));
}

TEST_CASE("pattern inventory equals brute-force orbit counting") {
    // Enumerate all k^n colorings, identify orbits under coordinate
    // permutation by their sorted color multiset, and add each orbit's
    // weight product once.
    Rng rng(55);
    for (unsigned k = 1; k <= 3; ++k) {
        for (unsigned n = 1; n <= 7; ++n) {
            const std::vector<Rat> s = testsupport::draw_positive_rats(rng, k);

            std::set<std::vector<unsigned>> orbits;
            std::vector<unsigned> coloring(n, 0);
            bool done = false;
            while (!done) {
                std::vector<unsigned> key = coloring;
                std::sort(key.begin(), key.end());
                orbits.insert(key);
                done = true;
                for (unsigned i = 0; i < n; ++i) {
                    if (++coloring[i] < k) {
                        done = false;
                        break;
                    }
                    coloring[i] = 0;
                }
            }
            Rat total(0);
            for (const auto& orbit : orbits) {
                Rat weight(1);
                for (unsigned color : orbit) weight *= s[color];
                total += weight;
            }
            CHECK(pattern_inventory(n, s) == total);
        }
    }
}
