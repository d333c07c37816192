#include <momenta/egf.hpp>
#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include "doctest.h"
#include "test_support.hpp"

using namespace momenta;

TEST_CASE("exp and log invert each other") {
    Rng rng(31);
    for (int trial = 0; trial < 3; ++trial) {
        const unsigned D = 12;
        EgfSeries f(D);
        for (unsigned n = 1; n <= D; ++n) f[n] = testsupport::draw_rat(rng);

        const EgfSeries g = egf_exp(f);
        CHECK(g[0] == Rat(1));
        CHECK(egf_log(g) == f);

        EgfSeries h(D);
        h[0] = Rat(1);
        for (unsigned n = 1; n <= D; ++n) h[n] = testsupport::draw_rat(rng);
        CHECK(egf_exp(egf_log(h)) == h);
    }
}

TEST_CASE("exp splits into powers over factorials") {
    Rng rng(32);
    const unsigned D = 10;
    EgfSeries f(D);
    for (unsigned n = 1; n <= D; ++n) f[n] = testsupport::draw_rat(rng);

    EgfSeries sum(D);
    for (unsigned k = 0; k <= D; ++k) {
        const EgfSeries term = egf_pow_over_factorial(f, k);
        for (unsigned n = 0; n <= D; ++n) sum[n] += term[n];
    }
    CHECK(sum == egf_exp(f));
}

TEST_CASE("product is the binomial convolution") {
    Rng rng(33);
    const unsigned D = 8;
    EgfSeries f(D), g(D);
    for (unsigned n = 0; n <= D; ++n) {
        f[n] = testsupport::draw_rat(rng);
        g[n] = testsupport::draw_rat(rng);
    }
    const EgfSeries p = egf_mul(f, g);
    for (unsigned n = 0; n <= D; ++n) {
        Rat expected(0);
        for (unsigned m = 0; m <= n; ++m)
            expected += binomial(n, m) * f[m] * g[n - m];
        CHECK(p[n] == expected);
    }

    // exp(x) * exp(x) has coefficients 2^n.
    const EgfSeries e = EgfSeries::exponential(D);
    const EgfSeries sq = egf_mul(e, e);
    Rat power(1);
    for (unsigned n = 0; n <= D; ++n) {
        CHECK(sq[n] == power);
        power *= 2;
    }
}

TEST_CASE("exp of the all-ones series counts set partitions") {
    EgfSeries f = EgfSeries::exponential(10);
    f[0] = Rat(0);  // exp(e^t - 1) generates the set-partition counts
    const EgfSeries bell = egf_exp(f);
    const unsigned long expected[] = {1,   1,    2,    5,     15,   52,
                                      203, 877,  4140, 21147, 115975};
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(bell[n] == Rat(static_cast<long>(expected[n])));
}
