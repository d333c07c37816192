#include <momenta/distributions.hpp>
#include <momenta/moments.hpp>
#include <momenta/polynomial.hpp>
#include <momenta/random_measures.hpp>
#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace momenta;

namespace {

struct MomentStats {
    double mean = 0.0;
    double se = 0.0;
};

/// Sample mean and standard error of (s . row)^n over a batch.
MomentStats empirical_moment(const std::vector<std::vector<double>>& rows,
                             const TestFunction& f, unsigned n) {
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& row : rows) {
        double dot = 0.0;
        for (std::size_t i = 0; i < row.size(); ++i)
            dot += rat_to_double(f[i]) * row[i];
        const double value = std::pow(dot, static_cast<double>(n));
        sum += value;
        sum_sq += value * value;
    }
    const double count = static_cast<double>(rows.size());
    MomentStats stats;
    stats.mean = sum / count;
    const double variance = sum_sq / count - stats.mean * stats.mean;
    stats.se = std::sqrt(variance > 0.0 ? variance / count : 0.0);
    return stats;
}

}  // namespace

TEST_CASE("power expectations accumulate pointwise") {
    const FiniteMeasure sigma({rat(1, 2), Rat(2)});
    const TestFunction f{Rat(3), rat(-1, 2)};
    const auto powers = power_expectations(sigma, f, 3);
    REQUIRE(powers.size() == 3);
    CHECK(powers[0] == rat(1, 2));            // 3/2 - 1
    CHECK(powers[1] == Rat(5));               // 9/2 + 1/2
    CHECK(powers[2] == rat(53, 4));           // 27/2 - 1/4
}

TEST_CASE("gamma measure moments and cumulants are dual") {
    Rng rng(301);
    for (unsigned k = 1; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        const TestFunction f = testsupport::draw_rats(rng, k);

        std::vector<Rat> raw, kappa;
        for (unsigned n = 1; n <= 8; ++n) {
            raw.push_back(gamma_measure_moment(sigma, f, n));
            kappa.push_back(gamma_measure_cumulant(sigma, f, n));
        }
        CHECK(moments_to_cumulants(raw) == kappa);

        // The cumulants themselves are scaled power expectations.
        const auto powers = power_expectations(sigma, f, 8);
        for (unsigned n = 1; n <= 8; ++n)
            CHECK(kappa[n - 1] == factorial(n - 1) * powers[n - 1]);
    }
}

TEST_CASE("poisson measure cumulants are the power expectations") {
    Rng rng(302);
    for (unsigned k = 1; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        const TestFunction f = testsupport::draw_rats(rng, k);

        std::vector<Rat> raw;
        for (unsigned n = 1; n <= 8; ++n)
            raw.push_back(poisson_measure_moment(sigma, f, n));
        const std::vector<Rat> kappa = moments_to_cumulants(raw);
        const auto powers = power_expectations(sigma, f, 8);
        for (unsigned n = 1; n <= 8; ++n) CHECK(kappa[n - 1] == powers[n - 1]);
    }
}

TEST_CASE("compound jump cumulants specialize to the plain counting case") {
    Rng rng(303);
    const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, 3));
    const LevyMoments unit = LevyMoments::point_mass_at_one();

    // Mixed cumulant of (eta(f1), eta(f2)) at multi-index m.
    const std::vector<TestFunction> f{testsupport::draw_rats(rng, 3),
                                      testsupport::draw_rats(rng, 3)};
    for (unsigned a = 0; a <= 3; ++a) {
        for (unsigned b = 0; a + b <= 4 && b <= 3; ++b) {
            if (a + b == 0) continue;
            Rat expected(0);
            for (unsigned x = 0; x < 3; ++x)
                expected += sigma.weights[x] *
                            pow_rat(f[0][x], static_cast<long>(a)) *
                            pow_rat(f[1][x], static_cast<long>(b));
            CHECK(cpt_cumulant(sigma, unit, MultiIndex{a, b}, f) == expected);
        }
    }

    // Gamma intensity reproduces the gamma-measure cumulants.
    const LevyMoments gamma_tail = LevyMoments::gamma_intensity(Rat(1), Rat(1));
    const TestFunction g = testsupport::draw_rats(rng, 3);
    for (unsigned n = 1; n <= 6; ++n) {
        MultiIndex m{n};
        CHECK(cpt_cumulant(sigma, gamma_tail, m, {g}) ==
              gamma_measure_cumulant(sigma, g, n));
    }
}

TEST_CASE("simplex projections match the normalized-charge moments") {
    Rng rng(304);
    for (unsigned k = 2; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        const TestFunction f = testsupport::draw_rats(rng, k);
        const DirichletParams params{sigma.weights};
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(df_moment(sigma, f, n) ==
                  dirichlet_moment_cycleindex(params, f, n));
        }
    }
}

TEST_CASE("exponential transform of the simplex law sums moments over factorials") {
    const FiniteMeasure sigma({rat(1, 3), rat(2, 3)});  // unit total mass
    const TestFunction f{rat(1, 4), rat(-1, 8)};
    const unsigned D = 8;

    Rat direct(0);
    for (unsigned n = 0; n <= D; ++n)
        direct += df_moment(sigma, f, n) / factorial(n);
    CHECK(df_laplace(sigma, f, D) == direct);

    // The same value through the hypergeometric series of the parameters.
    const TruncSeriesMV series = humbert_phi2(sigma.weights, Rat(1), D);
    CHECK(series.evaluate(f) == df_laplace(sigma, f, D));
}

TEST_CASE("gamma transform factorizes over atoms") {
    const FiniteMeasure sigma({Rat(2), Rat(1), Rat(3)});
    const TestFunction f{rat(1, 2), rat(-1, 3), rat(1, 5)};
    const auto result = laplace_gamma(sigma, f);
    REQUIRE(result.exact);
    // prod_i (1 - f_i)^{-sigma_i} with integer exponents.
    const Rat expected = pow_rat(rat(1, 2), -2) * pow_rat(rat(4, 3), -1) *
                         pow_rat(rat(4, 5), -3);
    CHECK(result.exact_value == expected);

    const auto inexact = laplace_gamma(FiniteMeasure({rat(1, 2)}), {rat(1, 2)});
    CHECK_FALSE(inexact.exact);
    CHECK(inexact.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("truncated convolution exponential recovers the product measure") {
    Rng rng(305);
    for (unsigned k = 1; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        for (unsigned total = 0; total <= 6; ++total) {
            for (const auto& m : multi_indices_of_total(k, total)) {
                const auto [lhs, rhs] = conv_exp_check(sigma, m, 10);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("mass-biased sampling balances the intensity shift exactly") {
    Rng rng(306);
    for (unsigned k = 1; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));

        // F = 1, F = eta_x and F = eta_x^2 for every atom x.
        std::vector<std::vector<SparsePoly>> functionals;
        functionals.push_back(
            std::vector<SparsePoly>(k, SparsePoly::constant(k, Rat(1))));
        std::vector<SparsePoly> linear, square;
        for (unsigned x = 0; x < k; ++x) {
            linear.push_back(SparsePoly::variable(k, x));
            square.push_back(SparsePoly::variable(k, x) *
                             SparsePoly::variable(k, x));
        }
        functionals.push_back(linear);
        functionals.push_back(square);

        for (const auto& functional : functionals) {
            const MeckeReport report = mecke_check(sigma, functional);
            REQUIRE(report.exact);
            CHECK(report.lhs_exact == report.rhs_exact);
        }
    }
}

TEST_CASE("interpolation endpoints of the simplex family") {
    Rng rng(307);
    const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, 3));
    // Order-one test values keep the extreme-concentration error terms well
    // inside the comparison band.
    TestFunction f;
    for (const Rat& v : testsupport::draw_rats(rng, 3)) f.push_back(v / 10);
    const std::vector<Rat> grid{rat(1, 10000), Rat(1), Rat(10000)};

    for (unsigned n = 1; n <= 4; ++n) {
        const DfAsymptoticReport report = df_asymptotic_check(sigma, f, n, grid);
        REQUIRE(report.moments.size() == grid.size());

        const auto normalized = sigma.normalized();
        Rat vertex_mix(0), mean(0);
        for (unsigned i = 0; i < 3; ++i) {
            vertex_mix += normalized[i] * pow_rat(f[i], static_cast<long>(n));
            mean += normalized[i] * f[i];
        }
        CHECK(report.limit_zero == vertex_mix);
        CHECK(report.limit_infinity == pow_rat(mean, static_cast<long>(n)));

        CHECK(std::abs(rat_to_double(report.moments.front() - vertex_mix)) < 1e-3);
        CHECK(std::abs(rat_to_double(report.moments.back() -
                                     pow_rat(mean, static_cast<long>(n)))) < 1e-3);
    }
}

TEST_CASE("sampled measures reproduce their closed-form moments") {
    const FiniteMeasure sigma({rat(1, 2), Rat(1), Rat(2)});
    const TestFunction f{Rat(1), rat(-1, 2), rat(1, 3)};
    const std::uint64_t seed = 0;
    const std::size_t N = 200000;

    SUBCASE("independent count masses") {
        const auto batch = sample_measure(MeasureKind::Poisson, sigma, seed, N);
        REQUIRE(batch.samples.size() == N);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto stats = empirical_moment(batch.samples, f, n);
            const double exact =
                rat_to_double(poisson_measure_moment(sigma, f, n));
            CHECK(std::abs(stats.mean - exact) < 4 * stats.se);
        }
    }

    SUBCASE("independent gamma masses") {
        const auto batch = sample_measure(MeasureKind::Gamma, sigma, seed, N);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto stats = empirical_moment(batch.samples, f, n);
            const double exact = rat_to_double(gamma_measure_moment(sigma, f, n));
            CHECK(std::abs(stats.mean - exact) < 4 * stats.se);
        }
        // Total charge carries the moments of its one-dimensional law.
        const TestFunction ones(3, Rat(1));
        for (unsigned n = 1; n <= 3; ++n) {
            const auto stats = empirical_moment(batch.samples, ones, n);
            const double exact =
                rat_to_double(gamma_moment(sigma.total(), Rat(1), n));
            CHECK(std::abs(stats.mean - exact) < 4 * stats.se);
        }
    }

    SUBCASE("normalized rows") {
        const auto batch =
            sample_measure(MeasureKind::DirichletFerguson, sigma, seed, N);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto stats = empirical_moment(batch.samples, f, n);
            const double exact = rat_to_double(df_moment(sigma, f, n));
            CHECK(std::abs(stats.mean - exact) < 4 * stats.se);
        }
    }

    SUBCASE("same seed, same batch") {
        const auto a = sample_measure(MeasureKind::Gamma, sigma, 41, 512);
        const auto b = sample_measure(MeasureKind::Gamma, sigma, 41, 512);
        CHECK(a.samples == b.samples);
    }
}

TEST_CASE("total charge is independent of the normalized shape") {
    const FiniteMeasure sigma({rat(1, 2), Rat(1), Rat(2)});
    const TestFunction g{Rat(1), rat(1, 2), rat(-1, 4)};
    const std::size_t N = 200000;
    const DecompositionReport report = decomposition_check(sigma, g, 3, 0, N);
    CHECK(report.samples == N);
    CHECK(report.moments_pass);
    CHECK(report.product_pass);
    CHECK(report.correlation_pass);
    CHECK(std::abs(report.correlation) < report.correlation_bound);
    CHECK(report.correlation_bound ==
          doctest::Approx(4.0 / std::sqrt(static_cast<double>(N))));
}

TEST_CASE("domain errors surface as exceptions") {
    CHECK_THROWS_AS((void)FiniteMeasure({Rat(1), Rat(-1)}), std::invalid_argument);
    const FiniteMeasure sigma({Rat(1)});
    CHECK_THROWS_AS((void)gamma_measure_moment(sigma, {Rat(1), Rat(2)}, 2),
                    std::invalid_argument);
}
