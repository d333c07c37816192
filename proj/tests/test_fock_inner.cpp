#include <momenta/combinatorics.hpp>
#include <momenta/egf.hpp>
#include <momenta/fock.hpp>
#include <momenta/random_measures.hpp>
#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace momenta;

namespace {

/// All tuples in {0..k-1}^n, odometer order.
std::vector<std::vector<unsigned>> all_tuples(unsigned k, unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> t(n, 0);
    while (true) {
        out.push_back(t);
        unsigned pos = 0;
        while (pos < n && ++t[pos] == k) t[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

/// Symmetrization (1/n!) sum_tau prod_j factors[tau(j)](x_j) as a tensor.
SymTensor symmetrized_product(unsigned k, const std::vector<TestFunction>& factors) {
    const unsigned n = static_cast<unsigned>(factors.size());
    SymTensor phi(n, k);
    for (const auto& tuple : all_tuples(k, n)) {
        if (!std::is_sorted(tuple.begin(), tuple.end())) continue;
        std::vector<unsigned> tau(n);
        std::iota(tau.begin(), tau.end(), 0u);
        Rat sum(0);
        do {
            Rat term(1);
            for (unsigned j = 0; j < n; ++j) term *= factors[tau[j]][tuple[j]];
            sum += term;
        } while (std::next_permutation(tau.begin(), tau.end()));
        phi.set(tuple, sum / factorial(n));
    }
    return phi;
}

/// Plain tensor inner product sum_x phi(x) psi(x) prod_i sigma_{x_i}.
Rat brute_inner(const FiniteMeasure& sigma, const SymTensor& phi,
                const SymTensor& psi) {
    const unsigned k = phi.ground_size();
    const unsigned n = phi.order();
    Rat sum(0);
    for (const auto& tuple : all_tuples(k, n)) {
        Rat weight(1);
        for (unsigned x : tuple) weight *= sigma.weights[x];
        sum += phi.value(tuple) * psi.value(tuple) * weight;
    }
    return sum;
}

/// sigma-expectation of the pointwise product of two functions.
Rat pairing(const FiniteMeasure& sigma, const TestFunction& f,
            const TestFunction& g) {
    Rat sum(0);
    for (std::size_t x = 0; x < f.size(); ++x)
        sum += sigma.weights[x] * f[x] * g[x];
    return sum;
}

/// Permanent of a small square matrix by direct permutation expansion.
Rat permanent(const std::vector<std::vector<Rat>>& m) {
    const std::size_t n = m.size();
    std::vector<unsigned> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    Rat sum(0);
    do {
        Rat term(1);
        for (std::size_t i = 0; i < n; ++i) term *= m[i][idx[i]];
        sum += term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return sum;
}

}  // namespace

TEST_CASE("contractions reindex the tensor along a partition") {
    SymTensor phi(2, 2);
    phi.set({0, 0}, Rat(1));
    phi.set({0, 1}, Rat(2));
    phi.set({1, 1}, Rat(3));

    const SymTensor same = contract(phi, partition_from_parts({1, 1}));
    CHECK(same.order() == 2);
    CHECK(same.value({0, 1}) == Rat(2));
    CHECK(same.value({1, 0}) == Rat(2));
    CHECK(same.value({1, 1}) == Rat(3));

    const SymTensor diag = contract(phi, partition_from_parts({2}));
    CHECK(diag.order() == 1);
    CHECK(diag.value({0}) == Rat(1));
    CHECK(diag.value({1}) == Rat(3));
}

TEST_CASE("general extended inner product extends the coherent one") {
    Rng rng(401);
    for (unsigned k = 1; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        const TestFunction phi = testsupport::draw_rats(rng, k);
        const TestFunction psi = testsupport::draw_rats(rng, k);
        for (unsigned n = 0; n <= 6; ++n) {
            const SymTensor p = SymTensor::coherent(k, n, phi);
            const SymTensor q = SymTensor::coherent(k, n, psi);
            CHECK(ext_inner_general(sigma, p, q) ==
                  ext_inner_coherent(sigma, phi, psi, n));
        }
    }
}

TEST_CASE("coherent values are the Gamma moments of the product") {
    Rng rng(402);
    const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, 3));
    const TestFunction phi = testsupport::draw_rats(rng, 3);
    const TestFunction psi = testsupport::draw_rats(rng, 3);
    TestFunction product;
    for (unsigned x = 0; x < 3; ++x) product.push_back(phi[x] * psi[x]);
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(ext_inner_coherent(sigma, phi, psi, n) ==
              gamma_measure_moment(sigma, product, n));
}

TEST_CASE("order-raising recursion holds with full weights") {
    Rng rng(403);
    for (unsigned k = 1; k <= 3; ++k) {
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        const TestFunction phi = testsupport::draw_rats(rng, k);
        const TestFunction psi = testsupport::draw_rats(rng, k);
        for (unsigned n = 0; n <= 6; ++n) {
            const auto [lhs, rhs] = recursive_identity_check(sigma, phi, psi, n);
            CHECK(lhs == rhs);
            CHECK(lhs == ext_inner_coherent(sigma, phi, psi, n + 1));
        }
    }
}

TEST_CASE("coherent states over split supports expand binomially") {
    Rng rng(404);
    const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, 3));

    // phi1, psi1 live on point 0; phi2, psi2 on points 1 and 2.
    TestFunction phi1{testsupport::draw_rat(rng), Rat(0), Rat(0)};
    TestFunction psi1{testsupport::draw_rat(rng), Rat(0), Rat(0)};
    TestFunction phi2{Rat(0), testsupport::draw_rat(rng), testsupport::draw_rat(rng)};
    TestFunction psi2{Rat(0), testsupport::draw_rat(rng), testsupport::draw_rat(rng)};

    TestFunction phi, psi;
    for (unsigned x = 0; x < 3; ++x) {
        phi.push_back(phi1[x] + phi2[x]);
        psi.push_back(psi1[x] + psi2[x]);
    }

    for (unsigned n = 0; n <= 6; ++n) {
        Rat rhs(0);
        for (unsigned j = 0; j <= n; ++j)
            rhs += binomial(n, j) * ext_inner_coherent(sigma, phi1, psi1, j) *
                   ext_inner_coherent(sigma, phi2, psi2, n - j);
        CHECK(ext_inner_coherent(sigma, phi, psi, n) == rhs);
    }
}

TEST_CASE("coherent expansion is the exponential of scaled product moments") {
    Rng rng(405);
    const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, 3));
    const TestFunction phi = testsupport::draw_rats(rng, 3);
    const TestFunction psi = testsupport::draw_rats(rng, 3);
    TestFunction product;
    for (unsigned x = 0; x < 3; ++x) product.push_back(phi[x] * psi[x]);

    const unsigned D = 8;
    EgfSeries logs(D);
    const auto powers = power_expectations(sigma, product, D);
    for (unsigned i = 1; i <= D; ++i)
        logs[i] = factorial(i - 1) * powers[i - 1];
    const EgfSeries expanded = egf_exp(logs);
    for (unsigned n = 0; n <= D; ++n)
        CHECK(expanded[n] == ext_inner_coherent(sigma, phi, psi, n));
}

TEST_CASE("tensors off the diagonal reduce to the plain inner product") {
    Rng rng(406);

    SUBCASE("two factors on two-point supports") {
        const unsigned k = 4;
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        const std::vector<TestFunction> phis{
            {testsupport::draw_rat(rng), testsupport::draw_rat(rng), Rat(0), Rat(0)},
            {Rat(0), Rat(0), testsupport::draw_rat(rng), testsupport::draw_rat(rng)}};
        const std::vector<TestFunction> psis{
            {testsupport::draw_rat(rng), testsupport::draw_rat(rng), Rat(0), Rat(0)},
            {Rat(0), Rat(0), testsupport::draw_rat(rng), testsupport::draw_rat(rng)}};
        const SymTensor phi = symmetrized_product(k, phis);
        const SymTensor psi = symmetrized_product(k, psis);
        CHECK(ext_inner_general(sigma, phi, psi) == brute_inner(sigma, phi, psi));
    }

    SUBCASE("three factors on singleton supports") {
        const unsigned k = 3;
        const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, k));
        std::vector<TestFunction> phis, psis;
        for (unsigned x = 0; x < k; ++x) {
            TestFunction f(k, Rat(0)), g(k, Rat(0));
            f[x] = testsupport::draw_rat(rng);
            g[x] = testsupport::draw_rat(rng);
            phis.push_back(f);
            psis.push_back(g);
        }
        const SymTensor phi = symmetrized_product(k, phis);
        const SymTensor psi = symmetrized_product(k, psis);
        CHECK(ext_inner_general(sigma, phi, psi) == brute_inner(sigma, phi, psi));
    }
}

TEST_CASE("diagonal strata add up to the unrestricted tensor integral") {
    Rng rng(407);
    for (unsigned k = 2; k <= 4; ++k) {
        const FiniteMeasure rho(testsupport::draw_positive_rats(rng, k));
        for (unsigned n = 1; n <= 4; ++n) {
            const SymTensor phi =
                SymTensor::coherent(k, n, testsupport::draw_rats(rng, k));
            const DiagonalDecomposition d = diagonal_decomposition(rho, phi);

            Rat strata(0);
            for (const auto& [lambda, part] : d.parts) strata += part;
            CHECK(d.total == strata);

            Rat brute(0);
            for (const auto& tuple : all_tuples(k, n)) {
                Rat weight(1);
                for (unsigned x : tuple) weight *= rho.weights[x];
                brute += phi.value(tuple) * weight;
            }
            CHECK(d.total == brute);
        }
    }
}

TEST_CASE("diagonal strata of the constant pair state") {
    SUBCASE("single ground point: everything sits on the diagonal") {
        const FiniteMeasure rho({Rat(3)});
        const SymTensor phi = SymTensor::coherent(1, 2, {Rat(1)});
        const DiagonalDecomposition d = diagonal_decomposition(rho, phi);
        CHECK(d.total == Rat(9));
        CHECK(d.parts.at(partition_from_parts({2})) == Rat(9));
        CHECK(d.parts.at(partition_from_parts({1, 1})) == Rat(0));
    }

    SUBCASE("two points split into distinct pairs and doubled points") {
        const FiniteMeasure rho({Rat(2), Rat(3)});
        const SymTensor phi = SymTensor::coherent(2, 2, {Rat(1), Rat(1)});
        const DiagonalDecomposition d = diagonal_decomposition(rho, phi);
        CHECK(d.total == Rat(25));
        CHECK(d.parts.at(partition_from_parts({1, 1})) == Rat(12));   // 2 * 2 * 3
        CHECK(d.parts.at(partition_from_parts({2})) == Rat(13));      // 4 + 9
    }
}

TEST_CASE("compensated integrals factor over disjoint supports") {
    const FiniteMeasure sigma({rat(1, 2), Rat(1), Rat(2)});

    SUBCASE("order two, exhaustive outcomes") {
        const DisjointProductFunction f{
            {{Rat(2), rat(-1, 2), Rat(0)}, {Rat(0), Rat(0), rat(1, 3)}}};
        require_disjoint(sigma, f);
        for (unsigned a = 0; a <= 6; ++a)
            for (unsigned b = 0; b <= 6; ++b)
                for (unsigned c = 0; c <= 6; ++c) {
                    const MultiIndex counts{a, b, c};
                    // n! prod_i (p(f_i) - sigma(f_i))
                    Rat clean = factorial(2);
                    for (const TestFunction& factor : f.factors) {
                        Rat p(0), s(0);
                        for (unsigned x = 0; x < 3; ++x) {
                            p += Rat(static_cast<long>(counts[x])) * factor[x];
                            s += sigma.weights[x] * factor[x];
                        }
                        clean *= p - s;
                    }
                    CHECK(msi_compensated(sigma, f, counts) == clean);
                }
    }

    SUBCASE("order three on singleton supports") {
        const DisjointProductFunction f{{{Rat(1), Rat(0), Rat(0)},
                                         {Rat(0), rat(-2, 3), Rat(0)},
                                         {Rat(0), Rat(0), Rat(5)}}};
        const MultiIndex counts{3, 1, 2};
        Rat clean = factorial(3);
        for (const TestFunction& factor : f.factors) {
            Rat p(0), s(0);
            for (unsigned x = 0; x < 3; ++x) {
                p += Rat(static_cast<long>(counts[x])) * factor[x];
                s += sigma.weights[x] * factor[x];
            }
            clean *= p - s;
        }
        CHECK(msi_compensated(sigma, f, counts) == clean);

        // Floating overload agrees with the exact one on integer rows.
        const std::vector<double> row{3.0, 1.0, 2.0};
        CHECK(msi_compensated(sigma, f, row) ==
              doctest::Approx(rat_to_double(clean)).epsilon(1e-12));
    }

    SUBCASE("overlapping supports are rejected") {
        const DisjointProductFunction bad{
            {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}}};
        CHECK_THROWS_AS(require_disjoint(sigma, bad), std::domain_error);
    }
}

TEST_CASE("integrals of different orders are orthogonal in the Poisson law") {
    Rng rng(408);
    const FiniteMeasure sigma(testsupport::draw_positive_rats(rng, 4));

    // Families supported on single points so any subset is disjoint.
    std::vector<TestFunction> atoms;
    for (unsigned x = 0; x < 4; ++x) {
        TestFunction f(4, Rat(0));
        f[x] = testsupport::draw_rat(rng, true);
        atoms.push_back(f);
    }

    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned m = 1; m <= 3; ++m) {
            const DisjointProductFunction f{
                std::vector<TestFunction>(atoms.begin(), atoms.begin() + n)};
            const DisjointProductFunction g{
                std::vector<TestFunction>(atoms.begin(), atoms.begin() + m)};
            const Rat value = msi_orthogonality(sigma, f, g);
            if (n != m) {
                CHECK(value == Rat(0));
            } else {
                std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j)
                        gram[i][j] = pairing(sigma, f.factors[i], g.factors[j]);
                CHECK(value == factorial(n) * factorial(m) * permanent(gram));
            }
        }
    }
}

TEST_CASE("orthogonality matches the spelled-out low orders") {
    const FiniteMeasure sigma({rat(1, 2), Rat(2)});
    const TestFunction f1{Rat(3), Rat(0)};
    const TestFunction f2{Rat(0), rat(-1, 2)};

    // E[I_1(f)^2] = sigma(f^2).
    const DisjointProductFunction single{{f1}};
    CHECK(msi_orthogonality(sigma, single, single) ==
          pairing(sigma, f1, f1));

    // E[I_2(f1 x f2)^2] = 2!^2 perm = 4 sigma(f1^2) sigma(f2^2) here.
    const DisjointProductFunction pair{{f1, f2}};
    CHECK(msi_orthogonality(sigma, pair, pair) ==
          Rat(4) * pairing(sigma, f1, f1) * pairing(sigma, f2, f2));
}

TEST_CASE("interacting Fock weights and the negative-binomial law") {
    const Rat half = rat(1, 2);
    CHECK(pascal_fock_weight(Rat(2), half, 0) == Rat(1));
    CHECK(pascal_fock_weight(Rat(2), half, 1) == Rat(2));
    CHECK(pascal_fock_weight(Rat(2), half, 2) == Rat(8));
    CHECK_THROWS_AS((void)pascal_fock_weight(Rat(0), half, 1), std::domain_error);
    CHECK_THROWS_AS((void)pascal_fock_weight(Rat(2), Rat(1), 1), std::domain_error);

    CHECK(negative_binomial_pmf(Rat(2), half, 0) == rat(1, 4));
    CHECK(negative_binomial_pmf(Rat(2), half, 1) == rat(1, 4));
    CHECK(negative_binomial_pmf(Rat(2), half, 2) == rat(3, 16));
    CHECK_THROWS_AS((void)negative_binomial_pmf(half, half, 1), std::domain_error);

    Rat tail(0);
    for (unsigned m = 0; m <= 200; ++m)
        tail += negative_binomial_pmf(Rat(2), half, m);
    CHECK(tail <= Rat(1));
    CHECK(Rat(1) - tail < rat(1, 1000000));
}
