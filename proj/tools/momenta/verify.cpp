#include "verify.hpp"

#include <momenta/bell.hpp>
#include <momenta/combinatorics.hpp>
#include <momenta/distributions.hpp>
#include <momenta/fock.hpp>
#include <momenta/liealg.hpp>
#include <momenta/moments.hpp>
#include <momenta/polynomial.hpp>
#include <momenta/random_measures.hpp>
#include <momenta/rng.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cli {

using namespace momenta;

namespace {

/// Small random rational in [-9, 9] with single-digit denominator; keeps
/// exact partition sums fast while exercising generic values.
Rat draw_rat(Rng& rng, bool nonzero = false) {
    long num = static_cast<long>(rng.next_u64() % 19) - 9;
    if (nonzero && num == 0) num = 1;
    const long den = static_cast<long>(rng.next_u64() % 9) + 1;
    return rat(num, den);
}

Rat draw_positive_rat(Rng& rng) {
    const long num = static_cast<long>(rng.next_u64() % 9) + 1;
    const long den = static_cast<long>(rng.next_u64() % 9) + 1;
    return rat(num, den);
}

std::vector<Rat> draw_rats(Rng& rng, std::size_t count, bool nonzero = false) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(draw_rat(rng, nonzero));
    return out;
}

std::vector<Rat> draw_positive_rats(Rng& rng, std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(draw_positive_rat(rng));
    return out;
}

/// Weights of the form 7q + 1/7 with q in [1/9, 9] stay clear of the integer
/// shifts at which ladder-action denominators develop poles.
Rat generic_weight(Rng& rng) { return Rat(7) * draw_positive_rat(rng) + rat(1, 7); }

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Track the worst absolute deviation of an exact check.
struct MaxAbs {
    Rat value;

    void update(const Rat& lhs, const Rat& rhs) {
        const Rat d = abs_rat(lhs - rhs);
        if (d > value) value = d;
    }
    bool zero() const { return value == 0; }
};

CheckRow exact_row(const std::string& name, const MaxAbs& worst,
                   std::string detail = "") {
    return CheckRow{name, worst.zero(), rat_to_string(worst.value), std::move(detail)};
}

CheckRow flag_row(const std::string& name, bool pass, unsigned failures,
                  std::string detail = "") {
    return CheckRow{name, pass, std::to_string(failures), std::move(detail)};
}

Rat eval_prefix(const SparsePoly& p, const std::vector<Rat>& x) {
    return p.evaluate(std::vector<Rat>(x.begin(), x.begin() + p.arity()));
}

std::pair<double, double> empirical_moment(
    const std::vector<std::vector<double>>& rows, const std::vector<Rat>& f,
    unsigned n) {
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& row : rows) {
        double dot = 0.0;
        for (std::size_t i = 0; i < row.size(); ++i)
            dot += rat_to_double(f[i]) * row[i];
        const double v = std::pow(dot, static_cast<double>(n));
        sum += v;
        sum_sq += v * v;
    }
    const double count = static_cast<double>(rows.size());
    const double mean = sum / count;
    const double var = sum_sq / count - mean * mean;
    return {mean, std::sqrt(std::max(var, 0.0) / count)};
}

/// Permanent by direct expansion; the orthogonality gram matrices are tiny.
Rat permanent(const std::vector<std::vector<Rat>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Rat(1);
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    Rat total = 0;
    do {
        Rat prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= a[i][cols[i]];
        total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

}  // namespace

std::vector<CheckRow> run_identities(const Config& cfg) {
    std::vector<CheckRow> rows;
    Rng rng(cfg.seed);
    const unsigned depth = std::min(cfg.D, 8u);

    {
        // B_{n+1}(x) = sum_k C(n,k) B_{n-k}(x) x_{k+1}.
        MaxAbs worst;
        const std::vector<Rat> x = draw_rats(rng, depth + 1, true);
        for (unsigned n = 1; n <= depth; ++n) {
            const Rat lhs = eval_prefix(bell_complete(n + 1), x);
            Rat rhs = 0;
            for (unsigned k = 0; k <= n; ++k)
                rhs += binomial(n, k) * eval_prefix(bell_complete(n - k), x) * x[k];
            worst.update(lhs, rhs);
        }
        rows.push_back(exact_row("bell-binomial-recurrence", worst));
    }

    {
        // n! Z_n(x) equals the complete Bell polynomial at x_i -> (i-1)! x_i.
        MaxAbs worst;
        const std::vector<Rat> x = draw_rats(rng, depth, true);
        for (unsigned n = 1; n <= depth; ++n) {
            std::vector<Rat> y(x.begin(), x.begin() + n);
            for (unsigned i = 0; i < n; ++i) y[i] *= factorial(i);
            worst.update(factorial(n) * eval_prefix(cycle_index_sn(n), x),
                         bell_complete(n).evaluate(y));
        }
        rows.push_back(exact_row("cycle-index-bell-duality", worst));
    }

    {
        // The n-th Poisson moment is the Touchard polynomial at the mean.
        MaxAbs worst;
        const Rat c = draw_positive_rat(rng);
        for (unsigned n = 0; n <= depth; ++n)
            worst.update(poisson_moment(c, n), touchard(n).evaluate({c}));
        rows.push_back(exact_row("poisson-touchard", worst));
    }

    {
        MaxAbs worst;
        const std::vector<Rat> kappa = draw_rats(rng, 10);
        const std::vector<Rat> back = moments_to_cumulants(cumulants_to_moments(kappa));
        for (std::size_t i = 0; i < kappa.size(); ++i) worst.update(kappa[i], back[i]);
        const std::vector<Rat> raw = draw_rats(rng, 10);
        const std::vector<Rat> raw_back = central_to_raw(raw_to_central(raw), raw[0]);
        for (std::size_t i = 0; i < raw.size(); ++i) worst.update(raw[i], raw_back[i]);
        rows.push_back(exact_row("moment-cumulant-round-trip", worst));
    }

    {
        // Simplex moments: multi-index sum against the cycle-index route.
        MaxAbs worst;
        for (unsigned draw = 0; draw < 2; ++draw) {
            const DirichletParams params{draw_positive_rats(rng, 3)};
            const WeightVector s = draw_rats(rng, 3);
            for (unsigned n = 1; n <= std::min(depth, 6u); ++n)
                worst.update(dirichlet_moment_multiindex(params, s, n),
                             dirichlet_moment_cycleindex(params, s, n));
        }
        rows.push_back(exact_row("simplex-moment-routes", worst));
    }

    {
        // Integer parameters: the normalized moment is a pattern inventory
        // with each weight repeated (parameter) many times.
        MaxAbs worst;
        const DirichletParams params{{Rat(2), Rat(1)}};
        const Rat w = rat(2, 3), u = rat(-1, 5);
        for (unsigned n = 1; n <= std::min(depth, 7u); ++n) {
            const Rat normalized = dirichlet_moment_cycleindex(params, {w, u}, n) *
                                   pochhammer(params.total(), n) / factorial(n);
            worst.update(normalized, pattern_inventory(n, {w, w, u}));
        }
        rows.push_back(exact_row("pattern-inventory-moments", worst));
    }

    {
        // Laplace transform of the simplicial law: direct series, termwise
        // moment sum, and the hypergeometric evaluation must agree.
        MaxAbs worst;
        std::vector<Rat> weights = draw_positive_rats(rng, 3);
        Rat total = 0;
        for (const Rat& w : weights) total += w;
        for (Rat& w : weights) w /= total;  // total mass exactly 1
        const FiniteMeasure sigma{weights};
        std::vector<Rat> f = draw_rats(rng, 3);
        for (Rat& v : f) v /= 10;  // keep every value inside (-1, 1)
        const Rat direct = df_laplace(sigma, f, depth);
        Rat termwise = 0;
        for (unsigned n = 0; n <= depth; ++n)
            termwise += df_moment(sigma, f, n) / factorial(n);
        worst.update(direct, termwise);
        worst.update(direct, humbert_phi2(sigma.weights, Rat(1), depth).evaluate(f));
        rows.push_back(exact_row("laplace-transform-routes", worst));
    }

    {
        // Integer weights make the Gamma-law Laplace transform rational.
        MaxAbs worst;
        const FiniteMeasure sigma{{Rat(2), Rat(1), Rat(3)}};
        std::vector<Rat> f = draw_rats(rng, 3);
        for (Rat& v : f) v /= 10;
        const LaplaceGammaResult res = laplace_gamma(sigma, f);
        Rat expected = 1;
        for (std::size_t i = 0; i < f.size(); ++i)
            expected *= pow_rat(1 - f[i], -sigma.weights[i].get_num().get_si());
        worst.update(res.exact ? res.exact_value : Rat(-1), expected);
        rows.push_back(exact_row("gamma-laplace-integer-mass", worst));
    }

    {
        // Truncated convolution exponential of the lifted measure agrees
        // with sigma^m / m! once the truncation passes |m|.
        MaxAbs worst;
        const FiniteMeasure sigma{draw_positive_rats(rng, 3)};
        for (unsigned draw = 0; draw < 3; ++draw) {
            MultiIndex m(3);
            for (unsigned i = 0; i < 3; ++i)
                m[i] = static_cast<unsigned>(rng.next_u64() % 3);
            const auto [lhs, rhs] = conv_exp_check(sigma, m, mi_size(m) + 2);
            worst.update(lhs, rhs);
        }
        rows.push_back(exact_row("convolution-exponential", worst));
    }

    {
        // Mass-biasing identity for the Gamma law, exact route.
        MaxAbs worst;
        const FiniteMeasure sigma{draw_positive_rats(rng, 3)};
        std::vector<SparsePoly> functional;
        for (unsigned x = 0; x < 3; ++x) {
            const SparsePoly eta = SparsePoly::variable(3, x);
            functional.push_back(eta * eta + SparsePoly::constant(3, Rat(1)));
        }
        const MeckeReport report = mecke_check(sigma, functional);
        worst.update(report.lhs_exact, report.rhs_exact);
        rows.push_back(exact_row("mass-biasing-exact", worst));
    }

    {
        // Concentration limits: the moment grid is monotone between the
        // dilute and concentrated closed forms.
        MaxAbs worst;
        unsigned monotone_failures = 0;
        const FiniteMeasure sigma{draw_positive_rats(rng, 3)};
        const std::vector<Rat> f = draw_positive_rats(rng, 3);
        const std::vector<Rat> norm = sigma.normalized();
        for (unsigned n = 2; n <= 3; ++n) {
            const DfAsymptoticReport report = df_asymptotic_check(
                sigma, f, n, {rat(1, 100), Rat(1), Rat(100)});
            Rat zero_limit = 0, mean = 0;
            for (std::size_t i = 0; i < norm.size(); ++i) {
                zero_limit += norm[i] * pow_rat(f[i], static_cast<long>(n));
                mean += norm[i] * f[i];
            }
            worst.update(report.limit_zero, zero_limit);
            worst.update(report.limit_infinity, pow_rat(mean, static_cast<long>(n)));
            if (!report.monotone) ++monotone_failures;
        }
        CheckRow row = exact_row("concentration-limits", worst);
        if (monotone_failures > 0) {
            row.pass = false;
            row.detail = "grid not monotone";
        }
        rows.push_back(row);
    }

    return rows;
}

std::vector<CheckRow> run_montecarlo(const Config& cfg) {
    std::vector<CheckRow> rows;
    const FiniteMeasure sigma{{rat(1, 2), Rat(1), Rat(2)}};
    const std::vector<Rat> f = {Rat(1), rat(-1, 2), rat(1, 3)};

    struct SamplerCase {
        const char* name;
        MeasureKind kind;
        Rat (*closed)(const FiniteMeasure&, const TestFunction&, unsigned long);
    };
    const SamplerCase cases[] = {
        {"poisson-sampler-moments", MeasureKind::Poisson,
         [](const FiniteMeasure& s, const TestFunction& g, unsigned long n) {
             return poisson_measure_moment(s, g, n);
         }},
        {"gamma-sampler-moments", MeasureKind::Gamma,
         [](const FiniteMeasure& s, const TestFunction& g, unsigned long n) {
             return gamma_measure_moment(s, g, n);
         }},
        {"simplicial-sampler-moments", MeasureKind::DirichletFerguson,
         [](const FiniteMeasure& s, const TestFunction& g, unsigned long n) {
             return df_moment(s, g, n);
         }},
    };

    for (const SamplerCase& c : cases) {
        const MeasureSampleBatch batch = sample_measure(c.kind, sigma, cfg.seed, cfg.N);
        double worst_z = 0.0;
        for (unsigned n = 1; n <= 4; ++n) {
            const auto [mean, se] = empirical_moment(batch.samples, f, n);
            const double closed = rat_to_double(c.closed(sigma, f, n));
            if (se > 0.0) worst_z = std::max(worst_z, std::abs(mean - closed) / se);
        }
        rows.push_back(CheckRow{c.name, worst_z < cfg.tolerance, float17(worst_z),
                                "samples " + std::to_string(cfg.N)});
    }

    {
        // Total mass of the Gamma sampler carries one-dimensional moments.
        const MeasureSampleBatch batch =
            sample_measure(MeasureKind::Gamma, sigma, cfg.seed, cfg.N);
        const std::vector<Rat> ones(3, Rat(1));
        double worst_z = 0.0;
        for (unsigned n = 1; n <= 3; ++n) {
            const auto [mean, se] = empirical_moment(batch.samples, ones, n);
            const double closed = rat_to_double(gamma_moment(sigma.total(), Rat(1), n));
            if (se > 0.0) worst_z = std::max(worst_z, std::abs(mean - closed) / se);
        }
        rows.push_back(CheckRow{"gamma-total-mass", worst_z < cfg.tolerance,
                                float17(worst_z), "samples " + std::to_string(cfg.N)});
    }

    {
        // Mass-biasing identity estimated by sampling.
        std::vector<SparsePoly> functional;
        for (unsigned x = 0; x < 3; ++x) {
            const SparsePoly eta = SparsePoly::variable(3, x);
            functional.push_back(eta * eta + SparsePoly::constant(3, Rat(1)));
        }
        const MeckeReport report = mecke_check(sigma, functional, cfg.seed, cfg.N);
        const double z =
            report.diff_se > 0.0 ? std::abs(report.lhs - report.rhs) / report.diff_se : 0.0;
        rows.push_back(CheckRow{"mass-biasing-sampled", z < cfg.tolerance, float17(z),
                                "samples " + std::to_string(report.samples)});
    }

    {
        // Total charge decouples from the simplicial part.
        const DecompositionReport report =
            decomposition_check(sigma, {Rat(1), rat(1, 2), rat(-1, 4)}, 3, cfg.seed, cfg.N);
        double worst_z = 0.0;
        for (const double z : report.charge_moment_z)
            worst_z = std::max(worst_z, std::abs(z));
        const bool pass =
            report.moments_pass && report.product_pass && report.correlation_pass;
        rows.push_back(CheckRow{"charge-simplex-decoupling", pass, float17(worst_z),
                                "correlation " + float17(report.correlation)});
    }

    return rows;
}

std::vector<CheckRow> run_fock(const Config& cfg) {
    std::vector<CheckRow> rows;
    Rng rng(cfg.seed);
    const unsigned depth = std::min(cfg.D, 6u);

    {
        // Coherent-state inner products through the general contraction sum.
        MaxAbs worst;
        for (unsigned k = 2; k <= 3; ++k) {
            const FiniteMeasure sigma{draw_positive_rats(rng, k)};
            const TestFunction phi = draw_rats(rng, k);
            const TestFunction psi = draw_rats(rng, k);
            for (unsigned n = 1; n <= std::min(depth, 5u); ++n) {
                worst.update(ext_inner_general(sigma, SymTensor::coherent(k, n, phi),
                                               SymTensor::coherent(k, n, psi)),
                             ext_inner_coherent(sigma, phi, psi, n));
            }
        }
        rows.push_back(exact_row("coherent-general-agreement", worst));
    }

    {
        // Order-raising recursion.
        MaxAbs worst;
        for (unsigned k = 2; k <= 3; ++k) {
            const FiniteMeasure sigma{draw_positive_rats(rng, k)};
            const TestFunction phi = draw_rats(rng, k);
            const TestFunction psi = draw_rats(rng, k);
            for (unsigned n = 1; n <= std::min(depth, 5u); ++n) {
                const auto [lhs, rhs] = recursive_identity_check(sigma, phi, psi, n);
                worst.update(lhs, rhs);
            }
        }
        rows.push_back(exact_row("order-raising-recursion", worst));
    }

    {
        // Diagonal strata of the tensor integral sum to the full integral;
        // the constant 2-tensor splits 25 = 12 + 13 on weights (2, 3).
        MaxAbs worst;
        const FiniteMeasure rho{{Rat(2), Rat(3)}};
        const SymTensor phi = SymTensor::coherent(2, 2, {Rat(1), Rat(1)});
        const DiagonalDecomposition dec = diagonal_decomposition(rho, phi);
        Rat strata = 0;
        for (const auto& [shape, value] : dec.parts) strata += value;
        worst.update(dec.total, strata);
        worst.update(dec.total, Rat(25));
        worst.update(dec.parts.at(partition_from_parts({1, 1})), Rat(12));
        worst.update(dec.parts.at(partition_from_parts({2})), Rat(13));

        const FiniteMeasure rho2{draw_positive_rats(rng, 3)};
        const TestFunction g = draw_rats(rng, 3);
        for (unsigned n = 2; n <= std::min(depth, 4u); ++n) {
            const DiagonalDecomposition d = diagonal_decomposition(
                rho2, SymTensor::coherent(3, n, g));
            Rat sum = 0;
            for (const auto& [shape, value] : d.parts) sum += value;
            worst.update(d.total, sum);
        }
        rows.push_back(exact_row("diagonal-strata-sum", worst));
    }

    {
        // Orthogonality of compensated stochastic integrals: zero across
        // orders, n! times the permanent of the pairing gram on the diagonal.
        MaxAbs worst;
        const FiniteMeasure sigma{draw_positive_rats(rng, 4)};
        const auto singleton = [&](unsigned point, const Rat& value) {
            TestFunction v(4, Rat(0));
            v[point] = value;
            return v;
        };
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned m = 1; m <= 3; ++m) {
                DisjointProductFunction f, g;
                for (unsigned i = 0; i < n; ++i)
                    f.factors.push_back(singleton(i, draw_rat(rng, true)));
                for (unsigned j = 0; j < m; ++j)
                    g.factors.push_back(singleton(j, draw_rat(rng, true)));
                const Rat actual = msi_orthogonality(sigma, f, g);
                Rat expected = 0;
                if (n == m) {
                    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n));
                    for (unsigned i = 0; i < n; ++i)
                        for (unsigned j = 0; j < n; ++j)
                            for (unsigned x = 0; x < 4; ++x)
                                gram[i][j] +=
                                    sigma.weights[x] * f.factors[i][x] * g.factors[j][x];
                    expected = factorial(n) * factorial(n) * permanent(gram);
                }
                worst.update(actual, expected);
            }
        }
        rows.push_back(exact_row("integral-orthogonality", worst));
    }

    {
        // Particle weights of the Pascal structure and the matching
        // negative-binomial mass function.
        MaxAbs worst;
        for (unsigned long n = 0; n <= 4; ++n)
            worst.update(pascal_fock_weight(Rat(2), rat(1, 2), n),
                         factorial(n) * pow_rat(Rat(2), static_cast<long>(n)));
        worst.update(negative_binomial_pmf(Rat(1), rat(1, 4), 0), rat(1, 4));
        worst.update(negative_binomial_pmf(Rat(1), rat(1, 4), 1), rat(3, 16));
        Rat tail = 0;
        for (unsigned long m = 0; m <= 60; ++m)
            tail += negative_binomial_pmf(Rat(2), rat(1, 3), m);
        const bool tail_ok = tail <= 1 && Rat(1) - tail < rat(1, 1000000);
        CheckRow row = exact_row("pascal-particle-weights", worst);
        if (!tail_ok) {
            row.pass = false;
            row.detail = "mass function tail out of bounds";
        }
        rows.push_back(row);
    }

    return rows;
}

std::vector<CheckRow> run_liealg(const Config& cfg, unsigned k, unsigned D) {
    std::vector<CheckRow> rows;
    Rng rng(cfg.seed);

    {
        // Closed-form action of every generator on both basis families.
        MaxAbs worst;
        unsigned failures = 0, count = 0;

        std::vector<std::string> two_slot;
        for (unsigned i = 1; i <= k; ++i) two_slot.push_back("J" + std::to_string(i));
        for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = 1; j <= k; ++j)
                if (i != j)
                    two_slot.push_back("M" + std::to_string(i) + std::to_string(j));
        for (unsigned i = 1; i <= k; ++i) two_slot.push_back("E+" + std::to_string(i));
        for (unsigned i = 1; i <= k; ++i) two_slot.push_back("E-" + std::to_string(i));

        BasisParams phi2;
        for (unsigned i = 0; i < k; ++i) phi2.b.push_back(generic_weight(rng));
        phi2.c = generic_weight(rng);
        for (const std::string& name : two_slot) {
            const ActionReport report =
                verify_action(BasisFamily::HumbertPhi2, name, phi2, D);
            if (!report.pass) ++failures;
            if (report.max_abs_discrepancy > worst.value)
                worst.value = report.max_abs_discrepancy;
            ++count;
        }

        std::vector<std::string> three_slot = {"Ja", "Jc", "Ec"};
        for (unsigned i = 1; i <= k; ++i) three_slot.push_back("Jb" + std::to_string(i));
        for (unsigned i = 1; i <= k; ++i) three_slot.push_back("Eb" + std::to_string(i));
        for (unsigned i = 1; i <= k; ++i) three_slot.push_back("Eabc" + std::to_string(i));

        BasisParams fd;
        fd.a = generic_weight(rng);
        for (unsigned i = 0; i < k; ++i) fd.b.push_back(generic_weight(rng));
        fd.c = generic_weight(rng);
        const unsigned fd_depth = std::min(D, 5u);
        for (const std::string& name : three_slot) {
            const ActionReport report =
                verify_action(BasisFamily::LauricellaFd, name, fd, fd_depth);
            if (!report.pass) ++failures;
            if (report.max_abs_discrepancy > worst.value)
                worst.value = report.max_abs_discrepancy;
            ++count;
        }

        CheckRow row = exact_row("closed-form-actions", worst,
                                 std::to_string(count) + " operators");
        if (failures > 0) row.pass = false;
        rows.push_back(row);
    }

    {
        // Bracket closure of the ladder generators.
        unsigned failures = 0;
        for (unsigned i = 1; i <= k; ++i) {
            const LieOperator J = op_j_tilde(k, i);
            const LieOperator up = op_raise(k, i);
            const LieOperator down = op_lower(k, i);
            if (!(commutator(up, down) == J)) ++failures;
            if (!(commutator(J, up) == Rat(2) * up)) ++failures;
            if (!(commutator(J, down) == Rat(-2) * down)) ++failures;
        }
        for (unsigned i = 1; i <= k; ++i) {
            for (unsigned j = 1; j <= k; ++j) {
                if (i == j) continue;
                const LieOperator Mij = op_mix(k, i, j);
                const LieOperator Mji = op_mix(k, j, i);
                const LieOperator H = op_j_tilde(k, i) - op_j_tilde(k, j);
                if (!(commutator(Mij, Mji) == H)) ++failures;
                if (!(commutator(H, Mij) == Rat(2) * Mij)) ++failures;
                if (!(commutator(Mij, op_lower(k, i)) == -op_lower(k, j))) ++failures;
                if (!(commutator(Mji, op_raise(k, i)) == op_raise(k, j))) ++failures;
            }
        }
        rows.push_back(flag_row("bracket-closure", failures == 0, failures));
    }

    {
        // Structure constants: dimension, antisymmetry, Jacobi, and a
        // non-degenerate Killing form.
        const StructureConstants sc = structure_constants(k);
        const unsigned dim = k * (k + 2);
        unsigned failures = 0;
        if (sc.dimension() != dim) ++failures;
        if (!antisymmetry_holds(sc)) ++failures;
        if (!jacobi_holds(sc)) ++failures;
        if (killing_nondegeneracy(sc) == 0) ++failures;
        rows.push_back(flag_row("structure-constants", failures == 0, failures,
                                "dim " + std::to_string(dim)));
    }

    {
        // Relabeling the ground points is a bracket-table isomorphism.
        unsigned failures = 0;
        std::vector<unsigned> identity(k);
        for (unsigned i = 0; i < k; ++i) identity[i] = i + 1;
        const EquivarianceReport id_report =
            permutation_equivariance(k, Permutation{identity});
        if (!id_report.table_invariant) ++failures;
        for (unsigned i = 0; i < k; ++i)
            if (id_report.diagonal_image[i] != i) ++failures;

        if (k >= 2) {
            std::vector<unsigned> swapped = identity;
            std::swap(swapped[0], swapped[1]);
            const EquivarianceReport report =
                permutation_equivariance(k, Permutation{swapped});
            if (!report.table_invariant) ++failures;
            if (report.diagonal_image[0] != 1 || report.diagonal_image[1] != 0)
                ++failures;
        }
        rows.push_back(flag_row("relabeling-equivariance", failures == 0, failures));
    }

    return rows;
}

Json report_from_rows(const std::vector<CheckRow>& rows) {
    Json checks = Json::array();
    std::size_t passed = 0;
    for (const CheckRow& row : rows) {
        Json entry;
        entry["name"] = row.name;
        entry["status"] = row.pass ? "pass" : "fail";
        entry["discrepancy"] = row.discrepancy;
        if (!row.detail.empty()) entry["detail"] = row.detail;
        checks.push_back(std::move(entry));
        if (row.pass) ++passed;
    }
    Json doc;
    doc["checks"] = std::move(checks);
    doc["passed"] = passed;
    doc["failed"] = rows.size() - passed;
    return doc;
}

}  // namespace cli
