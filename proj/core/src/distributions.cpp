#include "momenta/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "momenta/bell.hpp"
#include "momenta/quadrature.hpp"
#include "momenta/rng.hpp"

namespace momenta {

namespace {

/// Poch(alpha, m) = prod_i Poch(alpha_i, m_i).
Rat pochhammer_mi(const std::vector<Rat>& alpha, const MultiIndex& m) {
    Rat prod = 1;
    for (unsigned i = 0; i < m.size(); ++i) prod *= pochhammer(alpha[i], m[i]);
    return prod;
}

/// True when x is an integer <= 0 (a pole of Poch(x, n)^{-1} family).
bool is_nonpositive_integer(const Rat& x) {
    return x.get_den() == 1 && x <= 0;
}

}  // namespace

Rat DirichletParams::total() const {
    Rat sum = 0;
    for (const Rat& a : alpha) sum += a;
    return sum;
}

bool DirichletParams::valid() const {
    if (alpha.empty()) return false;
    for (const Rat& a : alpha) {
        if (a <= 0) return false;
    }
    return true;
}

void validate(const DirichletParams& params) {
    if (!params.valid()) {
        throw std::domain_error("DirichletParams: entries must be positive");
    }
}

void validate(const DirichletParams& params, const WeightVector& s) {
    validate(params);
    if (s.size() != params.alpha.size()) {
        throw std::invalid_argument("weight vector length does not match parameter");
    }
}

Rat poisson_moment(const Rat& c, unsigned n) {
    if (c < 0) throw std::domain_error("poisson_moment: expectation must be >= 0");
    return touchard(n).evaluate({c});
}

Rat gamma_moment(const Rat& theta, const Rat& k, unsigned n) {
    if (theta <= 0 || k <= 0) {
        throw std::domain_error("gamma_moment: parameters must be positive");
    }
    return pochhammer(theta, n) * pow_rat(k, n);
}

Rat dirichlet_moment_multiindex(const DirichletParams& params,
                                const WeightVector& s, unsigned n) {
    validate(params, s);
    const unsigned k = params.size();
    Rat sum = 0;
    for (const MultiIndex& m : multi_indices_of_total(k, n)) {
        Rat term = pochhammer_mi(params.alpha, m);
        for (unsigned i = 0; i < k; ++i) {
            term *= pow_rat(s[i], m[i]);
        }
        sum += term / mi_factorial(m);
    }
    return factorial(n) / pochhammer(params.total(), n) * sum;
}

Rat dirichlet_moment_cycleindex(const DirichletParams& params,
                                const WeightVector& s, unsigned n) {
    validate(params, s);
    const unsigned k = params.size();
    // Power-sum arguments x_i = sum_j s_j^i alpha_j, i = 1..n.
    std::vector<Rat> args(n);
    for (unsigned i = 1; i <= n; ++i) {
        Rat sum = 0;
        for (unsigned j = 0; j < k; ++j) sum += pow_rat(s[j], i) * params.alpha[j];
        args[i - 1] = sum;
    }
    return factorial(n) / pochhammer(params.total(), n) *
           cycle_index_sn(n).evaluate(args);
}

SparsePoly dirichlet_normalized_moment_poly(const DirichletParams& params,
                                            unsigned n) {
    validate(params);
    const unsigned k = params.size();
    SparsePoly poly(k);
    for (const MultiIndex& m : multi_indices_of_total(k, n)) {
        poly.add_term(m, pochhammer_mi(params.alpha, m) / mi_factorial(m));
    }
    return poly;
}

DirichletParams dirichlet_aggregate(const DirichletParams& params, unsigned i) {
    validate(params);
    if (i + 1 >= params.size()) {
        throw std::domain_error("dirichlet_aggregate: no adjacent type to merge");
    }
    DirichletParams out;
    out.alpha.reserve(params.size() - 1);
    for (unsigned j = 0; j < params.size(); ++j) {
        if (j == i) {
            out.alpha.push_back(params.alpha[i] + params.alpha[i + 1]);
            ++j;
        } else {
            out.alpha.push_back(params.alpha[j]);
        }
    }
    return out;
}

DirichletParams dirichlet_aggregate(const DirichletParams& params,
                                    const SetPartition& blocks) {
    validate(params);
    if (!blocks.valid() || blocks.ground_size() != params.size()) {
        throw std::domain_error("dirichlet_aggregate: partition does not fit parameter");
    }
    DirichletParams out;
    out.alpha.reserve(blocks.blocks.size());
    for (const auto& block : blocks.blocks) {
        Rat sum = 0;
        for (unsigned type : block) sum += params.alpha[type - 1];
        out.alpha.push_back(sum);
    }
    return out;
}

WeightVector aggregate_weights(const WeightVector& s, const SetPartition& blocks) {
    if (!blocks.valid() || blocks.ground_size() != s.size()) {
        throw std::domain_error("aggregate_weights: partition does not fit weights");
    }
    WeightVector out;
    out.reserve(blocks.blocks.size());
    for (const auto& block : blocks.blocks) {
        const Rat& w = s[block.front() - 1];
        for (unsigned type : block) {
            if (s[type - 1] != w) {
                throw std::domain_error("aggregate_weights: block mixes distinct weights");
            }
        }
        out.push_back(w);
    }
    return out;
}

std::vector<std::vector<double>> dirichlet_sample(const DirichletParams& params,
                                                  std::uint64_t seed,
                                                  std::size_t count) {
    validate(params);
    const unsigned k = params.size();
    std::vector<double> shape(k);
    for (unsigned i = 0; i < k; ++i) shape[i] = rat_to_double(params.alpha[i]);

    std::vector<std::vector<double>> rows(count, std::vector<double>(k));
    for (std::size_t r = 0; r < count; ++r) {
        Rng rng(derive_substream(seed, r));
        double total = 0.0;
        for (unsigned i = 0; i < k; ++i) {
            rows[r][i] = rng.gamma(shape[i]);
            total += rows[r][i];
        }
        if (total == 0.0) {
            // Vanishing total has probability zero up to rounding; fall back
            // to the barycenter rather than dividing by zero.
            for (unsigned i = 0; i < k; ++i) rows[r][i] = shape[i];
            total = 0.0;
            for (unsigned i = 0; i < k; ++i) total += rows[r][i];
        }
        for (unsigned i = 0; i < k; ++i) rows[r][i] /= total;
    }
    return rows;
}

TruncSeriesMV humbert_phi2(const std::vector<Rat>& b, const Rat& c, unsigned D) {
    if (is_nonpositive_integer(c)) {
        throw std::domain_error("humbert_phi2: lower parameter at a pole");
    }
    const unsigned k = static_cast<unsigned>(b.size());
    TruncSeriesMV series(k, D);
    for (const MultiIndex& m : multi_indices_up_to(k, D)) {
        const unsigned long n = mi_size(m);
        series.set_coefficient(
            m, pochhammer_mi(b, m) / (pochhammer(c, n) * mi_factorial(m)));
    }
    return series;
}

TruncSeriesMV lauricella_fd(const Rat& a, const std::vector<Rat>& b,
                            const Rat& c, unsigned D) {
    if (is_nonpositive_integer(c)) {
        throw std::domain_error("lauricella_fd: lower parameter at a pole");
    }
    const unsigned k = static_cast<unsigned>(b.size());
    TruncSeriesMV series(k, D);
    for (const MultiIndex& m : multi_indices_up_to(k, D)) {
        const unsigned long n = mi_size(m);
        series.set_coefficient(
            m, pochhammer(a, n) * pochhammer_mi(b, m) /
                   (pochhammer(c, n) * mi_factorial(m)));
    }
    return series;
}

double lauricella_fd_quadrature(const Rat& a, const std::vector<Rat>& b,
                                const Rat& c, const std::vector<double>& x,
                                double tol) {
    if (!(a > 0) || !(c > a)) {
        throw std::domain_error("lauricella_fd_quadrature: requires c > a > 0");
    }
    if (x.size() != b.size()) {
        throw std::invalid_argument("lauricella_fd_quadrature: arity mismatch");
    }
    for (double xi : x) {
        if (!(std::abs(xi) < 1.0)) {
            throw std::domain_error("lauricella_fd_quadrature: |x_i| must be < 1");
        }
    }
    const double ad = rat_to_double(a);
    const double cd = rat_to_double(c);
    std::vector<double> bd(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) bd[i] = rat_to_double(b[i]);

    const auto g = [&](double t) {
        double prod = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            prod *= std::pow(1.0 - t * x[i], -bd[i]);
        }
        return prod;
    };
    const double integral = weighted_unit_integral(ad - 1.0, cd - ad - 1.0, g, tol);
    const double log_beta =
        std::lgamma(ad) + std::lgamma(cd - ad) - std::lgamma(cd);
    return integral * std::exp(-log_beta);
}

Rat dirichlet_asymptotic_moment(const DirichletParams& params,
                                const WeightVector& s, unsigned n,
                                ParamLimit limit) {
    validate(params, s);
    const Rat total = params.total();
    if (limit == ParamLimit::Zero) {
        // Mixture of point masses at the vertices: sum_i (alpha_i/|alpha|) s_i^n.
        Rat sum = 0;
        for (unsigned i = 0; i < params.size(); ++i) {
            sum += params.alpha[i] / total * pow_rat(s[i], n);
        }
        return sum;
    }
    // Point mass at the barycenter: (alpha . s / |alpha|)^n.
    Rat dot = 0;
    for (unsigned i = 0; i < params.size(); ++i) dot += params.alpha[i] * s[i];
    return pow_rat(dot / total, n);
}

UrnOpResult urn_table_map(UrnOp op, const UrnState& state, unsigned i,
                          const Rat& new_weight, const Rat& new_param) {
    validate(state.params, state.s);
    UrnOpResult out{state, Rat(1)};
    switch (op) {
        case UrnOp::TypeAdd:
            if (new_param <= 0) {
                throw std::domain_error("urn_table_map: new parameter must be positive");
            }
            out.state.s.push_back(new_weight);
            out.state.params.alpha.push_back(new_param);
            return out;
        case UrnOp::TypeDelete:
            if (state.params.size() < 2) {
                throw std::domain_error("urn_table_map: cannot delete the last type");
            }
            out.state.s.pop_back();
            out.state.params.alpha.pop_back();
            return out;
        case UrnOp::Merge:
            if (i + 1 >= state.params.size()) {
                throw std::domain_error("urn_table_map: no adjacent type to merge");
            }
            if (state.s[i] != state.s[i + 1]) {
                throw std::domain_error("urn_table_map: merged urns must share a weight");
            }
            out.state.params = dirichlet_aggregate(state.params, i);
            out.state.s.erase(out.state.s.begin() + i + 1);
            return out;
        case UrnOp::UrnAdd:
            if (i >= state.params.size()) {
                throw std::domain_error("urn_table_map: type index out of range");
            }
            out.prefactor = state.params.alpha[i];
            out.state.params.alpha[i] += 1;
            return out;
        case UrnOp::UrnDelete:
            if (i >= state.params.size()) {
                throw std::domain_error("urn_table_map: type index out of range");
            }
            if (state.params.alpha[i] <= 1) {
                throw std::domain_error("urn_table_map: deletion needs alpha_i > 1");
            }
            out.prefactor = state.params.total() - 1;
            out.state.params.alpha[i] -= 1;
            return out;
    }
    throw std::logic_error("urn_table_map: unknown operation");
}

}  // namespace momenta
