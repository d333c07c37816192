#include "momenta/fock.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "momenta/moments.hpp"
#include "momenta/polynomial.hpp"

namespace momenta {
namespace {

/// Advance a base-`base` odometer; false once all tuples were visited.
bool advance_tuple(std::vector<unsigned>& t, unsigned base) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (++t[i] < base) return true;
        t[i] = 0;
    }
    return false;
}

bool all_distinct(const std::vector<unsigned>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j]) return false;
    return true;
}

/// Lay out the argument tuple of a contraction: the b-th block of the
/// partition (part sizes ascending) repeats y_b (part size) times.
std::vector<unsigned> contraction_pattern(const std::vector<unsigned>& sizes,
                                          const std::vector<unsigned>& y) {
    std::vector<unsigned> pattern;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        pattern.insert(pattern.end(), sizes[b], y[b]);
    return pattern;
}

void validate_factors(const FiniteMeasure& sigma, const DisjointProductFunction& f) {
    for (const TestFunction& factor : f.factors)
        if (factor.size() != sigma.size())
            throw std::invalid_argument("factor and measure live on different ground spaces");
}

/// E[(N - c)^d] for N ~ Poisson(c), d = 0..degree, through the cumulant
/// sequence (0, c, c, ...) of the centered count.
std::vector<Rat> centered_poisson_moments(const Rat& c, unsigned degree) {
    std::vector<Rat> out{Rat(1)};
    if (degree == 0) return out;
    std::vector<Rat> kappa(degree, c);
    kappa[0] = Rat(0);
    const std::vector<Rat> mu = cumulants_to_moments(kappa);
    out.insert(out.end(), mu.begin(), mu.end());
    return out;
}

}  // namespace

void SymTensor::set(std::vector<unsigned> point, const Rat& c) {
    if (point.size() != order_) throw std::invalid_argument("key has wrong order");
    for (unsigned x : point)
        if (x >= ground_size_) throw std::invalid_argument("key entry outside ground space");
    std::sort(point.begin(), point.end());
    if (c == 0)
        values_.erase(point);
    else
        values_[std::move(point)] = c;
}

void SymTensor::set_raw(std::vector<unsigned> point, const Rat& c) {
    if (point.size() != order_) throw std::invalid_argument("key has wrong order");
    if (c == 0)
        values_.erase(point);
    else
        values_[std::move(point)] = c;
}

Rat SymTensor::value(const std::vector<unsigned>& point) const {
    if (point.size() != order_) throw std::invalid_argument("query has wrong order");
    auto hit = values_.find(point);
    if (hit != values_.end()) return hit->second;
    std::vector<unsigned> sorted = point;
    std::sort(sorted.begin(), sorted.end());
    hit = values_.find(sorted);
    return hit == values_.end() ? Rat(0) : hit->second;
}

SymTensor SymTensor::coherent(unsigned ground_size, unsigned order, const TestFunction& f) {
    if (f.size() != ground_size)
        throw std::invalid_argument("test function and ground space sizes differ");
    SymTensor out(order, ground_size);
    if (order == 0) {
        out.set({}, Rat(1));
        return out;
    }
    if (ground_size == 0) return out;

    // Non-decreasing tuples enumerate the sorted keys exactly once.
    std::vector<unsigned> t(order, 0);
    while (true) {
        Rat v(1);
        for (unsigned x : t) v *= f[x];
        if (v != 0) out.set(t, v);

        std::size_t i = order;
        while (i > 0 && t[i - 1] == ground_size - 1) --i;
        if (i == 0) break;
        const unsigned next = t[i - 1] + 1;
        for (std::size_t j = i - 1; j < order; ++j) t[j] = next;
    }
    return out;
}

SymTensor contract(const SymTensor& phi, const IntPartition& lambda) {
    if (!lambda.valid() || lambda.n != phi.order())
        throw std::invalid_argument("partition does not match the tensor order");
    const std::vector<unsigned> sizes = lambda.parts_ascending();
    const unsigned r = lambda.parts_count();
    const unsigned k = phi.ground_size();

    SymTensor out(r, k);
    if (k == 0 && r > 0) return out;
    std::vector<unsigned> y(r, 0);
    do {
        const Rat v = phi.value(contraction_pattern(sizes, y));
        if (v != 0) out.set_raw(y, v);
    } while (advance_tuple(y, k));
    return out;
}

Rat ext_inner_coherent(const FiniteMeasure& sigma, const TestFunction& phi,
                       const TestFunction& psi, unsigned long n) {
    if (phi.size() != psi.size())
        throw std::invalid_argument("states live on different ground spaces");
    TestFunction product(phi.size());
    for (std::size_t x = 0; x < phi.size(); ++x) product[x] = phi[x] * psi[x];
    return gamma_measure_moment(sigma, product, n);
}

Rat ext_inner_general(const FiniteMeasure& sigma, const SymTensor& phi, const SymTensor& psi) {
    if (phi.order() != psi.order()) throw std::invalid_argument("state orders differ");
    if (phi.ground_size() != psi.ground_size() || phi.ground_size() != sigma.size())
        throw std::invalid_argument("states and measure live on different ground spaces");
    const unsigned n = phi.order();
    const unsigned k = phi.ground_size();

    Rat total(0);
    for (const IntPartition& lambda : integer_partitions(n)) {
        const std::vector<unsigned> sizes = lambda.parts_ascending();
        const unsigned r = lambda.parts_count();
        if (k == 0 && r > 0) continue;

        Rat stratum(0);
        std::vector<unsigned> y(r, 0);
        do {
            const std::vector<unsigned> pattern = contraction_pattern(sizes, y);
            const Rat v = phi.value(pattern) * psi.value(pattern);
            if (v == 0) continue;
            Rat weight(1);
            for (unsigned b = 0; b < r; ++b) weight *= sigma.weights[y[b]];
            stratum += v * weight;
        } while (advance_tuple(y, k));

        // Permutations share their stratum by cycle type, so each partition
        // carries the count of permutations realizing it.
        total += multinomial_2nd(lambda) * stratum;
    }
    return total;
}

std::pair<Rat, Rat> recursive_identity_check(const FiniteMeasure& sigma, const TestFunction& phi,
                                             const TestFunction& psi, unsigned long n) {
    const Rat lhs = ext_inner_coherent(sigma, phi, psi, n + 1);

    TestFunction product(phi.size());
    if (phi.size() != psi.size())
        throw std::invalid_argument("states live on different ground spaces");
    for (std::size_t x = 0; x < phi.size(); ++x) product[x] = phi[x] * psi[x];

    Rat rhs(0);
    for (unsigned long j = 0; j <= n; ++j) {
        // The weight attached to <(phi psi)^{n-j+1}> is the full Gamma cumulant
        // of that order, which carries a factor (n-j)! on top of the binomial.
        const Rat scalar = power_expectations(sigma, product, n - j + 1).back();
        rhs += binomial(n, j) * factorial(n - j) *
               ext_inner_coherent(sigma, phi, psi, j) * scalar;
    }
    return {lhs, rhs};
}

void require_disjoint(const FiniteMeasure& sigma, const DisjointProductFunction& f) {
    validate_factors(sigma, f);
    for (std::size_t i = 0; i < f.factors.size(); ++i)
        for (std::size_t j = i + 1; j < f.factors.size(); ++j)
            for (std::size_t x = 0; x < sigma.size(); ++x)
                if (sigma.weights[x] != 0 && f.factors[i][x] != 0 && f.factors[j][x] != 0)
                    throw std::domain_error("factor supports overlap on a charged point");
}

namespace {

/// Shared alternating-contraction sum; Value is Rat or double.
template <typename Value>
Value msi_sum(const std::vector<Value>& p_of_f, const std::vector<Value>& s_of_f) {
    const std::size_t n = p_of_f.size();
    if (n > 20) throw std::invalid_argument("product order too large for subset expansion");

    // star_k = k!(n-k)! sum over k-subsets S of prod_{i in S} p(f_i)
    //                                       * prod_{i not in S} sigma(f_i).
    std::vector<Value> star(n + 1, Value(0));
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Value term(1);
        unsigned bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                term = term * p_of_f[i];
                ++bits;
            } else {
                term = term * s_of_f[i];
            }
        }
        star[bits] = star[bits] + term;
    }

    Value total(0);
    for (std::size_t j = 0; j <= n; ++j) {
        const Rat exact = binomial(n, j) * factorial(j) * factorial(n - j);
        Value coeff(0);
        if constexpr (std::is_same_v<Value, Rat>)
            coeff = exact;
        else
            coeff = rat_to_double(exact);
        if ((n - j) % 2 == 0)
            total = total + coeff * star[j];
        else
            total = total - coeff * star[j];
    }
    return total;
}

}  // namespace

Rat msi_compensated(const FiniteMeasure& sigma, const DisjointProductFunction& f,
                    const MultiIndex& counts) {
    require_disjoint(sigma, f);
    if (counts.size() != sigma.size())
        throw std::invalid_argument("outcome and measure live on different ground spaces");

    std::vector<Rat> p_of_f, s_of_f;
    for (const TestFunction& factor : f.factors) {
        Rat p(0), s(0);
        for (std::size_t x = 0; x < factor.size(); ++x) {
            p += Rat(static_cast<long>(counts[x])) * factor[x];
            s += sigma.weights[x] * factor[x];
        }
        p_of_f.push_back(p);
        s_of_f.push_back(s);
    }
    return msi_sum<Rat>(p_of_f, s_of_f);
}

double msi_compensated(const FiniteMeasure& sigma, const DisjointProductFunction& f,
                       const std::vector<double>& row) {
    require_disjoint(sigma, f);
    if (row.size() != sigma.size())
        throw std::invalid_argument("outcome and measure live on different ground spaces");

    std::vector<double> p_of_f, s_of_f;
    for (const TestFunction& factor : f.factors) {
        double p = 0.0, s = 0.0;
        for (std::size_t x = 0; x < factor.size(); ++x) {
            const double v = rat_to_double(factor[x]);
            p += row[x] * v;
            s += rat_to_double(sigma.weights[x]) * v;
        }
        p_of_f.push_back(p);
        s_of_f.push_back(s);
    }
    return msi_sum<double>(p_of_f, s_of_f);
}

Rat msi_orthogonality(const FiniteMeasure& sigma, const DisjointProductFunction& f,
                      const DisjointProductFunction& g) {
    require_disjoint(sigma, f);
    require_disjoint(sigma, g);
    const unsigned k = static_cast<unsigned>(sigma.size());

    // I_n(f) = n! prod_i q(f_i) as a polynomial in the centered counts.
    SparsePoly integrand = SparsePoly::constant(k, factorial(f.order()) * factorial(g.order()));
    const auto linear_form = [k](const TestFunction& h) {
        SparsePoly out(k);
        for (unsigned x = 0; x < k; ++x)
            if (h[x] != 0) out += h[x] * SparsePoly::variable(k, x);
        return out;
    };
    for (const TestFunction& factor : f.factors) integrand = integrand * linear_form(factor);
    for (const TestFunction& factor : g.factors) integrand = integrand * linear_form(factor);

    unsigned max_degree = 0;
    for (const auto& [e, c] : integrand.terms())
        for (unsigned x = 0; x < k; ++x) max_degree = std::max(max_degree, e[x]);
    std::vector<std::vector<Rat>> moments;
    for (unsigned x = 0; x < k; ++x)
        moments.push_back(centered_poisson_moments(sigma.weights[x], max_degree));

    Rat total(0);
    for (const auto& [e, c] : integrand.terms()) {
        Rat term = c;
        for (unsigned x = 0; x < k; ++x)
            if (e[x] != 0) term *= moments[x][e[x]];
        total += term;
    }
    return total;
}

DiagonalDecomposition diagonal_decomposition(const FiniteMeasure& rho, const SymTensor& phi) {
    if (phi.ground_size() != rho.size())
        throw std::invalid_argument("state and measure live on different ground spaces");
    const unsigned n = phi.order();
    const unsigned k = phi.ground_size();

    DiagonalDecomposition out;
    out.total = Rat(0);
    if (k == 0 && n > 0) return out;

    std::vector<unsigned> x(n, 0);
    do {
        Rat weight(1);
        for (unsigned i = 0; i < n; ++i) weight *= rho.weights[x[i]];
        out.total += phi.value(x) * weight;
    } while (advance_tuple(x, k));

    for (const IntPartition& lambda : integer_partitions(n)) {
        const std::vector<unsigned> sizes = lambda.parts_ascending();
        const unsigned r = lambda.parts_count();
        Rat stratum(0);
        if (!(k == 0 && r > 0)) {
            std::vector<unsigned> y(r, 0);
            do {
                if (!all_distinct(y)) continue;
                Rat weight(1);
                for (unsigned b = 0; b < r; ++b)
                    weight *= pow_rat(rho.weights[y[b]], sizes[b]);
                stratum += phi.value(contraction_pattern(sizes, y)) * weight;
            } while (advance_tuple(y, k));
        }
        out.parts[lambda] = faa_di_bruno(lambda) * stratum;
    }
    return out;
}

Rat pascal_fock_weight(const Rat& r, const Rat& alpha, unsigned long n) {
    if (r <= 0) throw std::domain_error("successes parameter must be positive");
    if (alpha <= 0 || alpha >= 1) throw std::domain_error("success probability must lie in (0,1)");
    return factorial(n) * pow_rat((Rat(1) - alpha) / (alpha * alpha), static_cast<long>(n));
}

Rat negative_binomial_pmf(const Rat& r, const Rat& alpha, unsigned long m) {
    if (r <= 0) throw std::domain_error("successes parameter must be positive");
    if (alpha <= 0 || alpha >= 1) throw std::domain_error("success probability must lie in (0,1)");
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw std::domain_error("exact mass needs an integer successes parameter");
    return pow_rat(alpha, r.get_num().get_si()) * multiset_coeff(r, static_cast<unsigned>(m)) *
           pow_rat(Rat(1) - alpha, static_cast<long>(m));
}

}  // namespace momenta
