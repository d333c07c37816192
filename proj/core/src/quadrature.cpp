#include "momenta/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace momenta {

namespace {

GaussLegendreRule compute_rule(unsigned n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Roots of P_n by Newton iteration from the Chebyshev-like initial guess;
    // symmetric pairs are filled together.
    for (unsigned i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (unsigned j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

double adaptive_panel(const std::function<double(double)>& f, double a,
                      double b, double tol, unsigned depth) {
    const double coarse = gl_panel(f, a, b, 16);
    const double fine = gl_panel(f, a, b, 32);
    if (std::abs(fine - coarse) <= tol * std::max(1.0, std::abs(fine)) ||
        depth == 0) {
        return fine;
    }
    const double mid = 0.5 * (a + b);
    return adaptive_panel(f, a, mid, 0.5 * tol, depth - 1) +
           adaptive_panel(f, mid, b, 0.5 * tol, depth - 1);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(unsigned n) {
    if (n < 1 || n > 64) {
        throw std::domain_error("gauss_legendre: order out of range");
    }
    static std::mutex mutex;
    static std::map<unsigned, GaussLegendreRule> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b,
                unsigned n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (unsigned i = 0; i < n; ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double tol, unsigned max_depth) {
    if (!(a <= b)) throw std::domain_error("adaptive_gl: empty interval");
    if (a == b) return 0.0;
    return adaptive_panel(f, a, b, tol, max_depth);
}

double weighted_unit_integral(double p, double q,
                              const std::function<double(double)>& g,
                              double tol) {
    if (!(p > -1.0) || !(q > -1.0)) {
        throw std::domain_error("weighted_unit_integral: weight not integrable");
    }
    const auto integrand = [&](double t) {
        return std::pow(t, p) * std::pow(1.0 - t, q) * g(t);
    };

    // Depth of the dyadic grading toward an endpoint with weight exponent e:
    // the sliver [0, 2^-J] contributes O((2^-J)^{e+1}), pushed below tol/4.
    const auto grading_depth = [&](double e, double scale) {
        double J = 4.0;
        while (J < 1000.0 &&
               std::pow(2.0, -J * (e + 1.0)) * scale / (e + 1.0) > 0.25 * tol) {
            J += 1.0;
        }
        return static_cast<unsigned>(J);
    };
    const double scale_left = std::abs(g(std::pow(2.0, -8.0))) + 1.0;
    const double scale_right = std::abs(g(1.0 - std::pow(2.0, -8.0))) + 1.0;
    const unsigned JL = grading_depth(p, scale_left);
    const unsigned JR = grading_depth(q, scale_right);

    double total = 0.0;
    // Left slab (0, 1/2]: panels [2^{-j-1}, 2^{-j}], j = 1..JL.
    for (unsigned j = 1; j <= JL; ++j) {
        const double lo = std::pow(2.0, -static_cast<double>(j + 1));
        const double hi = std::pow(2.0, -static_cast<double>(j));
        total += adaptive_gl(integrand, lo, hi, tol / (2.0 * JL));
    }
    // Right slab [1/2, 1): mirrored panels.
    for (unsigned j = 1; j <= JR; ++j) {
        const double lo = 1.0 - std::pow(2.0, -static_cast<double>(j));
        const double hi = 1.0 - std::pow(2.0, -static_cast<double>(j + 1));
        total += adaptive_gl(integrand, lo, hi, tol / (2.0 * JR));
    }
    // Leading-order contribution of the unresolved slivers.
    const double dl = std::pow(2.0, -static_cast<double>(JL + 1));
    const double dr = std::pow(2.0, -static_cast<double>(JR + 1));
    total += g(0.0) * std::pow(dl, p + 1.0) / (p + 1.0);
    total += g(1.0) * std::pow(dr, q + 1.0) / (q + 1.0);
    return total;
}

}  // namespace momenta
