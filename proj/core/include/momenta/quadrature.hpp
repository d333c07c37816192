#pragma once

#include <functional>
#include <vector>

namespace momenta {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// The n-point rule, computed by Newton iteration on the Legendre polynomial
/// and cached per order. Requires 1 <= n <= 64.
const GaussLegendreRule& gauss_legendre(unsigned n);

/// Single-panel Gauss-Legendre estimate of integral of f over [a, b].
double gl_panel(const std::function<double(double)>& f, double a, double b,
                unsigned n = 32);

/// Adaptive composite Gauss-Legendre: a panel is bisected while its 16- and
/// 32-point estimates disagree beyond the local tolerance.
double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double tol, unsigned max_depth = 40);

/// Integral over [0, 1] of t^p (1-t)^q g(t) for p, q > -1 and g smooth:
/// the interval is split dyadically toward both endpoints (where the weight
/// may blow up), each panel is handled by adaptive Gauss-Legendre, and the
/// leftover endpoint slivers are bounded analytically to below `tol`.
double weighted_unit_integral(double p, double q,
                              const std::function<double(double)>& g,
                              double tol = 1e-10);

}  // namespace momenta
