#pragma once

#include <vector>

#include "momenta/rational.hpp"

namespace momenta {

/// Truncated exponential generating function: the series sum_n a_n x^n / n!
/// represented by its coefficients a_0..a_D. The truncation degree D is fixed
/// at construction and preserved by every operation.
class EgfSeries {
public:
    /// Zero series truncated at degree D.
    explicit EgfSeries(unsigned degree) : coeffs_(degree + 1, Rat(0)) {}
    /// Series with the given coefficients a_0..a_D (degree = size - 1).
    explicit EgfSeries(std::vector<Rat> coeffs);

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& operator[](unsigned n) const { return coeffs_[n]; }
    Rat& operator[](unsigned n) { return coeffs_[n]; }

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

    /// EGF of exp(x): a_n = 1 for all n.
    static EgfSeries exponential(unsigned degree);
    /// EGF of the identity coefficient sequence a_n = [n == 1] (the series x).
    static EgfSeries x(unsigned degree);

private:
    std::vector<Rat> coeffs_;
};

/// Product: a_n = sum_m C(n, m) f_m g_{n-m}. Degrees must match.
EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g);

/// Composition with exp: coefficients c_n = B_n[a_1..a_n], c_0 = 1.
/// Requires f_0 = 0.
EgfSeries egf_exp(const EgfSeries& f);

/// Inverse of egf_exp: requires f_0 = 1; egf_exp(egf_log(f)) == f.
EgfSeries egf_log(const EgfSeries& f);

/// f^k / k! for f with f_0 = 0; the k-fold product divided by k!.
EgfSeries egf_pow_over_factorial(const EgfSeries& f, unsigned k);

}  // namespace momenta
