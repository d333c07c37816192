#pragma once

#include <map>
#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// All multi-indices of the given arity with entry sum exactly `total`,
/// in ascending lexicographic order.
std::vector<MultiIndex> multi_indices_of_total(unsigned arity, unsigned total);

/// All multi-indices of the given arity with entry sum at most `degree`,
/// graded by total then lexicographic.
std::vector<MultiIndex> multi_indices_up_to(unsigned arity, unsigned degree);

/// Multivariate power series truncated by total degree: the terms of degree
/// <= max_degree are stored exactly, everything above is discarded by every
/// operation. Zero coefficients are never stored.
class TruncSeriesMV {
public:
    using Terms = std::map<MultiIndex, Rat>;

    TruncSeriesMV(unsigned arity, unsigned max_degree)
        : arity_(arity), max_degree_(max_degree) {}

    unsigned arity() const { return arity_; }
    unsigned max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }

    /// Coefficient of x^m (0 when absent).
    Rat coefficient(const MultiIndex& m) const;
    /// Stores c as the coefficient of x^m. Throws std::invalid_argument when
    /// the index has the wrong arity or exceeds the truncation degree.
    void set_coefficient(const MultiIndex& m, const Rat& c);
    /// Adds c to the coefficient of x^m; terms beyond the truncation degree
    /// are silently dropped (they are not representable).
    void add_coefficient(const MultiIndex& m, const Rat& c);

    friend bool operator==(const TruncSeriesMV&, const TruncSeriesMV&) = default;

    TruncSeriesMV& operator+=(const TruncSeriesMV& rhs);
    TruncSeriesMV& operator-=(const TruncSeriesMV& rhs);
    TruncSeriesMV& operator*=(const Rat& c);
    friend TruncSeriesMV operator+(TruncSeriesMV lhs, const TruncSeriesMV& rhs) { return lhs += rhs; }
    friend TruncSeriesMV operator-(TruncSeriesMV lhs, const TruncSeriesMV& rhs) { return lhs -= rhs; }
    friend TruncSeriesMV operator*(TruncSeriesMV s, const Rat& c) { return s *= c; }
    friend TruncSeriesMV operator*(const Rat& c, TruncSeriesMV s) { return s *= c; }
    /// Truncated Cauchy product; the result keeps the smaller truncation.
    friend TruncSeriesMV operator*(const TruncSeriesMV& lhs, const TruncSeriesMV& rhs);

    /// Same coefficients up to the (possibly lower) new truncation degree.
    TruncSeriesMV truncated(unsigned new_degree) const;

    /// Termwise partial derivative with respect to variable `var`.
    TruncSeriesMV derivative(unsigned var) const;

    /// Coefficients of the homogeneous part of total degree d.
    Terms homogeneous_part(unsigned d) const;

    /// Exact evaluation of the stored truncation at a rational point.
    Rat evaluate(const std::vector<Rat>& x) const;
    /// Floating evaluation of the stored truncation.
    double evaluate_double(const std::vector<double>& x) const;

private:
    unsigned arity_;
    unsigned max_degree_;
    Terms terms_;
};

}  // namespace momenta
