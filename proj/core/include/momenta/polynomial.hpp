#pragma once

#include <map>
#include <string>
#include <vector>

#include "momenta/combinatorics.hpp"
#include "momenta/rational.hpp"

namespace momenta {

/// Multivariate polynomial with exact rational coefficients over a fixed
/// number of variables. Exponent keys are dense vectors of length `arity`;
/// zero coefficients are never stored, so equality is structural.
class SparsePoly {
public:
    using Terms = std::map<std::vector<unsigned>, Rat>;

    explicit SparsePoly(unsigned arity = 0) : arity_(arity) {}

    static SparsePoly constant(unsigned arity, const Rat& c);
    /// The variable x_{index+1} (0-based index), as a polynomial.
    static SparsePoly variable(unsigned arity, unsigned index);
    /// c * x^e for a dense exponent vector e of length arity.
    static SparsePoly monomial(unsigned arity, const std::vector<unsigned>& e, const Rat& c);

    unsigned arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; 0 for the zero polynomial.
    unsigned total_degree() const;
    /// Coefficient of x^e (0 when absent).
    Rat coefficient(const std::vector<unsigned>& e) const;

    void add_term(const std::vector<unsigned>& e, const Rat& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
    SparsePoly& operator*=(const Rat& c);
    friend SparsePoly operator*(SparsePoly p, const Rat& c) { return p *= c; }
    friend SparsePoly operator*(const Rat& c, SparsePoly p) { return p *= c; }
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    SparsePoly pow(unsigned e) const;

    /// Same polynomial viewed in `new_arity >= arity` variables.
    SparsePoly extended(unsigned new_arity) const;

    /// Exact evaluation at a point (size must equal arity).
    Rat evaluate(const std::vector<Rat>& xs) const;

    /// Floating evaluation, for sampler-side estimates.
    double evaluate_double(const std::vector<double>& xs) const;

    /// Substitute replacement[i] for variable i; all replacements must share
    /// one arity, which becomes the result's arity.
    SparsePoly substitute(const std::vector<SparsePoly>& replacement) const;

    /// x_i -> factor[i] * x_i (exact diagonal change of variables).
    SparsePoly scale_vars(const std::vector<Rat>& factor) const;

    /// Human-readable form, e.g. "x1^3 + 3 x1 x2 + x3"; variables are named
    /// x1..xN unless `names` provides alternatives. Deterministic term order.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    unsigned arity_;
    Terms terms_;
};

}  // namespace momenta
