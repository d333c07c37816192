#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace momenta {

/// Exact arbitrary-precision rational, the universal scalar of the library.
/// All closed-form results are computed and compared in this type; floating
/// point appears only inside samplers and quadrature.
using Rat = mpq_class;

/// Build a canonical rational p/q. Throws std::domain_error if q == 0.
Rat rat(long p, long q = 1);

/// Parse "p", "-p", "p/q" (optional sign on p). Throws std::invalid_argument
/// on malformed input and std::domain_error on zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical string form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& x);

/// Nearest double (GMP rounding).
double rat_to_double(const Rat& x);

/// n! as a rational (exact for any n that fits memory).
Rat factorial(unsigned long n);

/// Binomial coefficient C(n, k); 0 when k > n.
Rat binomial(unsigned long n, unsigned long k);

/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
Rat binomial_rat(const Rat& a, unsigned long k);

/// Rising factorial (Pochhammer symbol) a(a+1)...(a+n-1); empty product = 1.
Rat pochhammer(const Rat& a, unsigned long n);

/// x^e for integer e; negative e inverts (throws std::domain_error on 0^neg).
Rat pow_rat(const Rat& x, long e);

/// Multinomial coefficient |m|! / (m_1! ... m_k!).
Rat multinomial(const std::vector<unsigned>& m);

}  // namespace momenta
