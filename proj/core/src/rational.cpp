#include "momenta/rational.hpp"

#include <cctype>

namespace momenta {

Rat rat(long p, long q) {
    if (q == 0) throw std::domain_error("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_integer = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_integer(num) || !is_integer(den))
        throw std::invalid_argument("malformed rational literal: " + text);
    Rat r;
    if (r.set_str(num + "/" + den, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

double rat_to_double(const Rat& x) {
    return x.get_d();
}

Rat factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

Rat binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

Rat binomial_rat(const Rat& a, unsigned long k) {
    Rat prod(1);
    for (unsigned long j = 0; j < k; ++j) prod *= a - Rat(static_cast<long>(j));
    return prod / factorial(k);
}

Rat pochhammer(const Rat& a, unsigned long n) {
    Rat prod(1);
    for (unsigned long j = 0; j < n; ++j) prod *= a + Rat(static_cast<long>(j));
    return prod;
}

Rat pow_rat(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    const bool invert = e < 0;
    const unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && x == 0) throw std::domain_error("0 raised to a negative power");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
    // x canonical implies x^k canonical; inversion only swaps num/den.
    if (invert) {
        Rat inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        return inv;
    }
    return r;
}

Rat multinomial(const std::vector<unsigned>& m) {
    unsigned long total = 0;
    for (unsigned v : m) total += v;
    Rat r = factorial(total);
    for (unsigned v : m) r /= factorial(v);
    return r;
}

}  // namespace momenta
