#include "momenta/egf.hpp"

#include <stdexcept>

namespace momenta {

EgfSeries::EgfSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::domain_error("EGF series needs at least the constant term");
}

EgfSeries EgfSeries::exponential(unsigned degree) {
    EgfSeries f(degree);
    for (unsigned n = 0; n <= degree; ++n) f[n] = 1;
    return f;
}

EgfSeries EgfSeries::x(unsigned degree) {
    EgfSeries f(degree);
    if (degree >= 1) f[1] = 1;
    return f;
}

EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g) {
    if (f.degree() != g.degree()) throw std::domain_error("EGF truncation degrees differ");
    const unsigned D = f.degree();
    EgfSeries h(D);
    for (unsigned n = 0; n <= D; ++n) {
        Rat an(0);
        for (unsigned m = 0; m <= n; ++m) an += binomial(n, m) * f[m] * g[n - m];
        h[n] = an;
    }
    return h;
}

EgfSeries egf_exp(const EgfSeries& f) {
    if (f[0] != 0) throw std::domain_error("egf_exp requires a vanishing constant term");
    const unsigned D = f.degree();
    EgfSeries c(D);
    c[0] = 1;
    // c_{n+1} = sum_k C(n,k) c_{n-k} a_{k+1}: the complete Bell recurrence.
    for (unsigned n = 0; n + 1 <= D; ++n) {
        Rat next(0);
        for (unsigned k = 0; k <= n; ++k) next += binomial(n, k) * c[n - k] * f[k + 1];
        c[n + 1] = next;
    }
    return c;
}

EgfSeries egf_log(const EgfSeries& f) {
    if (f[0] != 1) throw std::domain_error("egf_log requires constant term 1");
    const unsigned D = f.degree();
    EgfSeries a(D);
    // Invert the exp recurrence: the k = n summand isolates a_{n+1}.
    for (unsigned n = 0; n + 1 <= D; ++n) {
        Rat rest(0);
        for (unsigned k = 0; k + 1 <= n; ++k) rest += binomial(n, k) * f[n - k] * a[k + 1];
        a[n + 1] = f[n + 1] - rest;
    }
    return a;
}

EgfSeries egf_pow_over_factorial(const EgfSeries& f, unsigned k) {
    if (f[0] != 0) throw std::domain_error("egf power requires a vanishing constant term");
    const unsigned D = f.degree();
    EgfSeries result(D);
    result[0] = 1;
    for (unsigned j = 0; j < k; ++j) result = egf_mul(result, f);
    for (unsigned n = 0; n <= D; ++n) result[n] /= factorial(k);
    return result;
}

}  // namespace momenta
