#pragma once

#include <momenta/rational.hpp>
#include <momenta/rng.hpp>

#include <vector>

namespace testsupport {

using momenta::Rat;

/// Small random rational in [-9/1, 9/1]; bounded numerators keep the exact
/// partition sums in the identity suites fast.
inline Rat draw_rat(momenta::Rng& rng, bool nonzero = false) {
    long num = static_cast<long>(rng.next_u64() % 19) - 9;
    if (nonzero && num == 0) num = 1;
    const long den = static_cast<long>(rng.next_u64() % 9) + 1;
    return momenta::rat(num, den);
}

/// Random rational in [1/9, 9].
inline Rat draw_positive_rat(momenta::Rng& rng) {
    const long num = static_cast<long>(rng.next_u64() % 9) + 1;
    const long den = static_cast<long>(rng.next_u64() % 9) + 1;
    return momenta::rat(num, den);
}

inline std::vector<Rat> draw_rats(momenta::Rng& rng, std::size_t count,
                                  bool nonzero = false) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(draw_rat(rng, nonzero));
    return out;
}

inline std::vector<Rat> draw_positive_rats(momenta::Rng& rng, std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(draw_positive_rat(rng));
    return out;
}

/// Uniform random permutation of {1,..,n} in one-line notation.
inline std::vector<unsigned> draw_permutation(momenta::Rng& rng, unsigned n) {
    std::vector<unsigned> p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = i + 1;
    for (unsigned i = n; i > 1; --i) {
        const unsigned j = static_cast<unsigned>(rng.next_u64() % i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

}  // namespace testsupport
