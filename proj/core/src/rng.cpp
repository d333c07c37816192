#include "momenta/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace momenta {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive_substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    splitmix64_next(state);
    state ^= 0xD1B54A32D192ED03ull * (index + 1);
    splitmix64_next(state);
    return splitmix64_next(state);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& word : s_) word = splitmix64_next(state);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() {
    return 1.0 - uniform();
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) {
        throw std::domain_error("Rng::gamma: shape must be positive");
    }
    if (shape < 1.0) {
        const double boost = std::pow(uniform_pos(), 1.0 / shape);
        return gamma(shape + 1.0) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

unsigned long Rng::poisson(double mean) {
    if (mean < 0.0) {
        throw std::domain_error("Rng::poisson: mean must be non-negative");
    }
    if (mean == 0.0) return 0;
    if (mean > 500.0) {
        // Superposition keeps the product method in exp-representable range.
        return poisson(mean / 2.0) + poisson(mean / 2.0);
    }
    const double limit = std::exp(-mean);
    unsigned long count = 0;
    double product = uniform_pos();
    while (product > limit) {
        ++count;
        product *= uniform_pos();
    }
    return count;
}

}  // namespace momenta
