#pragma once

#include <cstdint>

namespace momenta {

/// One step of the splitmix64 sequence; advances `state` and returns the
/// output. Used for seeding and for deriving substream keys.
std::uint64_t splitmix64_next(std::uint64_t& state);

/// Stateless substream key for (seed, index): distinct indices yield
/// decorrelated streams, so batches may be generated row by row in any
/// worker layout with identical results.
std::uint64_t derive_substream(std::uint64_t seed, std::uint64_t index);

/// Deterministic pseudo-random generator (xoshiro256** core, splitmix64
/// seeding) with the variate transforms used by the samplers. The generator
/// is fully specified here so that seeded output is identical across
/// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform();
    /// Uniform on (0, 1]; safe under log and reciprocal powers.
    double uniform_pos();
    /// Standard normal via the polar method; one draw is cached.
    double normal();
    /// Gamma(shape, 1) via squeeze-accept on a cubed normal, with the
    /// power-of-uniform boost for shape < 1. Requires shape > 0.
    double gamma(double shape);
    /// Poisson count by the product-of-uniforms method; means above 500 are
    /// split recursively (superposition). Requires mean >= 0.
    unsigned long poisson(double mean);

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace momenta
