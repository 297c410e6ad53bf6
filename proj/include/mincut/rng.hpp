#pragma once

#include <cstdint>

#include "mincut/errors.hpp"

namespace mincut {

/// Deterministic random source with platform-independent output.
///
/// The engine is xoshiro256++ seeded through a splitmix64 expansion, so a
/// given seed yields the same draw sequence on every platform and compiler.
/// Independent per-trial streams are derived from (seed, trial index) alone,
/// never from generator state, which keeps parallel trial schedules
/// reproducible regardless of thread count.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t seed() const { return seed_; }

    /// Next raw 64-bit word.
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound). Lemire's multiply-reject.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw InvalidArgument("next_below: bound must be positive");
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Bernoulli event with exact rational probability num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        return next_below(den) < num;
    }

    /// Independent stream for one trial, a function of (seed, trial) only.
    RandomSource stream(std::uint64_t trial) const {
        std::uint64_t x = seed_ ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
        // two finalizer rounds decorrelate neighbouring trial indices
        splitmix64(x);
        return RandomSource(splitmix64(x));
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_[4];
};

}  // namespace mincut
