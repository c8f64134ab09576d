#pragma once

#include <cstdint>

namespace triesmooth {

/*
 * Randomness contract of the library: every experiment is a pure function of
 * one 64-bit master seed. Logical tasks (strings of a sample set, trials of an
 * experiment) get independent substreams via derive_stream, so parallel
 * execution and task ordering can never change results.
 *
 * Stream derivation: substream i of master seed m is seeded with the (i+1)-st
 * output of the SplitMix64 sequence started at m. The jump is O(1) because
 * SplitMix64 advances its state by a fixed increment.
 */

inline constexpr std::uint64_t kDefaultSeed = 123456789;

namespace detail {

inline constexpr std::uint64_t kSplitMix64Increment = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t rotl64(std::uint64_t x, unsigned k) noexcept {
    return (x << k) | (x >> (64U - k));
}

inline constexpr std::uint64_t split_mix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += kSplitMix64Increment);
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

}  // namespace detail

inline constexpr std::uint64_t derive_stream(std::uint64_t master, std::uint64_t i) noexcept {
    std::uint64_t state = master + i * detail::kSplitMix64Increment;
    return detail::split_mix64(state);
}

/// xoshiro256** by Blackman and Vigna. Pure 64-bit integer arithmetic, hence
/// bit-identical output on every platform for a fixed seed.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed) noexcept {
        for (auto& word : state_) {
            word = detail::split_mix64(seed);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~static_cast<result_type>(0); }

    result_type operator()() noexcept {
        const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() noexcept {
        return static_cast<double>(operator()() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_[4];
};

}  // namespace triesmooth
