#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spectral_perturb {

/// SplitMix64: state advances by the golden-ratio increment 0x9E3779B97F4A7C15,
/// output is the MurmurHash3-style finalizer with multipliers
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27, 31).
///
/// All randomness in the library flows through this generator, so any
/// implementation reproducing these constants reproduces every experiment.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n) by rejection on the top of the 64-bit range.
    std::uint64_t below(std::uint64_t n) noexcept;

    /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
    double normal() noexcept;

    /// +1 or -1 with equal probability from the top bit of one draw.
    double sign() noexcept { return (next() >> 63) ? 1.0 : -1.0; }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Independent stream for trial `index` of an experiment seeded with `seed`.
    /// Streams depend only on (seed, index), so parallel drivers are
    /// schedule-independent.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
        return SplitMix64(mix(seed ^ mix(index + kGamma)));
    }

private:
    std::uint64_t state_;
};

/// First `k` entries of a Fisher-Yates shuffle of {0, ..., n-1}.
std::vector<std::size_t> partial_shuffle(SplitMix64& rng, std::size_t n, std::size_t k);

}  // namespace spectral_perturb
