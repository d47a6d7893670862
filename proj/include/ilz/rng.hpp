#pragma once

#include <cstdint>

namespace ilz {

/// Counter-based generator: every (seed, stream) pair yields an independent,
/// reproducible sequence, so parallel and serial Monte Carlo runs agree
/// bit for bit. Core transform is SplitMix64.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace ilz
