#pragma once

#include <cstdint>

namespace mse {

/// SplitMix64.  Tiny, stable across platforms, and good enough for
/// sampling; determinism of reports and tests depends on never touching
/// std::random distributions, whose output is implementation-defined.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw from [lo, hi]; the modulo bias is irrelevant at
    /// the tiny ranges used here.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace mse
