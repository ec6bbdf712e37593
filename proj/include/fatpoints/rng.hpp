#pragma once

#include <cstdint>

namespace fatpoints {

/// SplitMix64: tiny, fully specified generator. Used everywhere bit-exact
/// reproducibility across platforms matters (std:: distributions are
/// implementation-defined).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be nonzero. The modulo
    /// bias is ~bound/2^64, irrelevant at the sizes used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Value in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace fatpoints
