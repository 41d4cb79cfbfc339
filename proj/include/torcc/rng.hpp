#pragma once

#include <cstdint>

namespace torcc {

/// Counter-based deterministic generator (splitmix64 of seed ^ counter).
/// Streams are reproducible bit-for-bit and safely partitionable: any worker
/// may evaluate any counter value independently.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return at(seed_, counter_++); }

    /// Uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t next_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(
                        static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace torcc
