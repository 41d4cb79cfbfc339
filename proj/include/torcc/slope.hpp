#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "torcc/errors.hpp"

namespace torcc {

/// A slope p/q on the once-punctured torus, i.e. a vertex of the Farey graph.
/// Canonical form: gcd(|p|,|q|) = 1, q >= 0, and infinity is stored as 1/0.
struct Slope {
    std::int64_t p = 0;
    std::int64_t q = 1;

    Slope() = default;
    Slope(std::int64_t num, std::int64_t den);

    bool is_infinity() const { return q == 0; }

    /// max(|p|, q); the canonical height used for search caps.
    std::int64_t height() const;

    bool operator==(const Slope& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Slope& o) const { return !(*this == o); }
    bool operator<(const Slope& o) const {
        return p != o.p ? p < o.p : q < o.q;
    }

    std::string str() const;
    static Slope parse(const std::string& s);
    static Slope infinity() { return Slope(1, 0); }
};

/// Geometric intersection number i(p/q, r/s) = |p s - r q|.
std::int64_t intersection_number(const Slope& x, const Slope& y);

/// Farey adjacency: intersection number exactly 1.
bool adjacent(const Slope& x, const Slope& y);

/// All Farey neighbors of x with height <= cap, sorted, deduplicated.
std::vector<Slope> neighbors_up_to_height(const Slope& x, std::int64_t cap);

/// All canonical slopes of height <= cap (including infinity and negatives).
std::vector<Slope> slopes_up_to_height(std::int64_t cap);

struct SlopeHash {
    std::size_t operator()(const Slope& s) const {
        std::uint64_t a = static_cast<std::uint64_t>(s.p) * 0x9e3779b97f4a7c15ULL;
        std::uint64_t b = static_cast<std::uint64_t>(s.q) + 0xbf58476d1ce4e5b9ULL;
        std::uint64_t h = a ^ (b + (a << 6) + (a >> 2));
        h ^= h >> 31;
        return static_cast<std::size_t>(h * 0x94d049bb133111ebULL);
    }
};

}  // namespace torcc
