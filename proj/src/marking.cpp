#include "torcc/marking.hpp"

#include <algorithm>
#include <unordered_map>

#include "torcc/errors.hpp"
#include "torcc/farey.hpp"
#include "torcc/mat2.hpp"

namespace torcc {

Marking::Marking(Slope b, Slope t) : base(b), transversal(t) {
    if (intersection_number(base, transversal) != 1)
        throw DomainError("marking requires intersection number 1: " + base.str() +
                          "|" + transversal.str());
}

std::string Marking::str() const { return base.str() + "|" + transversal.str(); }

Marking Marking::parse(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos)
        throw DomainError("marking must be base|transversal: " + s);
    return Marking(Slope::parse(s.substr(0, bar)), Slope::parse(s.substr(bar + 1)));
}

std::vector<Marking> elementary_moves(const Marking& m) {
    Mat2 tw = twist_matrix(m.base);
    std::vector<Marking> out;
    out.emplace_back(m.base, apply(tw, m.transversal));
    out.emplace_back(m.base, apply(tw.inverse(), m.transversal));
    out.emplace_back(m.transversal, m.base);
    std::sort(out.begin(), out.end(), [](const Marking& a, const Marking& b) {
        return a.base != b.base ? a.base < b.base : a.transversal < b.transversal;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return;
    }
    std::int64_t u1, v1;
    ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
}

// Base solution (r0, s0) of p*s - r*q = 1 for the neighbor family of p/q.
void neighbor_family(const Slope& base, std::int64_t& r0, std::int64_t& s0) {
    std::int64_t u, v;
    ext_gcd(base.p, base.q, u, v);  // p*u + q*v = 1
    s0 = u;
    r0 = -v;
}

}  // namespace

std::int64_t neighbor_index(const Slope& base, const Slope& t) {
    if (intersection_number(base, t) != 1)
        throw DomainError("neighbor_index requires adjacent slopes");
    std::int64_t r0, s0;
    neighbor_family(base, r0, s0);
    // Sign-match the representative so that p*s - r*q = +1.
    std::int64_t r = t.p, s = t.q;
    __int128 e = static_cast<__int128>(base.p) * s - static_cast<__int128>(r) * base.q;
    if (e == -1) {
        r = -r;
        s = -s;
    }
    if (base.q != 0) return (s - s0) / base.q;
    return r - r0;  // base = infinity, p = 1
}

Slope neighbor_at_index(const Slope& base, std::int64_t index) {
    std::int64_t r0, s0;
    neighbor_family(base, r0, s0);
    return Slope(r0 + index * base.p, s0 + index * base.q);
}

namespace {

using Visited = std::unordered_map<Marking, std::int32_t, MarkingHash>;

}  // namespace

std::int64_t marking_distance(const Marking& a, const Marking& b,
                              std::size_t max_states) {
    if (a == b) return 0;
    Visited side[2];
    std::vector<Marking> frontier[2];
    side[0].emplace(a, 0);
    side[1].emplace(b, 0);
    frontier[0].push_back(a);
    frontier[1].push_back(b);
    std::int64_t depth[2] = {0, 0};
    std::size_t states = 2;
    while (!frontier[0].empty() && !frontier[1].empty()) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::vector<Marking> next;
        ++depth[s];
        for (const Marking& v : frontier[s]) {
            for (const Marking& w : elementary_moves(v)) {
                auto hit = side[1 - s].find(w);
                if (hit != side[1 - s].end()) return depth[s] + hit->second;
                if (side[s].emplace(w, depth[s]).second) {
                    next.push_back(w);
                    if (++states > max_states)
                        throw BudgetError("marking_distance state budget exceeded");
                }
            }
        }
        frontier[s] = std::move(next);
    }
    throw BudgetError("marking graph search exhausted unexpectedly");
}

namespace {

// Search for the marking distance over twist-orbit states (vertex, index)
// with the vertex confined to a given corridor of slopes. Moves are unit
// cost: twist steps along the orbit line and flips onto corridor neighbors.
// Returns -1 when the end state is unreachable inside the corridor.
std::int64_t corridor_search(const Marking& a, const Marking& b,
                             const std::vector<Slope>& corridor) {
    std::unordered_map<Slope, std::size_t, SlopeHash> id;
    for (const Slope& v : corridor) id.emplace(v, id.size());
    const std::size_t n = corridor.size();

    // Window of useful twist indices per vertex: the indices of its corridor
    // neighbors (twisting past all of them can never help).
    std::vector<std::int64_t> lo(n), hi(n);
    std::vector<bool> seen_any(n, false);
    auto widen = [&](std::size_t i, std::int64_t idx) {
        if (!seen_any[i]) {
            seen_any[i] = true;
            lo[i] = hi[i] = idx;
        } else {
            lo[i] = std::min(lo[i], idx);
            hi[i] = std::max(hi[i], idx);
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adjacent(corridor[i], corridor[j]))
                widen(i, neighbor_index(corridor[i], corridor[j]));
    widen(id.at(a.base), neighbor_index(a.base, a.transversal));
    widen(id.at(b.base), neighbor_index(b.base, b.transversal));

    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        offset[i + 1] = offset[i] +
                        (seen_any[i] ? static_cast<std::size_t>(hi[i] - lo[i] + 1) : 0);
    auto state = [&](std::size_t i, std::int64_t idx) {
        return offset[i] + static_cast<std::size_t>(idx - lo[i]);
    };

    std::vector<std::int32_t> dist(offset[n], -1);
    std::size_t start = state(id.at(a.base), neighbor_index(a.base, a.transversal));
    std::size_t goal = state(id.at(b.base), neighbor_index(b.base, b.transversal));
    std::vector<std::size_t> frontier{start};
    dist[start] = 0;
    // Recover (vertex, index) from a flat state id via the offset table.
    auto unpack = [&](std::size_t s, std::size_t& i, std::int64_t& idx) {
        i = static_cast<std::size_t>(
                std::upper_bound(offset.begin(), offset.end(), s) -
                offset.begin()) - 1;
        idx = lo[i] + static_cast<std::int64_t>(s - offset[i]);
    };
    for (std::int32_t depth = 0; !frontier.empty(); ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t s : frontier) {
            if (s == goal) return depth;
            std::size_t i;
            std::int64_t idx;
            unpack(s, i, idx);
            auto push = [&](std::size_t t) {
                if (dist[t] < 0) {
                    dist[t] = depth + 1;
                    next.push_back(t);
                }
            };
            if (idx > lo[i]) push(state(i, idx - 1));
            if (idx < hi[i]) push(state(i, idx + 1));
            Slope w = neighbor_at_index(corridor[i], idx);
            auto hit = id.find(w);
            if (hit != id.end())
                push(state(hit->second, neighbor_index(w, corridor[i])));
        }
        frontier = std::move(next);
    }
    return -1;
}

// One widening round: add both common neighbors of every adjacent pair.
void close_fans(std::vector<Slope>& corridor) {
    std::unordered_map<Slope, char, SlopeHash> have;
    for (const Slope& v : corridor) have.emplace(v, 1);
    std::size_t m = corridor.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Slope x = corridor[i], y = corridor[j];  // copies: push_back below
            if (!adjacent(x, y)) continue;           // may reallocate

            for (int sgn : {1, -1}) {
                std::int64_t p = x.p + sgn * y.p, q = x.q + sgn * y.q;
                if (p == 0 && q == 0) continue;
                Slope w(p, q);
                if (have.emplace(w, 1).second) corridor.push_back(w);
            }
        }
}

}  // namespace

std::int64_t marking_distance_corridor(const Marking& a, const Marking& b,
                                       int layers) {
    if (a == b) return 0;
    std::vector<Slope> corridor = farey_geodesic(a.base, b.base);
    for (const Slope& t : {a.transversal, b.transversal})
        if (std::find(corridor.begin(), corridor.end(), t) == corridor.end())
            corridor.push_back(t);
    for (int i = 0; i < layers; ++i) close_fans(corridor);
    std::int64_t prev = corridor_search(a, b, corridor);
    for (;;) {
        close_fans(corridor);
        std::int64_t cur = corridor_search(a, b, corridor);
        if (cur >= 0 && cur == prev) return cur;
        prev = cur;
    }
}

std::int64_t distance_to_set(const Marking& m, const std::vector<Marking>& targets,
                             std::size_t max_states) {
    std::unordered_map<Marking, char, MarkingHash> target_set;
    for (const auto& t : targets) target_set.emplace(t, 1);
    if (target_set.count(m)) return 0;
    Visited seen;
    seen.emplace(m, 0);
    std::vector<Marking> frontier{m};
    std::int64_t depth = 0;
    std::size_t states = 1;
    while (!frontier.empty()) {
        std::vector<Marking> next;
        ++depth;
        for (const Marking& v : frontier) {
            for (const Marking& w : elementary_moves(v)) {
                if (target_set.count(w)) return depth;
                if (seen.emplace(w, depth).second) {
                    next.push_back(w);
                    if (++states > max_states)
                        throw BudgetError("distance_to_set state budget exceeded");
                }
            }
        }
        frontier = std::move(next);
    }
    throw BudgetError("marking graph search exhausted unexpectedly");
}

std::vector<Marking> marking_ball(const Marking& m, std::int64_t radius,
                                  std::size_t max_states) {
    Visited seen;
    seen.emplace(m, 0);
    std::vector<Marking> frontier{m};
    std::vector<Marking> out{m};
    for (std::int64_t depth = 1; depth <= radius; ++depth) {
        std::vector<Marking> next;
        for (const Marking& v : frontier) {
            for (const Marking& w : elementary_moves(v)) {
                if (seen.emplace(w, depth).second) {
                    next.push_back(w);
                    out.push_back(w);
                    if (out.size() > max_states)
                        throw BudgetError("marking_ball state budget exceeded");
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::int64_t marking_annular_distance(const Slope& gamma, const Marking& a,
                                      const Marking& b) {
    const Slope& ra = a.base != gamma ? a.base : a.transversal;
    const Slope& rb = b.base != gamma ? b.base : b.transversal;
    return annular_distance(gamma, ra, rb);
}

}  // namespace torcc
