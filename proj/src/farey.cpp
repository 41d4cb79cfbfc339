#include "torcc/farey.hpp"

#include <algorithm>
#include <unordered_map>

#include "torcc/errors.hpp"

namespace torcc {

namespace {

// Bidirectional BFS under a height cap. Returns -1 if the two sides never
// meet below the cap (possible only when the cap is too tight).
std::int64_t capped_distance(const Slope& x, const Slope& y, std::int64_t cap) {
    if (x == y) return 0;
    using Map = std::unordered_map<Slope, std::int32_t, SlopeHash>;
    Map side[2];
    std::vector<Slope> frontier[2];
    side[0].emplace(x, 0);
    side[1].emplace(y, 0);
    frontier[0].push_back(x);
    frontier[1].push_back(y);
    std::int64_t depth[2] = {0, 0};
    while (!frontier[0].empty() && !frontier[1].empty()) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::vector<Slope> next;
        ++depth[s];
        for (const Slope& v : frontier[s]) {
            for (const Slope& w : neighbors_up_to_height(v, cap)) {
                auto hit = side[1 - s].find(w);
                if (hit != side[1 - s].end())
                    return depth[s] + hit->second;
                if (side[s].emplace(w, depth[s]).second) next.push_back(w);
            }
        }
        frontier[s] = std::move(next);
    }
    return -1;
}

}  // namespace

std::int64_t farey_distance(const Slope& x, const Slope& y) {
    if (x == y) return 0;
    if (adjacent(x, y)) return 1;
    std::int64_t base = std::max<std::int64_t>({x.height(), y.height(), 1});
    std::int64_t slack = 2;
    std::int64_t prev = -1;
    for (int round = 0; round < 24; ++round) {
        std::int64_t d = capped_distance(x, y, base + slack);
        if (d >= 0 && d == prev) return d;
        prev = d;
        slack *= 2;
    }
    throw BudgetError("farey_distance did not stabilize");
}

std::vector<Slope> farey_geodesic(const Slope& x, const Slope& y) {
    if (x == y) return {x};
    std::int64_t d = farey_distance(x, y);
    // Unidirectional BFS with parents at a cap known to realize the distance.
    std::int64_t base = std::max<std::int64_t>({x.height(), y.height(), 1});
    std::int64_t slack = 2;
    for (int round = 0; round < 24; ++round, slack *= 2) {
        std::int64_t cap = base + slack;
        std::unordered_map<Slope, Slope, SlopeHash> parent;
        std::vector<Slope> frontier{x};
        parent.emplace(x, x);
        bool found = false;
        for (std::int64_t depth = 0; depth < d && !found; ++depth) {
            std::vector<Slope> next;
            for (const Slope& v : frontier) {
                for (const Slope& w : neighbors_up_to_height(v, cap)) {
                    if (!parent.emplace(w, v).second) continue;
                    if (w == y) {
                        found = true;
                        break;
                    }
                    next.push_back(w);
                }
                if (found) break;
            }
            frontier = std::move(next);
        }
        if (!found) continue;
        std::vector<Slope> path{y};
        while (path.back() != x) path.push_back(parent.at(path.back()));
        std::reverse(path.begin(), path.end());
        if (static_cast<std::int64_t>(path.size()) == d + 1) return path;
    }
    throw BudgetError("farey_geodesic did not stabilize");
}

std::vector<std::int16_t> distance_matrix(const std::vector<Slope>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::int16_t> dist(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = static_cast<std::int16_t>(farey_distance(pts[i], pts[j]));
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    return dist;
}

namespace {

inline std::int64_t quad_defect(const std::int16_t* dist, std::size_t n,
                                std::size_t i, std::size_t j, std::size_t k,
                                std::size_t l) {
    std::int64_t s1 = dist[i * n + j] + dist[k * n + l];
    std::int64_t s2 = dist[i * n + k] + dist[j * n + l];
    std::int64_t s3 = dist[i * n + l] + dist[j * n + k];
    std::int64_t hi = std::max({s1, s2, s3});
    std::int64_t mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
    return hi - mid;  // = 2 * defect
}

}  // namespace

std::int64_t four_point_two_delta(const std::vector<std::int16_t>& dist,
                                  std::size_t n, bool parallel) {
    const std::int16_t* d = dist.data();
    std::int64_t best = 0;
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4) reduction(max : best)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l)
                        best = std::max(best, quad_defect(d, n, i, j, k, l));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l)
                        best = std::max(best, quad_defect(d, n, i, j, k, l));
    }
    return best;
}

std::int64_t four_point_two_delta_up_to_height(std::int64_t cap, bool parallel) {
    std::vector<Slope> pts = slopes_up_to_height(cap);
    auto dist = distance_matrix(pts);
    return four_point_two_delta(dist, pts.size(), parallel);
}

}  // namespace torcc
