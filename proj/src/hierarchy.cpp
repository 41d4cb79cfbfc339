#include "torcc/hierarchy.hpp"

#include <algorithm>
#include <cmath>

#include "torcc/errors.hpp"
#include "torcc/farey.hpp"
#include "torcc/mat2.hpp"
#include "torcc/rng.hpp"

namespace torcc {

namespace {

// Twist the transversal of (base, t) to the target neighbor, one elementary
// move per step, appending every intermediate marking.
void twist_to(std::vector<Marking>& steps, const Slope& base, const Slope& target,
              std::int64_t& twist_count) {
    Slope t = steps.back().transversal;
    std::int64_t cur = neighbor_index(base, t);
    std::int64_t tgt = neighbor_index(base, target);
    Mat2 tw = twist_matrix(base);
    Mat2 step = tgt >= cur ? tw : tw.inverse();
    for (std::int64_t i = 0; i < (tgt >= cur ? tgt - cur : cur - tgt); ++i) {
        t = apply(step, t);
        steps.emplace_back(base, t);
        ++twist_count;
    }
}

}  // namespace

HierarchyPath build_hierarchy_path(const Marking& m1, const Marking& m2) {
    HierarchyPath h;
    h.main_geodesic = farey_geodesic(m1.base, m2.base);
    h.steps.push_back(m1);
    std::vector<std::int64_t> twists(h.main_geodesic.size(), 0);
    std::vector<std::size_t> first(h.main_geodesic.size(), 0);
    for (std::size_t i = 0; i + 1 < h.main_geodesic.size(); ++i) {
        twist_to(h.steps, h.main_geodesic[i], h.main_geodesic[i + 1], twists[i]);
        h.steps.emplace_back(h.main_geodesic[i + 1], h.main_geodesic[i]);
        first[i + 1] = h.steps.size() - 1;
    }
    // Resolve the final transversal.
    std::int64_t tail_twists = 0;
    twist_to(h.steps, h.main_geodesic.back(), m2.transversal, tail_twists);
    twists.back() += tail_twists;
    if (h.steps.back() != m2)
        throw DomainError("hierarchy path failed to reach its endpoint");
    for (std::size_t i = 0; i < h.main_geodesic.size(); ++i) {
        if (twists[i] < 1) continue;
        ComponentDomain d;
        d.core = h.main_geodesic[i];
        d.begin = first[i];
        d.end = i + 1 < h.main_geodesic.size() ? first[i + 1] - 1 : h.steps.size() - 1;
        d.twists = twists[i];
        h.domains.push_back(d);
    }
    return h;
}

bool HierarchyReport::all_pass() const {
    return structure.pass && domain_support.pass && large_links.pass &&
           monotone.pass && bounded_outside.pass && quasigeodesic.pass;
}

std::string HierarchyReport::summary() const {
    auto line = [](const char* name, const AxiomCheck& c) {
        std::string s = std::string(name) + "=" + (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.witness.empty()) s += "(" + c.witness + ")";
        return s;
    };
    return line("structure", structure) + " " + line("domains", domain_support) +
           " " + line("large_links", large_links) + " " +
           line("monotone", monotone) + " " +
           line("bounded_outside", bounded_outside) + " " +
           line("quasigeodesic", quasigeodesic);
}

HierarchyReport check_hierarchy_axioms(const HierarchyPath& h,
                                       const HierarchyConstants& consts,
                                       std::uint64_t seed, int qg_samples,
                                       std::size_t bfs_budget) {
    HierarchyReport rep;
    const auto& steps = h.steps;
    if (steps.empty()) {
        rep.structure = {false, "empty path"};
        return rep;
    }
    for (std::size_t i = 0; i + 1 < steps.size() && rep.structure.pass; ++i) {
        auto moves = elementary_moves(steps[i]);
        if (std::find(moves.begin(), moves.end(), steps[i + 1]) == moves.end())
            rep.structure = {false, "step " + std::to_string(i)};
    }

    // (1) The core lies on or next to every step of its interval.
    for (const auto& d : h.domains) {
        for (std::size_t j = d.begin; j <= d.end && rep.domain_support.pass; ++j) {
            if (steps[j].base != d.core && !adjacent(steps[j].base, d.core))
                rep.domain_support = {false, d.core.str() + "@" + std::to_string(j)};
        }
    }

    // (2) Any annulus on the main geodesic with a large coefficient is a domain.
    for (const Slope& g : h.main_geodesic) {
        std::int64_t dg = marking_annular_distance(g, steps.front(), steps.back());
        if (dg <= consts.M1) continue;
        bool found = false;
        for (const auto& d : h.domains) found = found || d.core == g;
        if (!found) {
            rep.large_links = {false, g.str() + ":" + std::to_string(dg)};
            break;
        }
    }

    // (3) Twist coordinates are monotone within each interval, up to 2.
    for (const auto& d : h.domains) {
        std::vector<std::int64_t> tc;
        for (std::size_t j = d.begin; j <= d.end; ++j) {
            const Slope& rep_slope = steps[j].base != d.core ? steps[j].base
                                                             : steps[j].transversal;
            tc.push_back(twist_coordinate(d.core, rep_slope));
        }
        int dir = tc.back() >= tc.front() ? 1 : -1;
        std::int64_t extreme = tc.front();
        for (std::size_t i = 1; i < tc.size() && rep.monotone.pass; ++i) {
            if (dir * (tc[i] - extreme) < -2)
                rep.monotone = {false, d.core.str() + "@" + std::to_string(d.begin + i)};
            if (dir * (tc[i] - extreme) > 0) extreme = tc[i];
        }
        if (!rep.monotone.pass) break;
    }

    // (4) Outside its interval, the projection to a domain barely moves.
    for (const auto& d : h.domains) {
        for (std::size_t t = 0; t < steps.size() && rep.bounded_outside.pass; ++t) {
            if (t >= d.begin && t <= d.end) continue;
            std::size_t anchor = t < d.begin ? d.begin : d.end;
            std::int64_t move = marking_annular_distance(d.core, steps[t], steps[anchor]);
            if (move >= consts.M2)
                rep.bounded_outside = {false,
                                       d.core.str() + ":" + std::to_string(move)};
        }
        if (!rep.bounded_outside.pass) break;
    }

    // (6) Sampled quasi-geodesic bounds against exact marking distance.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (steps.size() > 1) pairs.emplace_back(0, steps.size() - 1);
    CounterRng rng(seed);
    for (int s = 0; s < qg_samples && steps.size() > 2; ++s) {
        std::size_t i = rng.next_below(steps.size());
        std::size_t j = rng.next_below(steps.size());
        if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    for (auto [i, j] : pairs) {
        std::int64_t d = marking_distance_corridor(steps[i], steps[j]);
        auto gap = static_cast<std::int64_t>(j - i);
        if (d > gap || static_cast<double>(gap) > consts.K_H * static_cast<double>(d)) {
            rep.quasigeodesic = {false, std::to_string(i) + "," + std::to_string(j) +
                                            ":d=" + std::to_string(d)};
            break;
        }
    }
    return rep;
}

}  // namespace torcc
