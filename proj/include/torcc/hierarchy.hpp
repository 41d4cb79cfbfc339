#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torcc/marking.hpp"
#include "torcc/slope.hpp"

namespace torcc {

/// Per-annulus interval of a hierarchy path.
struct ComponentDomain {
    Slope core;
    std::size_t begin = 0;  // step indices [begin, end], inclusive
    std::size_t end = 0;
    std::int64_t twists = 0;  // twist moves inserted in this domain
};

/// A resolution path in the marking graph shadowing a main Farey geodesic.
struct HierarchyPath {
    std::vector<Marking> steps;
    std::vector<ComponentDomain> domains;
    std::vector<Slope> main_geodesic;

    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct HierarchyConstants {
    std::int64_t M1 = 3;
    std::int64_t M2 = 5;
    std::int64_t M3 = 3;  // distance-formula threshold, >= M1
    double c1 = 2.0;
    double c2 = 8.0;
    double K_H = 4.0;
};

/// Deterministic hierarchy path: walk the main geodesic, at each vertex twist
/// the transversal to match the next vertex, then flip.
HierarchyPath build_hierarchy_path(const Marking& m1, const Marking& m2);

struct AxiomCheck {
    bool pass = true;
    std::string witness;
};

struct HierarchyReport {
    AxiomCheck structure;      // consecutive steps are elementary moves
    AxiomCheck domain_support;  // (1) core on or adjacent to every step of J
    AxiomCheck large_links;     // (2) d_gamma > M1 forces a domain
    AxiomCheck monotone;        // (3) twist coordinates monotone within J (+-2)
    AxiomCheck bounded_outside; // (4) projection moves < M2 outside J
    AxiomCheck quasigeodesic;   // (6) 1/K_H <= d/|j-i| <= 1 on sampled pairs
    bool all_pass() const;
    std::string summary() const;
};

/// Verifies the hierarchy axioms on a constructed path. The quasi-geodesic
/// clause is verified on the endpoint pair plus `qg_samples` seeded random
/// pairs, each through a budgeted BFS.
HierarchyReport check_hierarchy_axioms(const HierarchyPath& h,
                                       const HierarchyConstants& consts,
                                       std::uint64_t seed = 1,
                                       int qg_samples = 2,
                                       std::size_t bfs_budget = 1000000);

}  // namespace torcc
