#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torcc/annular.hpp"
#include "torcc/slope.hpp"

namespace torcc {

/// A marking of the torus: a base slope together with a transversal meeting
/// it exactly once. Vertex of the marking graph.
struct Marking {
    Slope base;
    Slope transversal;

    Marking() : base(0, 1), transversal(1, 0) {}
    Marking(Slope b, Slope t);

    bool operator==(const Marking& o) const {
        return base == o.base && transversal == o.transversal;
    }
    bool operator!=(const Marking& o) const { return !(*this == o); }

    std::string str() const;               // "p/q|r/s"
    static Marking parse(const std::string& s);
};

struct MarkingHash {
    std::size_t operator()(const Marking& m) const {
        SlopeHash h;
        std::size_t a = h(m.base);
        std::size_t b = h(m.transversal);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    }
};

/// The three elementary moves: both twists about the base applied to the
/// transversal, and the flip swapping base and transversal.
std::vector<Marking> elementary_moves(const Marking& m);

/// Index of the neighbor t in the twist-orbit parametrization around base;
/// the twist about base shifts this index by exactly one.
std::int64_t neighbor_index(const Slope& base, const Slope& t);

/// Neighbor of `base` with the given orbit index.
Slope neighbor_at_index(const Slope& base, std::int64_t index);

/// Exact marking-graph distance by bidirectional BFS. Throws BudgetError when
/// more than max_states markings were visited, never returns a wrong number.
std::int64_t marking_distance(const Marking& a, const Marking& b,
                              std::size_t max_states = 1000000);

/// Exact marking-graph distance by search restricted to a corridor of slopes
/// around the Farey geodesic between the bases: the geodesic vertices plus
/// `layers` rounds of triangle-fan neighbors. The corridor is widened until
/// two consecutive widths agree. Handles far-apart markings that are out of
/// reach for the unrestricted BFS; agrees with marking_distance wherever the
/// latter is feasible.
std::int64_t marking_distance_corridor(const Marking& a, const Marking& b,
                                       int layers = 2);

/// Distance from m to the nearest element of `targets` (BFS, budgeted).
std::int64_t distance_to_set(const Marking& m, const std::vector<Marking>& targets,
                             std::size_t max_states = 1000000);

/// All markings within the given radius of m (budgeted enumeration).
std::vector<Marking> marking_ball(const Marking& m, std::int64_t radius,
                                  std::size_t max_states = 1000000);

/// Annular projection distance between markings: each marking is represented
/// in the annulus by its base unless the base is the core itself, in which
/// case the transversal is used.
std::int64_t marking_annular_distance(const Slope& gamma, const Marking& a,
                                      const Marking& b);

}  // namespace torcc
