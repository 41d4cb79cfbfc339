#pragma once

#include <cstdint>
#include <vector>

#include "torcc/slope.hpp"

namespace torcc {

/// Graph distance in the Farey graph. Bidirectional BFS restricted to slopes
/// of bounded height; the cap starts at the endpoint heights plus a slack and
/// the slack doubles until the distance stabilizes.
std::int64_t farey_distance(const Slope& x, const Slope& y);

/// One geodesic from x to y (consecutive entries adjacent, length =
/// farey_distance).
std::vector<Slope> farey_geodesic(const Slope& x, const Slope& y);

/// Gromov four-point constant over every quadruple of the given points,
/// with distances supplied as a dense matrix (entry [i*n+j]).
/// Returns 2*delta (the defect is always a half-integer).
std::int64_t four_point_two_delta(const std::vector<std::int16_t>& dist,
                                  std::size_t n, bool parallel);

/// Dense Farey distance matrix for a point set (row-major, int16).
std::vector<std::int16_t> distance_matrix(const std::vector<Slope>& pts);

/// Measured four-point 2*delta over all quadruples of slopes with height <= cap.
std::int64_t four_point_two_delta_up_to_height(std::int64_t cap, bool parallel);

}  // namespace torcc
