#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torcc/contfrac.hpp"
#include "torcc/mat2.hpp"
#include "torcc/slope.hpp"

namespace torcc {

/// Deterministic coordinate frame for the annulus with core gamma: an
/// SL(2,Z) matrix sending gamma to infinity. Bottom row (-q, p); top row is
/// the extended-gcd solution with 0 <= a < q. frame(infinity) is the identity.
Mat2 annulus_frame(const Slope& gamma);

/// Integer twist coordinate of x around gamma: floor of the image of x under
/// the frame of gamma. Requires x != gamma.
std::int64_t twist_coordinate(const Slope& gamma, const Slope& x);

/// Annular projection distance d_gamma(x, y) = |twist difference| + 1.
/// The +1 is the diameter convention (projections have diameter >= 1).
std::int64_t annular_distance(const Slope& gamma, const Slope& x, const Slope& y);

/// (d_alpha(beta, x), d_beta(alpha, x)); consumed by the property suite.
std::pair<std::int64_t, std::int64_t> behrstock_gap(const Slope& alpha,
                                                    const Slope& beta,
                                                    const Slope& x);

/// An endpoint for bounded-combinatorics checks: a slope or an exact
/// quadratic irrational on the boundary.
using BoundaryPoint = std::variant<Slope, QuadraticIrrational>;

BoundaryPoint parse_boundary_point(const std::string& s);

struct AnnularCoefficient {
    mpz_class value;
    std::string annulus;               // exact, as "p/q" in the source frame
    std::optional<Slope> annulus_slope;  // present when it fits a Slope
};

struct BoundedCombinatorics {
    bool ok = false;
    mpz_class max_coefficient;
    AnnularCoefficient witness;
    std::vector<AnnularCoefficient> coefficients;
};

/// True iff every annular coefficient between x and y is < K. Coefficients
/// are read from the continued-fraction entries of the pair written in a
/// common frame; the witness is the maximal coefficient and its annulus.
BoundedCombinatorics bounded_combinatorics(const BoundaryPoint& x,
                                           const BoundaryPoint& y,
                                           std::int64_t K);

}  // namespace torcc
