#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torcc/hierarchy.hpp"
#include "torcc/marking.hpp"

namespace torcc {

/// [[n]]_M: n if n >= M (inclusive), else 0.
inline std::int64_t cutoff(std::int64_t n, std::int64_t M) {
    return n >= M ? n : 0;
}

/// x/c1 - c2 <= y <= c1*x + c2.
inline bool coarse_equal(double x, double y, double c1, double c2) {
    return x / c1 - c2 <= y && y <= c1 * x + c2;
}

/// Fitted or assumed coarse constants; every field carries provenance.
struct CoarseConstants {
    double delta = 1.0;       // Farey four-point hyperbolicity constant
    std::int64_t N = 8;       // contraction diameter bound (in step indices)
    std::int64_t R0 = 4;      // contraction onset radius
    double C = 2.0;           // contraction ratio
    std::int64_t D = 8;       // stability deviation bound
    std::int64_t B0 = 10;     // Behrstock gap bound
    std::int64_t frame_error = 2;  // cf-entry vs annular-coefficient gap
    HierarchyConstants hier;
    std::map<std::string, std::string> provenance;

    void save(const std::string& path) const;
    static CoarseConstants load(const std::string& path);
};

struct ThresholdTerm {
    std::string domain;  // "S" or the annulus core
    std::int64_t raw = 0;
    std::int64_t cut = 0;
};

struct ThresholdSum {
    std::int64_t threshold = 0;
    std::vector<ThresholdTerm> terms;
    std::int64_t total = 0;
};

/// Threshold sum over the whole surface plus every annulus whose core lies on
/// the main Farey geodesic between the two bases (the finite support).
ThresholdSum distance_formula(const Marking& m1, const Marking& m2,
                              std::int64_t M3);

/// Step index of the nearest-point projection: closest main-geodesic vertex
/// to base(m) (ties to the smaller index), then the first step carrying it.
std::size_t project_to_hierarchy(const HierarchyPath& h, const Marking& m);

struct ContractionReport {
    bool refused = false;      // endpoints failed the bounded-combinatorics pre
    std::string refusal_witness;
    int attempted = 0;
    int measured = 0;
    std::int64_t max_diameter = 0;
    bool pass = false;  // every measured diameter <= N
};

/// Samples markings at distance R >= R0 from |h| and measures the projection
/// diameter of the radius-R/C ball around each (theorem "coarse contraction"
/// shape). Endpoints must have annular coefficients < K along the geodesic.
ContractionReport contraction_experiment(const HierarchyPath& h, int samples,
                                         std::uint64_t seed,
                                         const CoarseConstants& cc,
                                         std::int64_t K,
                                         std::size_t bfs_budget = 1000000);

/// Detour-perturbed copy of h: a valid (K0, K0)-quasi-geodesic in the marking
/// graph with the same endpoints.
std::vector<Marking> make_detour_perturbation(const HierarchyPath& h,
                                              std::uint64_t seed, int detours);

struct StabilityReport {
    bool rejected = false;  // input failed the quasi-geodesic spec
    std::string rejection_witness;
    std::int64_t max_deviation = 0;
    bool pass = false;  // max deviation <= D
};

/// Verifies F is a (K0, K0)-quasi-geodesic with the endpoints of h (sampled,
/// budgeted), then measures max_t d(F(t), h[pi(F(t))]) against D.
StabilityReport stability_experiment(const HierarchyPath& h,
                                     const std::vector<Marking>& F, double K0,
                                     std::uint64_t seed,
                                     const CoarseConstants& cc,
                                     std::size_t bfs_budget = 1000000);

/// Deterministic corpus sampling (counter-based, keyed by seed).
Slope random_slope(std::uint64_t seed, std::uint64_t counter, std::int64_t cap);
Marking random_marking(std::uint64_t seed, std::uint64_t counter, std::int64_t cap);

struct FitSpec {
    std::uint64_t seed = 42;
    std::int64_t slope_cap = 40;       // corpus denominators
    int pairs = 500;                   // distance-formula calibration pairs
    int paths = 200;                   // hierarchy-axiom calibration paths
    int contraction_samples = 200;
    int stability_samples = 80;
    std::int64_t bounded_K = 30;
    std::size_t bfs_budget = 4000000;
};

/// Fits every coarse constant on seeded calibration corpora and records the
/// sample provenance per field. Deterministic given the spec.
CoarseConstants fit_constants(const FitSpec& spec);

}  // namespace torcc
