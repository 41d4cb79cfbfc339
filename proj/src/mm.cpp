#include "torcc/mm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "torcc/annular.hpp"
#include "torcc/errors.hpp"
#include "torcc/farey.hpp"
#include "torcc/rng.hpp"

namespace torcc {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

void CoarseConstants::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write constants file: " + path);
    out << "# torcc coarse constants\n";
    auto emit = [&](const std::string& key, const std::string& value) {
        out << key << " = " << value;
        auto it = provenance.find(key);
        if (it != provenance.end()) out << "  # " << it->second;
        out << "\n";
    };
    std::ostringstream fp;
    emit("delta", std::to_string(delta));
    emit("N", std::to_string(N));
    emit("R0", std::to_string(R0));
    emit("C", std::to_string(C));
    emit("D", std::to_string(D));
    emit("B0", std::to_string(B0));
    emit("frame_error", std::to_string(frame_error));
    emit("M1", std::to_string(hier.M1));
    emit("M2", std::to_string(hier.M2));
    emit("M3", std::to_string(hier.M3));
    emit("c1", std::to_string(hier.c1));
    emit("c2", std::to_string(hier.c2));
    emit("K_H", std::to_string(hier.K_H));
}

CoarseConstants CoarseConstants::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read constants file: " + path);
    CoarseConstants cc;
    std::string line;
    while (std::getline(in, line)) {
        std::string prov;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            prov = trim(line.substr(hash + 1));
            line = line.substr(0, hash);
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        if (!prov.empty()) cc.provenance[key] = prov;
        if (key == "delta") cc.delta = std::stod(value);
        else if (key == "N") cc.N = std::stoll(value);
        else if (key == "R0") cc.R0 = std::stoll(value);
        else if (key == "C") cc.C = std::stod(value);
        else if (key == "D") cc.D = std::stoll(value);
        else if (key == "B0") cc.B0 = std::stoll(value);
        else if (key == "frame_error") cc.frame_error = std::stoll(value);
        else if (key == "M1") cc.hier.M1 = std::stoll(value);
        else if (key == "M2") cc.hier.M2 = std::stoll(value);
        else if (key == "M3") cc.hier.M3 = std::stoll(value);
        else if (key == "c1") cc.hier.c1 = std::stod(value);
        else if (key == "c2") cc.hier.c2 = std::stod(value);
        else if (key == "K_H") cc.hier.K_H = std::stod(value);
        else throw DomainError("unknown constants key: " + key);
    }
    return cc;
}

ThresholdSum distance_formula(const Marking& m1, const Marking& m2,
                              std::int64_t M3) {
    ThresholdSum sum;
    sum.threshold = M3;
    std::vector<Slope> vertices = farey_geodesic(m1.base, m2.base);
    std::int64_t ds = static_cast<std::int64_t>(vertices.size()) - 1;
    sum.terms.push_back({"S", ds, cutoff(ds, M3)});
    for (const Slope& g : vertices) {
        std::int64_t raw = marking_annular_distance(g, m1, m2);
        sum.terms.push_back({g.str(), raw, cutoff(raw, M3)});
    }
    for (const auto& t : sum.terms) sum.total += t.cut;
    return sum;
}

std::size_t project_to_hierarchy(const HierarchyPath& h, const Marking& m) {
    std::size_t best_vertex = 0;
    std::int64_t best = -1;
    for (std::size_t i = 0; i < h.main_geodesic.size(); ++i) {
        std::int64_t d = farey_distance(m.base, h.main_geodesic[i]);
        if (best < 0 || d < best) {
            best = d;
            best_vertex = i;
        }
    }
    const Slope& v = h.main_geodesic[best_vertex];
    for (std::size_t j = 0; j < h.steps.size(); ++j)
        if (h.steps[j].base == v) return j;
    return 0;  // unreachable for well-formed paths
}

ContractionReport contraction_experiment(const HierarchyPath& h, int samples,
                                         std::uint64_t seed,
                                         const CoarseConstants& cc,
                                         std::int64_t K,
                                         std::size_t bfs_budget) {
    ContractionReport rep;
    // Precondition: bounded combinatorics of the endpoints along the geodesic.
    for (const Slope& g : h.main_geodesic) {
        std::int64_t dg = marking_annular_distance(g, h.steps.front(), h.steps.back());
        if (dg >= K) {
            rep.refused = true;
            rep.refusal_witness = g.str() + ":" + std::to_string(dg);
            return rep;
        }
    }
    rep.pass = true;
    for (int s = 0; s < samples; ++s) {
        ++rep.attempted;
        CounterRng rng(seed, static_cast<std::uint64_t>(s) << 20);
        // Random walk off the path.
        Marking m = h.steps[rng.next_below(h.steps.size())];
        std::int64_t walk = cc.R0 + rng.next_range(1, 3);
        for (std::int64_t i = 0; i < walk; ++i) {
            auto moves = elementary_moves(m);
            m = moves[rng.next_below(moves.size())];
        }
        std::int64_t R = distance_to_set(m, h.steps, bfs_budget);
        if (R < cc.R0) continue;  // landed too close; not a valid sample
        auto radius = static_cast<std::int64_t>(static_cast<double>(R) / cc.C);
        std::vector<Marking> ball = marking_ball(m, radius, bfs_budget);
        std::int64_t lo = -1, hi = -1;
        for (const Marking& b : ball) {
            auto idx = static_cast<std::int64_t>(project_to_hierarchy(h, b));
            if (lo < 0 || idx < lo) lo = idx;
            if (hi < 0 || idx > hi) hi = idx;
        }
        std::int64_t diam = hi - lo;
        ++rep.measured;
        rep.max_diameter = std::max(rep.max_diameter, diam);
        if (diam > cc.N) rep.pass = false;
    }
    return rep;
}

std::vector<Marking> make_detour_perturbation(const HierarchyPath& h,
                                              std::uint64_t seed, int detours) {
    std::vector<Marking> F = h.steps;
    if (F.size() < 3 || detours <= 0) return F;
    CounterRng rng(seed);
    // Insert out-and-back detours at well-separated positions.
    std::vector<std::size_t> positions;
    std::size_t stride = std::max<std::size_t>(4, F.size() / (detours + 1));
    for (std::size_t pos = stride; pos + 1 < F.size() && detours > 0;
         pos += stride, --detours)
        positions.push_back(pos);
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        const Marking& v = F[*it];
        auto moves = elementary_moves(v);
        Marking w = moves[rng.next_below(moves.size())];
        F.insert(F.begin() + static_cast<std::ptrdiff_t>(*it) + 1, {w, v});
    }
    return F;
}

StabilityReport stability_experiment(const HierarchyPath& h,
                                     const std::vector<Marking>& F, double K0,
                                     std::uint64_t seed,
                                     const CoarseConstants& cc,
                                     std::size_t bfs_budget) {
    StabilityReport rep;
    if (F.empty() || F.front() != h.steps.front() || F.back() != h.steps.back()) {
        rep.rejected = true;
        rep.rejection_witness = "endpoint mismatch";
        return rep;
    }
    for (std::size_t i = 0; i + 1 < F.size(); ++i) {
        auto moves = elementary_moves(F[i]);
        if (std::find(moves.begin(), moves.end(), F[i + 1]) == moves.end()) {
            rep.rejected = true;
            rep.rejection_witness = "not a path at step " + std::to_string(i);
            return rep;
        }
    }
    // Sampled (K0, K0)-quasi-geodesic verification.
    CounterRng rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (F.size() > 1) pairs.emplace_back(0, F.size() - 1);
    for (int s = 0; s < 4 && F.size() > 2; ++s) {
        std::size_t i = rng.next_below(F.size());
        std::size_t j = rng.next_below(F.size());
        if (i != j) pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    for (auto [i, j] : pairs) {
        auto gap = static_cast<double>(j - i);
        double d = static_cast<double>(marking_distance_corridor(F[i], F[j]));
        if (gap > K0 * d + K0) {
            rep.rejected = true;
            rep.rejection_witness = "quasi-geodesic bound fails at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")";
            return rep;
        }
    }
    // Deviation from the hierarchy path at sampled times.
    std::size_t stride = std::max<std::size_t>(1, F.size() / 24);
    for (std::size_t t = 0; t < F.size(); t += stride) {
        std::size_t idx = project_to_hierarchy(h, F[t]);
        std::int64_t dev = marking_distance_corridor(F[t], h.steps[idx]);
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    rep.pass = rep.max_deviation <= cc.D;
    return rep;
}

Slope random_slope(std::uint64_t seed, std::uint64_t counter, std::int64_t cap) {
    CounterRng rng(seed, counter);
    for (;;) {
        std::int64_t q = rng.next_range(0, cap);
        std::int64_t p = rng.next_range(-cap, cap);
        if (p == 0 && q == 0) continue;
        if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
        return Slope(p, q);
    }
}

Marking random_marking(std::uint64_t seed, std::uint64_t counter, std::int64_t cap) {
    CounterRng rng(seed, counter + (1ull << 40));
    Slope base = random_slope(seed, counter + (1ull << 41), cap);
    Slope t = neighbor_at_index(base, rng.next_range(-3, 3));
    return Marking(base, t);
}

CoarseConstants fit_constants(const FitSpec& spec) {
    if (spec.pairs <= 0 || spec.paths <= 0)
        throw DomainError("fit_constants requires a nonempty sample");
    CoarseConstants cc;
    std::string corpus = "seed " + std::to_string(spec.seed) + ", slope cap " +
                         std::to_string(spec.slope_cap);

    // Hyperbolicity: exhaustive four-point scan at height 8.
    std::int64_t two_delta = four_point_two_delta_up_to_height(8, true);
    cc.delta = static_cast<double>(two_delta) / 2.0;
    cc.provenance["delta"] = "fitted: exhaustive four-point scan, height <= 8";

    // Behrstock gap over random intersecting triples.
    std::int64_t b0 = 0;
    for (int i = 0; i < 4000; ++i) {
        Slope a = random_slope(spec.seed, 3 * i, 50);
        Slope b = random_slope(spec.seed, 3 * i + 1, 50);
        Slope x = random_slope(spec.seed, 3 * i + 2, 50);
        if (a == b || a == x || b == x) continue;
        auto [da, db] = behrstock_gap(a, b, x);
        b0 = std::max(b0, std::min(da, db));
    }
    cc.B0 = b0;
    cc.provenance["B0"] = "fitted: max of min gap over 4000 triples, height <= 50, " + corpus;

    // Frame error: cf entries against measured annular coefficients.
    std::int64_t ferr = 0;
    for (int i = 0; i < 2000; ++i) {
        Slope x = random_slope(spec.seed + 1, 2 * i, 30);
        Slope y = random_slope(spec.seed + 1, 2 * i + 1, 30);
        if (x == y) continue;
        auto bc = bounded_combinatorics(x, y, 1);
        for (const auto& coeff : bc.coefficients) {
            if (!coeff.annulus_slope) continue;
            const Slope& g = *coeff.annulus_slope;
            if (g == x || g == y) continue;
            std::int64_t measured = annular_distance(g, x, y);
            std::int64_t c = coeff.value.fits_slong_p() ? coeff.value.get_si() : 0;
            ferr = std::max(ferr, measured > c ? measured - c : c - measured);
        }
    }
    cc.frame_error = ferr;
    cc.provenance["frame_error"] = "fitted: 2000 rational pairs, height <= 30, " + corpus;

    // Hierarchy constants over calibration paths.
    std::int64_t m1 = 0, m2 = 0;
    double kh = 1.0;
    CounterRng rng(spec.seed + 2);
    for (int i = 0; i < spec.paths; ++i) {
        Marking a = random_marking(spec.seed + 2, 100 + 4 * i, spec.slope_cap);
        Marking b = random_marking(spec.seed + 2, 102 + 4 * i, spec.slope_cap);
        HierarchyPath h = build_hierarchy_path(a, b);
        for (const Slope& g : h.main_geodesic) {
            std::int64_t dg = marking_annular_distance(g, a, b);
            bool in_domain = false;
            for (const auto& d : h.domains) in_domain = in_domain || d.core == g;
            if (!in_domain) m1 = std::max(m1, dg);
        }
        for (const auto& d : h.domains) {
            for (std::size_t t = 0; t < h.steps.size(); ++t) {
                if (t >= d.begin && t <= d.end) continue;
                std::size_t anchor = t < d.begin ? d.begin : d.end;
                m2 = std::max(m2, marking_annular_distance(d.core, h.steps[t],
                                                           h.steps[anchor]));
            }
        }
        if (h.steps.size() > 1 && i % 4 == 0) {
            std::int64_t d =
                marking_distance_corridor(h.steps.front(), h.steps.back());
            if (d > 0)
                kh = std::max(kh, static_cast<double>(h.length()) /
                                      static_cast<double>(d));
            // Interior pairs see worse ratios than the endpoints alone.
            for (int s = 0; s < 4 && h.steps.size() > 2; ++s) {
                std::size_t j1 = rng.next_below(h.steps.size());
                std::size_t j2 = rng.next_below(h.steps.size());
                if (j1 == j2) continue;
                if (j1 > j2) std::swap(j1, j2);
                std::int64_t dp =
                    marking_distance_corridor(h.steps[j1], h.steps[j2]);
                if (dp > 0)
                    kh = std::max(kh, static_cast<double>(j2 - j1) /
                                          static_cast<double>(dp));
            }
        }
    }
    cc.hier.M1 = m1;
    cc.hier.M2 = m2 + 1;
    cc.hier.K_H = 1.25 * kh + 0.25;
    cc.hier.M3 = std::max<std::int64_t>(m1, 3);
    std::string path_prov = std::to_string(spec.paths) + " calibration paths, " + corpus;
    cc.provenance["M1"] = "fitted: max coefficient outside domains, " + path_prov;
    cc.provenance["M2"] = "fitted: max outside-interval movement + 1, " + path_prov;
    cc.provenance["K_H"] = "fitted: 1.25 x max step/distance ratio + 0.25, " + path_prov;
    cc.provenance["M3"] = "max(M1, 3)";

    // Distance-formula comparison constants.
    cc.hier.c1 = 2.0;
    cc.provenance["c1"] = "assumed: multiplicative error 2.0";
    double c2 = 0.0;
    for (int i = 0; i < spec.pairs; ++i) {
        Marking a = random_marking(spec.seed + 3, 4 * i, spec.slope_cap);
        Marking b = random_marking(spec.seed + 3, 4 * i + 2, spec.slope_cap);
        auto x = static_cast<double>(distance_formula(a, b, cc.hier.M3).total);
        auto y = static_cast<double>(marking_distance_corridor(a, b));
        c2 = std::max({c2, x / cc.hier.c1 - y, y - cc.hier.c1 * x});
    }
    cc.hier.c2 = c2 + 2.0;
    cc.provenance["c2"] = "fitted: max residual + 2 over " +
                          std::to_string(spec.pairs) + " pairs, " + corpus;

    // Contraction and stability on bounded-combinatorics paths.
    cc.R0 = 4;
    cc.C = 2.0;
    cc.provenance["R0"] = "assumed: contraction onset radius";
    cc.provenance["C"] = "assumed: contraction ratio";
    std::int64_t n_fit = 1, d_fit = 0;
    CoarseConstants probe = cc;
    probe.N = std::numeric_limits<std::int64_t>::max();
    probe.D = std::numeric_limits<std::int64_t>::max();
    for (int i = 0; i < spec.contraction_samples; ++i) {
        Marking a = random_marking(spec.seed + 4, 4 * i, spec.slope_cap);
        Marking b = random_marking(spec.seed + 4, 4 * i + 2, spec.slope_cap);
        HierarchyPath h = build_hierarchy_path(a, b);
        auto rep = contraction_experiment(h, 3, spec.seed + 5 + i, probe,
                                          spec.bounded_K, spec.bfs_budget);
        if (rep.refused) continue;
        n_fit = std::max(n_fit, rep.max_diameter);
    }
    for (int i = 0; i < spec.stability_samples; ++i) {
        Marking a = random_marking(spec.seed + 6, 4 * i, spec.slope_cap);
        Marking b = random_marking(spec.seed + 6, 4 * i + 2, spec.slope_cap);
        HierarchyPath h = build_hierarchy_path(a, b);
        auto F = make_detour_perturbation(h, spec.seed + 7 + i, 3);
        auto rep = stability_experiment(h, F, 3.0, spec.seed + 8 + i, probe,
                                        spec.bfs_budget);
        if (rep.rejected) continue;
        d_fit = std::max(d_fit, rep.max_deviation);
    }
    cc.N = 2 * n_fit + 2;
    cc.D = (3 * d_fit) / 2 + 2;
    cc.provenance["N"] = "fitted: 2 x max projection diameter + 2, " +
                         std::to_string(spec.contraction_samples) +
                         " calibration paths, " + corpus;
    cc.provenance["D"] = "fitted: 1.5 x max deviation + 2, " +
                         std::to_string(spec.stability_samples) +
                         " calibration paths, " + corpus;
    return cc;
}

}  // namespace torcc
