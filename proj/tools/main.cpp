// torcc: slopes, projections, pseudo-Anosov families, hierarchy paths, the
// distance formula, and orbit counting on the once-punctured torus.
//
// Output is line-delimited records with a stable key order; every experiment
// record embeds the hash of the configuration that produced it. Exit codes:
// 0 success, 1 property violation, 2 budget exhausted, 3 usage error.

#include <CLI11.hpp>

#include <torcc/annular.hpp>
#include <torcc/contfrac.hpp>
#include <torcc/errors.hpp>
#include <torcc/farey.hpp>
#include <torcc/hierarchy.hpp>
#include <torcc/marking.hpp>
#include <torcc/mm.hpp>
#include <torcc/orbits.hpp>
#include <torcc/slope.hpp>
#include <torcc/thurston.hpp>

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace torcc;

constexpr int kExitViolation = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

struct Config {
    std::uint64_t seed = 1;
    std::size_t budget_bfs = 4000000;
    std::uint64_t budget_tuples = 1u << 24;
    std::string constants_file;
    bool csv = false;

    std::string constants_path() const {
        if (!constants_file.empty()) return constants_file;
        if (const char* env = std::getenv("TORCC_CONSTANTS")) return env;
        return "";
    }

    CoarseConstants constants() const {
        std::string path = constants_path();
        return path.empty() ? CoarseConstants{} : CoarseConstants::load(path);
    }

    // FNV-1a over the canonical configuration string.
    std::string hash() const {
        std::ostringstream s;
        s << "seed=" << seed << ";bfs=" << budget_bfs
          << ";tuples=" << budget_tuples << ";constants=" << constants_path()
          << ";csv=" << csv;
        std::uint64_t h = 1469598103934665603ull;
        for (char c : s.str()) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        std::ostringstream out;
        out << std::hex << std::setw(16) << std::setfill('0') << h;
        return out.str();
    }
};

void add_config_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--seed", cfg.seed, "Experiment seed");
    cmd->add_option("--budget-bfs", cfg.budget_bfs, "Max BFS states");
    cmd->add_option("--budget-tuples", cfg.budget_tuples,
                    "Max enumerated tuples");
    cmd->add_option("--constants", cfg.constants_file,
                    "Constants file (default: $TORCC_CONSTANTS)");
}

std::string fmt(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

std::vector<std::int64_t> parse_tuple(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoll(item));
    return out;
}

std::string boundary_str(const BoundaryPoint& p) {
    if (const Slope* s = std::get_if<Slope>(&p)) return s->str();
    return "cf:" + std::get<QuadraticIrrational>(p).continued_fraction().str();
}

// Twist coordinate of a boundary point around gamma: floor of its image under
// the frame of gamma. Exact for both rational and irrational points.
mpz_class boundary_twist(const Slope& gamma, const BoundaryPoint& x) {
    if (const Slope* s = std::get_if<Slope>(&x))
        return twist_coordinate(gamma, *s);
    Mat2 f = annulus_frame(gamma);
    return std::get<QuadraticIrrational>(x).moebius(f).floor();
}

int cmd_farey_dist(const std::string& xs, const std::string& ys,
                   const Config& cfg) {
    Slope x = Slope::parse(xs), y = Slope::parse(ys);
    std::cout << "dist x=" << x.str() << " y=" << y.str()
              << " d=" << farey_distance(x, y) << " config=" << cfg.hash()
              << "\n";
    return 0;
}

int cmd_farey_geodesic(const std::string& xs, const std::string& ys,
                       const Config& cfg) {
    Slope x = Slope::parse(xs), y = Slope::parse(ys);
    auto path = farey_geodesic(x, y);
    std::cout << "geodesic x=" << x.str() << " y=" << y.str() << " path=";
    for (std::size_t i = 0; i < path.size(); ++i)
        std::cout << (i ? "," : "") << path[i].str();
    std::cout << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_farey_delta(std::int64_t height, bool parallel, const Config& cfg) {
    std::int64_t two_delta = four_point_two_delta_up_to_height(height, parallel);
    std::cout << "height=" << height << " two_delta=" << two_delta
              << " delta=" << fmt(static_cast<double>(two_delta) / 2.0)
              << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_proj_dw(const std::string& gs, const std::string& xs,
                const std::string& ys, const Config& cfg) {
    Slope gamma = Slope::parse(gs);
    BoundaryPoint x = parse_boundary_point(xs);
    BoundaryPoint y = parse_boundary_point(ys);
    mpz_class tx = boundary_twist(gamma, x);
    mpz_class ty = boundary_twist(gamma, y);
    mpz_class d = abs(tx - ty) + 1;
    std::cout << "dw gamma=" << gamma.str() << " x=" << xs << " y=" << ys
              << " tx=" << tx << " ty=" << ty << " d=" << d
              << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_proj_bounded(const std::string& xs, const std::string& ys,
                     std::int64_t K, const Config& cfg) {
    auto bc = bounded_combinatorics(parse_boundary_point(xs),
                                    parse_boundary_point(ys), K);
    for (const auto& c : bc.coefficients)
        std::cout << "coefficient annulus=" << c.annulus << " value=" << c.value
                  << "\n";
    std::cout << "bounded x=" << xs << " y=" << ys << " K=" << K
              << " ok=" << bc.ok << " max=" << bc.max_coefficient
              << " witness=" << bc.witness.annulus << " config=" << cfg.hash()
              << "\n";
    return bc.ok ? 0 : kExitViolation;
}

int cmd_pa_build(std::int64_t k, const std::string& tuple_s, const Config& cfg) {
    std::vector<std::int64_t> q = parse_tuple(tuple_s);
    std::int64_t B = 1;
    for (std::int64_t v : q) B = std::max(B, v);
    TwistTuple t(q, B);
    Mat2 m = psi(t, k);
    mpz_class tr = m.a + m.d;
    auto cert = cf_bound_certificate(t, k);
    auto [att, rep] = fixed_points(m);
    std::cout << "tuple=" << tuple_s << " k=" << k << " matrix=[[" << m.a << ","
              << m.b << "],[" << m.c << "," << m.d << "]] trace=" << tr
              << " type=hyperbolic length=" << fmt(translation_length(m))
              << " fixed_att=" << att.str() << " fixed_rep=" << rep.str()
              << " cf=" << cert.cf.str() << " cf_max=" << cert.max_entry
              << " cf_bound=" << cert.bound << " cf_ok=" << cert.ok
              << " config=" << cfg.hash() << "\n";
    return cert.ok ? 0 : kExitViolation;
}

int cmd_hier_build(const std::string& m1s, const std::string& m2s,
                   const Config& cfg) {
    auto h = build_hierarchy_path(Marking::parse(m1s), Marking::parse(m2s));
    for (std::size_t i = 0; i < h.steps.size(); ++i)
        std::cout << "step index=" << i << " marking=" << h.steps[i].str()
                  << "\n";
    for (const auto& d : h.domains)
        std::cout << "domain core=" << d.core.str() << " begin=" << d.begin
                  << " end=" << d.end << " twists=" << d.twists << "\n";
    std::cout << "path length=" << h.length()
              << " geodesic=" << h.main_geodesic.size() - 1
              << " domains=" << h.domains.size() << " config=" << cfg.hash()
              << "\n";
    return 0;
}

int cmd_hier_check(const std::string& m1s, const std::string& m2s,
                   const Config& cfg) {
    auto h = build_hierarchy_path(Marking::parse(m1s), Marking::parse(m2s));
    auto rep = check_hierarchy_axioms(h, cfg.constants().hier, cfg.seed, 2,
                                      cfg.budget_bfs);
    std::cout << rep.summary() << " config=" << cfg.hash() << "\n";
    return rep.all_pass() ? 0 : kExitViolation;
}

int cmd_mm_df(const std::string& m1s, const std::string& m2s, const Config& cfg) {
    auto sum = distance_formula(Marking::parse(m1s), Marking::parse(m2s),
                                cfg.constants().hier.M3);
    for (const auto& t : sum.terms)
        std::cout << "term domain=" << t.domain << " raw=" << t.raw
                  << " cut=" << t.cut << "\n";
    std::cout << "sum threshold=" << sum.threshold << " total=" << sum.total
              << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_mm_dist(const std::string& m1s, const std::string& m2s,
                const Config& cfg) {
    Marking m1 = Marking::parse(m1s), m2 = Marking::parse(m2s);
    std::cout << "dist m1=" << m1.str() << " m2=" << m2.str()
              << " d=" << marking_distance_corridor(m1, m2)
              << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_mm_contract(const std::string& m1s, const std::string& m2s, int samples,
                    std::int64_t K, const Config& cfg) {
    auto h = build_hierarchy_path(Marking::parse(m1s), Marking::parse(m2s));
    auto rep = contraction_experiment(h, samples, cfg.seed, cfg.constants(), K,
                                      cfg.budget_bfs);
    std::cout << "contraction refused=" << rep.refused << " witness=\""
              << rep.refusal_witness << "\" attempted=" << rep.attempted
              << " measured=" << rep.measured
              << " max_diameter=" << rep.max_diameter << " pass=" << rep.pass
              << " config=" << cfg.hash() << "\n";
    if (rep.refused) return 0;
    return rep.pass ? 0 : kExitViolation;
}

int cmd_mm_stability(const std::string& m1s, const std::string& m2s,
                     int detours, double K0, const Config& cfg) {
    auto h = build_hierarchy_path(Marking::parse(m1s), Marking::parse(m2s));
    auto F = make_detour_perturbation(h, cfg.seed, detours);
    auto rep =
        stability_experiment(h, F, K0, cfg.seed, cfg.constants(), cfg.budget_bfs);
    std::cout << "stability rejected=" << rep.rejected << " witness=\""
              << rep.rejection_witness
              << "\" max_deviation=" << rep.max_deviation
              << " pass=" << rep.pass << " config=" << cfg.hash() << "\n";
    if (rep.rejected) return 0;
    return rep.pass ? 0 : kExitViolation;
}

int cmd_orbits_count(std::int64_t n, std::int64_t B, std::int64_t k, double C,
                     const Config& cfg) {
    (void)k;  // the count is independent of the intersection number
    auto g = growth_rate(B, n, C);
    std::cout << "growth B=" << B << " n_max=" << n << " C=" << fmt(C)
              << " classes=" << g.counts.back() << " p_hat=" << fmt(g.p_hat)
              << " closed_form_bound=" << fmt(g.closed_form_bound)
              << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_orbits_spectrum(std::int64_t n, std::int64_t B, std::int64_t k,
                        const Config& cfg) {
    auto spec = length_spectrum(n, B, k, cfg.budget_tuples);
    if (cfg.csv) {
        std::cout << "n,representative,multiplicity,length\n";
        for (const auto& e : spec) {
            std::cout << e.cls.representative.size() << ",\"";
            for (std::size_t i = 0; i < e.cls.representative.size(); ++i)
                std::cout << (i ? "," : "") << e.cls.representative[i];
            std::cout << "\"," << e.cls.multiplicity << "," << fmt(e.length)
                      << "\n";
        }
        return 0;
    }
    for (const auto& e : spec) {
        std::cout << "class representative=";
        for (std::size_t i = 0; i < e.cls.representative.size(); ++i)
            std::cout << (i ? "," : "") << e.cls.representative[i];
        std::cout << " multiplicity=" << e.cls.multiplicity
                  << " length=" << fmt(e.length) << "\n";
    }
    std::cout << "spectrum n=" << n << " B=" << B << " k=" << k
              << " classes=" << spec.size() << " config=" << cfg.hash() << "\n";
    return 0;
}

int cmd_fit(const std::string& out, const FitSpec& fs, const Config& cfg) {
    CoarseConstants cc = fit_constants(fs);
    cc.save(out);
    std::cout << "fit out=" << out << " delta=" << fmt(cc.delta)
              << " N=" << cc.N << " R0=" << cc.R0 << " C=" << fmt(cc.C)
              << " D=" << cc.D << " B0=" << cc.B0
              << " frame_error=" << cc.frame_error << " M1=" << cc.hier.M1
              << " M2=" << cc.hier.M2 << " M3=" << cc.hier.M3
              << " c1=" << fmt(cc.hier.c1) << " c2=" << fmt(cc.hier.c2)
              << " K_H=" << fmt(cc.hier.K_H) << " config=" << cfg.hash()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curve-complex machinery for the once-punctured torus"};
    app.require_subcommand(1);
    Config cfg;

    // farey
    auto* farey = app.add_subcommand("farey", "Farey graph distances");
    farey->require_subcommand(1);
    std::string fx, fy;
    auto* fdist = farey->add_subcommand("dist", "Graph distance between slopes");
    fdist->add_option("x", fx, "First slope")->required();
    fdist->add_option("y", fy, "Second slope")->required();
    auto* fgeo = farey->add_subcommand("geodesic", "One geodesic between slopes");
    fgeo->add_option("x", fx, "First slope")->required();
    fgeo->add_option("y", fy, "Second slope")->required();
    std::int64_t fheight = 8;
    bool fparallel = false;
    auto* fdelta = farey->add_subcommand("delta", "Four-point hyperbolicity scan");
    fdelta->add_option("--height", fheight, "Max slope height");
    fdelta->add_flag("--parallel", fparallel, "Use the parallel kernel");
    add_config_flags(fdelta, cfg);

    // proj
    auto* proj = app.add_subcommand("proj", "Annular projections");
    proj->require_subcommand(1);
    std::string pg, px, py;
    std::int64_t pK = 10;
    auto* pdw = proj->add_subcommand("dw", "Projection distance d_gamma(x, y)");
    pdw->add_option("--gamma", pg, "Annulus core slope")->required();
    pdw->add_option("--x", px, "Boundary point (slope or cf:[...])")->required();
    pdw->add_option("--y", py, "Boundary point (slope or cf:[...])")->required();
    auto* pbd = proj->add_subcommand("bounded", "Bounded-combinatorics check");
    pbd->add_option("--x", px, "Boundary point")->required();
    pbd->add_option("--y", py, "Boundary point")->required();
    pbd->add_option("--K", pK, "Coefficient bound")->required();
    add_config_flags(pbd, cfg);

    // pa
    auto* pa = app.add_subcommand("pa", "Pseudo-Anosov twist families");
    pa->require_subcommand(1);
    std::int64_t pak = 2;
    std::string patuple;
    auto* pabuild = pa->add_subcommand("build", "Build psi and its certificate");
    pabuild->add_option("--k", pak, "Intersection number")->required();
    pabuild->add_option("--tuple", patuple, "Comma-separated q_i")->required();
    add_config_flags(pabuild, cfg);

    // hier
    auto* hier = app.add_subcommand("hier", "Hierarchy paths");
    hier->require_subcommand(1);
    std::string hm1, hm2;
    auto* hbuild = hier->add_subcommand("build", "Build a hierarchy path");
    hbuild->add_option("m1", hm1, "Start marking p/q|r/s")->required();
    hbuild->add_option("m2", hm2, "End marking p/q|r/s")->required();
    auto* hcheck = hier->add_subcommand("check", "Check the hierarchy axioms");
    hcheck->add_option("m1", hm1, "Start marking")->required();
    hcheck->add_option("m2", hm2, "End marking")->required();
    add_config_flags(hcheck, cfg);

    // mm
    auto* mm = app.add_subcommand("mm", "Distance formula and experiments");
    mm->require_subcommand(1);
    std::string mm1, mm2;
    int msamples = 10, mdetours = 3;
    std::int64_t mK = 30;
    double mK0 = 3.0;
    auto* mdf = mm->add_subcommand("df", "Threshold distance formula");
    mdf->add_option("m1", mm1, "First marking")->required();
    mdf->add_option("m2", mm2, "Second marking")->required();
    add_config_flags(mdf, cfg);
    auto* mdist = mm->add_subcommand("dist", "Exact marking-graph distance");
    mdist->add_option("m1", mm1, "First marking")->required();
    mdist->add_option("m2", mm2, "Second marking")->required();
    add_config_flags(mdist, cfg);
    auto* mcon = mm->add_subcommand("contract", "Contraction experiment");
    mcon->add_option("m1", mm1, "First marking")->required();
    mcon->add_option("m2", mm2, "Second marking")->required();
    mcon->add_option("--samples", msamples, "Samples off the path");
    mcon->add_option("--K", mK, "Bounded-combinatorics precondition");
    add_config_flags(mcon, cfg);
    auto* mstab = mm->add_subcommand("stability", "Stability experiment");
    mstab->add_option("m1", mm1, "First marking")->required();
    mstab->add_option("m2", mm2, "Second marking")->required();
    mstab->add_option("--detours", mdetours, "Detours to insert");
    mstab->add_option("--K0", mK0, "Quasi-geodesic constant");
    add_config_flags(mstab, cfg);

    // orbits
    auto* orbits = app.add_subcommand("orbits", "Closed-orbit counting");
    orbits->require_subcommand(1);
    std::int64_t on = 6, oB = 4, ok = 2;
    double oC = 1.0;
    auto* ocount = orbits->add_subcommand("count", "Growth-rate estimate");
    ocount->add_option("--n", on, "Max tuple size")->required();
    ocount->add_option("--B", oB, "Entry bound")->required();
    ocount->add_option("--k", ok, "Intersection number");
    ocount->add_option("--C", oC, "Length normalization");
    add_config_flags(ocount, cfg);
    auto* ospec = orbits->add_subcommand("spectrum", "Per-class length spectrum");
    ospec->add_option("--n", on, "Max tuple size")->required();
    ospec->add_option("--B", oB, "Entry bound")->required();
    ospec->add_option("--k", ok, "Intersection number");
    ospec->add_flag("--csv", cfg.csv, "Emit CSV instead of records");
    add_config_flags(ospec, cfg);

    // fit
    FitSpec fspec;
    std::string fit_out = "constants.txt";
    auto* fit = app.add_subcommand("fit", "Fit and freeze coarse constants");
    fit->add_option("--out", fit_out, "Output constants file");
    fit->add_option("--pairs", fspec.pairs, "Calibration pairs");
    fit->add_option("--paths", fspec.paths, "Calibration paths");
    fit->add_option("--cap", fspec.slope_cap, "Corpus denominator cap");
    fit->add_option("--contraction-samples", fspec.contraction_samples,
                    "Contraction calibration paths");
    fit->add_option("--stability-samples", fspec.stability_samples,
                    "Stability calibration paths");
    add_config_flags(fit, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (fdist->parsed()) return cmd_farey_dist(fx, fy, cfg);
        if (fgeo->parsed()) return cmd_farey_geodesic(fx, fy, cfg);
        if (fdelta->parsed()) return cmd_farey_delta(fheight, fparallel, cfg);
        if (pdw->parsed()) return cmd_proj_dw(pg, px, py, cfg);
        if (pbd->parsed()) return cmd_proj_bounded(px, py, pK, cfg);
        if (pabuild->parsed()) return cmd_pa_build(pak, patuple, cfg);
        if (hbuild->parsed()) return cmd_hier_build(hm1, hm2, cfg);
        if (hcheck->parsed()) return cmd_hier_check(hm1, hm2, cfg);
        if (mdf->parsed()) return cmd_mm_df(mm1, mm2, cfg);
        if (mdist->parsed()) return cmd_mm_dist(mm1, mm2, cfg);
        if (mcon->parsed()) return cmd_mm_contract(mm1, mm2, msamples, mK, cfg);
        if (mstab->parsed())
            return cmd_mm_stability(mm1, mm2, mdetours, mK0, cfg);
        if (ocount->parsed()) return cmd_orbits_count(on, oB, ok, oC, cfg);
        if (ospec->parsed()) return cmd_orbits_spectrum(on, oB, ok, cfg);
        if (fit->parsed()) {
            fspec.seed = cfg.seed;
            fspec.bfs_budget = cfg.budget_bfs;
            return cmd_fit(fit_out, fspec, cfg);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UndefinedProjection& e) {
        std::cerr << "undefined projection: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
