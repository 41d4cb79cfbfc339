#include "torcc/thurston.hpp"

#include <cmath>

#include "torcc/errors.hpp"

namespace torcc {

void TwistWord::push(Generator g, std::int64_t e) {
    if (e == 0) throw DomainError("zero exponent in twist word");
    if (!letters.empty() && letters.back().gen == g)
        throw DomainError("twist word not reduced");
    letters.push_back({g, e});
}

TwistTuple::TwistTuple(std::vector<std::int64_t> q_, std::int64_t B)
    : q(std::move(q_)), bound(B) {
    if (q.empty()) throw DomainError("empty twist tuple");
    if (B < 1) throw DomainError("tuple bound must be positive");
    for (std::int64_t v : q)
        if (v < 1 || v > B) throw DomainError("tuple entry outside [1, B]");
}

namespace {

Mat2 gen_matrix(Generator g, std::int64_t e, std::int64_t k) {
    mpz_class ke = mpz_class(static_cast<long>(k)) * static_cast<long>(e);
    if (g == Generator::Alpha) return Mat2(1, ke, 0, 1);
    return Mat2(1, 0, -ke, 1);
}

}  // namespace

Mat2 rho(const TwistWord& word, std::int64_t k) {
    Mat2 m;
    for (const auto& l : word.letters) m = m * gen_matrix(l.gen, l.exponent, k);
    return m;
}

Mat2 psi(const TwistTuple& t, std::int64_t k) {
    TwistWord w;
    for (std::int64_t qi : t.q) {
        w.push(Generator::Alpha, qi);
        w.push(Generator::Beta, -qi);
    }
    return rho(w, k);
}

IsometryType classify(const Mat2& m) {
    if (m.det() != 1) throw DomainError("classify requires det 1");
    mpz_class t = abs(m.trace());
    if (t < 2) return IsometryType::Elliptic;
    if (t == 2) return IsometryType::Parabolic;
    return IsometryType::Hyperbolic;
}

double translation_length(const Mat2& m) {
    if (classify(m) != IsometryType::Hyperbolic)
        throw DomainError("translation length defined for hyperbolic elements only");
    mpf_class t(abs(m.trace()), 256);
    double half = t.get_d() / 2.0;
    return 2.0 * std::acosh(half);
}

std::pair<QuadraticIrrational, QuadraticIrrational> fixed_points(const Mat2& m) {
    if (classify(m) != IsometryType::Hyperbolic)
        throw DomainError("fixed points defined for hyperbolic elements only");
    // Roots of c x^2 + (d - a) x - b = 0; discriminant = trace^2 - 4.
    // The attracting root makes |c x + d| = |(tr + s)/2| > 1, so it carries
    // the radical sign of the trace.
    if (m.c == 0) throw DomainError("integer hyperbolic matrix cannot have c = 0");
    mpz_class disc = m.trace() * m.trace() - 4;
    mpz_class pa = m.a - m.d, qa = 2 * m.c;
    if (m.trace() < 0) {
        pa = -pa;
        qa = -qa;
    }
    QuadraticIrrational attracting(pa, qa, disc);
    QuadraticIrrational repelling(-pa, -qa, disc);
    return {attracting, repelling};
}

CfBoundCertificate cf_bound_certificate(const TwistTuple& t, std::int64_t k) {
    if (k < 2) throw DomainError("cf bound certificate requires k >= 2");
    CfBoundCertificate cert;
    cert.bound = mpz_class(static_cast<long>(k)) * static_cast<long>(t.bound);
    auto [attracting, repelling] = fixed_points(psi(t, k));
    cert.cf = attracting.continued_fraction();
    cert.max_entry = 0;
    for (const auto& e : cert.cf.period)
        if (e > cert.max_entry) cert.max_entry = e;
    for (std::size_t i = 0; i < cert.cf.entries.size(); ++i) {
        mpz_class v = i == 0 ? abs(cert.cf.entries[0]) : cert.cf.entries[i];
        if (v > cert.max_entry) cert.max_entry = v;
    }
    cert.ok = cert.max_entry <= cert.bound;
    return cert;
}

namespace {

// DFS over reduced words extending `m`; returns true if some completion of
// length <= remaining hits +-identity.
bool word_dfs(const Mat2& m, Generator last, int remaining, std::int64_t k,
              int max_exp) {
    if (remaining == 0) return false;
    for (int g = 0; g < 2; ++g) {
        auto gen = static_cast<Generator>(g);
        if (gen == last) continue;
        for (int e = -max_exp; e <= max_exp; ++e) {
            if (e == 0) continue;
            Mat2 next = m * gen_matrix(gen, e, k);
            if (next.is_plus_minus_identity()) return true;
            if (word_dfs(next, gen, remaining - 1, k, max_exp)) return true;
        }
    }
    return false;
}

}  // namespace

bool free_group_check(std::int64_t k, int maxlen, int max_exp, bool parallel) {
    if (k < 1) throw DomainError("free_group_check requires k >= 1");
    bool trivial_found = false;
    if (parallel) {
        // Split on the first letter; each branch is independent.
        std::vector<std::pair<int, int>> firsts;
        for (int g = 0; g < 2; ++g)
            for (int e = -max_exp; e <= max_exp; ++e)
                if (e != 0) firsts.emplace_back(g, e);
#pragma omp parallel for schedule(dynamic) reduction(|| : trivial_found)
        for (std::size_t i = 0; i < firsts.size(); ++i) {
            auto gen = static_cast<Generator>(firsts[i].first);
            Mat2 m = gen_matrix(gen, firsts[i].second, k);
            trivial_found = trivial_found || m.is_plus_minus_identity() ||
                            word_dfs(m, gen, maxlen - 1, k, max_exp);
        }
    } else {
        Mat2 id;
        trivial_found = word_dfs(id, static_cast<Generator>(2), maxlen, k, max_exp);
    }
    return !trivial_found;
}

namespace {

// Every node visited corresponds to a nonempty tuple prefix.
void trace_sweep_dfs(const Mat2& prefix, int blocks_left, std::int64_t q_max,
                     std::int64_t k, mpz_class& best) {
    if (blocks_left == 0) return;
    for (std::int64_t q = 1; q <= q_max; ++q) {
        Mat2 next = prefix * gen_matrix(Generator::Alpha, q, k) *
                    gen_matrix(Generator::Beta, -q, k);
        if (next.trace() < best) best = next.trace();
        trace_sweep_dfs(next, blocks_left - 1, q_max, k, best);
    }
}

}  // namespace

mpz_class min_psi_trace_sweep(std::int64_t k, int n_max, std::int64_t q_max,
                              bool parallel) {
    // Minimum of trace(psi) over nonempty tuples.
    mpz_class best;
    bool have = false;
    auto consider = [&](const mpz_class& t) {
        if (!have || t < best) {
            best = t;
            have = true;
        }
    };
    if (parallel) {
        std::vector<mpz_class> per_q1(static_cast<std::size_t>(q_max));
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t q1 = 1; q1 <= q_max; ++q1) {
            Mat2 block = gen_matrix(Generator::Alpha, q1, k) *
                         gen_matrix(Generator::Beta, -q1, k);
            mpz_class local = block.trace();
            trace_sweep_dfs(block, n_max - 1, q_max, k, local);
            per_q1[static_cast<std::size_t>(q1 - 1)] = local;
        }
        for (const auto& t : per_q1) consider(t);
    } else {
        for (std::int64_t q1 = 1; q1 <= q_max; ++q1) {
            Mat2 block = gen_matrix(Generator::Alpha, q1, k) *
                         gen_matrix(Generator::Beta, -q1, k);
            mpz_class local = block.trace();
            trace_sweep_dfs(block, n_max - 1, q_max, k, local);
            consider(local);
        }
    }
    return best;
}

}  // namespace torcc
