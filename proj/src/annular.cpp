#include "torcc/annular.hpp"

#include <algorithm>

#include "torcc/errors.hpp"

namespace torcc {

namespace {

void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return;
    }
    std::int64_t u1, v1;
    ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
}

}  // namespace

Mat2 annulus_frame(const Slope& gamma) {
    if (gamma.is_infinity()) return Mat2::identity();
    std::int64_t u, v;
    ext_gcd(gamma.p, gamma.q, u, v);  // p*u + q*v = 1
    std::int64_t a = ((u % gamma.q) + gamma.q) % gamma.q;
    mpz_class am(static_cast<long>(a));
    mpz_class pm(static_cast<long>(gamma.p)), qm(static_cast<long>(gamma.q));
    mpz_class bm = (1 - am * pm) / qm;
    return Mat2(am, bm, -qm, pm);
}

std::int64_t twist_coordinate(const Slope& gamma, const Slope& x) {
    if (x == gamma)
        throw UndefinedProjection("projection of " + x.str() + " to its own annulus");
    Mat2 f = annulus_frame(gamma);
    mpz_class num = f.a * x.p + f.b * x.q;
    mpz_class den = f.c * x.p + f.d * x.q;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (!fl.fits_slong_p()) throw DomainError("twist coordinate overflow");
    return fl.get_si();
}

std::int64_t annular_distance(const Slope& gamma, const Slope& x, const Slope& y) {
    std::int64_t tx = twist_coordinate(gamma, x);
    std::int64_t ty = twist_coordinate(gamma, y);
    return (tx > ty ? tx - ty : ty - tx) + 1;
}

std::pair<std::int64_t, std::int64_t> behrstock_gap(const Slope& alpha,
                                                    const Slope& beta,
                                                    const Slope& x) {
    return {annular_distance(alpha, beta, x), annular_distance(beta, alpha, x)};
}

BoundaryPoint parse_boundary_point(const std::string& s) {
    if (s.rfind("cf:", 0) == 0) {
        ContinuedFraction cf = ContinuedFraction::parse(s.substr(3));
        if (cf.is_periodic()) return cf_evaluate_periodic(cf);
        return cf_evaluate(cf);
    }
    return Slope::parse(s);
}

namespace {

struct MpzFrac {
    mpz_class num, den;  // den may be zero (infinity)
};

MpzFrac apply_exact(const Mat2& m, const Slope& x) {
    return {m.a * x.p + m.b * x.q, m.c * x.p + m.d * x.q};
}

// Entries of the continued fraction of num/den (den != 0), mpz Euclid.
std::vector<mpz_class> cf_entries_mpz(mpz_class num, mpz_class den) {
    std::vector<mpz_class> out;
    while (den != 0) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.push_back(a);
        mpz_class r = num - a * den;
        num = den;
        den = r;
    }
    if (out.size() > 1 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return out;
}

// Coefficient list for cf entries seen in the frame F: entry i twists around
// the (i-1)-st convergent, with convergent(-1) = infinity; annuli are mapped
// back through F^{-1}.
std::vector<AnnularCoefficient> coefficients_from_entries(
    const std::vector<mpz_class>& entries, const Mat2& f_inv) {
    std::vector<AnnularCoefficient> out;
    mpz_class h1(1), h0(0), k1(0), k0(1);  // convergent(-1) = 1/0
    for (std::size_t i = 0; i < entries.size(); ++i) {
        AnnularCoefficient c;
        c.value = i == 0 ? abs(entries[0]) : entries[i];
        mpz_class ap = f_inv.a * h1 + f_inv.b * k1;
        mpz_class aq = f_inv.c * h1 + f_inv.d * k1;
        if (aq < 0 || (aq == 0 && ap < 0)) {
            ap = -ap;
            aq = -aq;
        }
        c.annulus = aq == 0 ? "inf" : ap.get_str() + "/" + aq.get_str();
        if (ap.fits_slong_p() && aq.fits_slong_p() && !(ap == 0 && aq == 0))
            c.annulus_slope = Slope(ap.get_si(), aq.get_si());
        out.push_back(std::move(c));
        mpz_class h = entries[i] * h1 + h0;
        mpz_class k = entries[i] * k1 + k0;
        h0 = h1;
        h1 = h;
        k0 = k1;
        k1 = k;
    }
    return out;
}

std::vector<AnnularCoefficient> coefficients_in_frame(const Mat2& f,
                                                      const BoundaryPoint& y) {
    Mat2 f_inv = f.inverse();
    if (std::holds_alternative<Slope>(y)) {
        MpzFrac z = apply_exact(f, std::get<Slope>(y));
        if (z.den == 0) return {};  // y maps to infinity: no twisting data
        return coefficients_from_entries(cf_entries_mpz(z.num, z.den), f_inv);
    }
    QuadraticIrrational z = std::get<QuadraticIrrational>(y).moebius(f);
    ContinuedFraction cf = z.continued_fraction();
    std::vector<mpz_class> entries = cf.entries;
    entries.insert(entries.end(), cf.period.begin(), cf.period.end());
    return coefficients_from_entries(entries, f_inv);
}

}  // namespace

BoundedCombinatorics bounded_combinatorics(const BoundaryPoint& x,
                                           const BoundaryPoint& y,
                                           std::int64_t K) {
    const Slope* xs = std::get_if<Slope>(&x);
    const Slope* ys = std::get_if<Slope>(&y);
    if (xs && ys && *xs == *ys)
        throw DomainError("bounded_combinatorics requires distinct endpoints");

    BoundedCombinatorics res;
    if (xs || ys) {
        // Rational anchor: write the other endpoint in the frame sending the
        // anchor to infinity and read the entries off.
        const Slope& anchor = xs ? *xs : *ys;
        const BoundaryPoint& other = xs ? y : x;
        res.coefficients = coefficients_in_frame(annulus_frame(anchor), other);
    } else {
        // Two boundary irrationals: identity frame, both expansions.
        res.coefficients = coefficients_in_frame(Mat2::identity(), x);
        auto more = coefficients_in_frame(Mat2::identity(), y);
        res.coefficients.insert(res.coefficients.end(), more.begin(), more.end());
    }
    res.max_coefficient = 0;
    for (const auto& c : res.coefficients) {
        if (c.value > res.max_coefficient) {
            res.max_coefficient = c.value;
            res.witness = c;
        }
    }
    res.ok = res.max_coefficient < K;
    return res;
}

}  // namespace torcc
