#include "torcc/slope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace torcc {

Slope::Slope(std::int64_t num, std::int64_t den) {
    if (num == 0 && den == 0) throw DomainError("slope 0/0");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (den == 0) num = 1;  // canonical infinity
    p = num;
    q = den;
}

std::int64_t Slope::height() const {
    std::int64_t ap = p < 0 ? -p : p;
    return std::max(ap, q);
}

std::string Slope::str() const {
    if (is_infinity()) return "inf";
    return std::to_string(p) + "/" + std::to_string(q);
}

Slope Slope::parse(const std::string& s) {
    if (s == "inf" || s == "1/0" || s == "-1/0") return infinity();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Slope(std::stoll(s), 1);
        std::int64_t num = std::stoll(s.substr(0, slash));
        std::int64_t den = std::stoll(s.substr(slash + 1));
        return Slope(num, den);
    } catch (const std::logic_error&) {
        throw DomainError("cannot parse slope: " + s);
    }
}

std::int64_t intersection_number(const Slope& x, const Slope& y) {
    __int128 v = static_cast<__int128>(x.p) * y.q - static_cast<__int128>(y.p) * x.q;
    if (v < 0) v = -v;
    return static_cast<std::int64_t>(v);
}

bool adjacent(const Slope& x, const Slope& y) {
    return intersection_number(x, y) == 1;
}

namespace {

// Extended gcd: returns (g, u, v) with a*u + b*v = g.
void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (b == 0) {
        u = a >= 0 ? 1 : -1;
        v = 0;
        return;
    }
    std::int64_t u1;
    std::int64_t v1;
    ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
}

}  // namespace

std::vector<Slope> neighbors_up_to_height(const Slope& x, std::int64_t cap) {
    // Solutions of p*s - r*q = 1 are (r, s) = (r0 + t p, s0 + t q), t in Z,
    // and every Farey neighbor of x appears in this family after
    // canonicalization.
    std::int64_t u = 0;
    std::int64_t v = 0;
    ext_gcd(x.p, x.q, u, v);  // p*u + q*v = 1
    std::int64_t s0 = u;
    std::int64_t r0 = -v;

    std::vector<Slope> out;
    // t-range keeping both coordinates within the cap.
    // Solve |r0 + t p| <= cap and |s0 + t q| <= cap over integers t.
    auto range_for = [cap](std::int64_t base, std::int64_t step, std::int64_t& lo,
                           std::int64_t& hi) {
        if (step == 0) {
            bool ok = base <= cap && base >= -cap;
            lo = ok ? INT64_MIN / 4 : 1;
            hi = ok ? INT64_MAX / 4 : 0;
            return;
        }
        double a = (-cap - (double)base) / (double)step;
        double b = (cap - (double)base) / (double)step;
        if (a > b) std::swap(a, b);
        lo = (std::int64_t)std::ceil(a) - 1;
        hi = (std::int64_t)std::floor(b) + 1;
    };
    std::int64_t lo1, hi1, lo2, hi2;
    range_for(r0, x.p, lo1, hi1);
    range_for(s0, x.q, lo2, hi2);
    std::int64_t lo = std::max(lo1, lo2);
    std::int64_t hi = std::min(hi1, hi2);
    for (std::int64_t t = lo; t <= hi; ++t) {
        std::int64_t r = r0 + t * x.p;
        std::int64_t s = s0 + t * x.q;
        if ((r < 0 ? -r : r) > cap || (s < 0 ? -s : s) > cap) continue;
        if (r == 0 && s == 0) continue;
        out.emplace_back(r, s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Slope> slopes_up_to_height(std::int64_t cap) {
    std::vector<Slope> out;
    out.push_back(Slope::infinity());
    for (std::int64_t q = 1; q <= cap; ++q) {
        for (std::int64_t p = -cap; p <= cap; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            out.emplace_back(p, q);
        }
    }
    return out;
}

}  // namespace torcc
