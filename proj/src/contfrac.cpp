#include "torcc/contfrac.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "torcc/errors.hpp"

namespace torcc {

namespace {

std::string join(const std::vector<mpz_class>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

std::vector<mpz_class> parse_int_list(const std::string& s, char sep) {
    std::vector<mpz_class> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (cur.empty()) throw DomainError("empty continued-fraction entry");
        out.emplace_back(cur, 10);
    }
    return out;
}

}  // namespace

std::string ContinuedFraction::str() const {
    std::string out = "[";
    if (!entries.empty()) {
        out += entries[0].get_str();
        if (entries.size() > 1) {
            out += ";";
            std::vector<mpz_class> rest(entries.begin() + 1, entries.end());
            out += join(rest, ",");
        } else if (!period.empty()) {
            out += ";";
        }
    }
    if (!period.empty()) out += "(" + join(period, ",") + ")";
    return out + "]";
}

ContinuedFraction ContinuedFraction::parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw DomainError("continued fraction must be bracketed: " + s);
    std::string body = s.substr(1, s.size() - 2);
    ContinuedFraction cf;
    auto open = body.find('(');
    if (open != std::string::npos) {
        auto close = body.find(')', open);
        if (close == std::string::npos) throw DomainError("unclosed period: " + s);
        cf.period = parse_int_list(body.substr(open + 1, close - open - 1), ',');
        body = body.substr(0, open);
        while (!body.empty() && (body.back() == ',' || body.back() == ';'))
            body.pop_back();
    }
    if (!body.empty()) {
        auto semi = body.find(';');
        if (semi == std::string::npos) {
            cf.entries = parse_int_list(body, ',');
        } else {
            cf.entries.emplace_back(body.substr(0, semi), 10);
            if (semi + 1 < body.size()) {
                auto rest = parse_int_list(body.substr(semi + 1), ',');
                cf.entries.insert(cf.entries.end(), rest.begin(), rest.end());
            }
        }
    }
    if (cf.entries.empty() && cf.period.empty())
        throw DomainError("empty continued fraction: " + s);
    return cf;
}

ContinuedFraction cf_expand(const Slope& x) {
    if (x.is_infinity()) throw DomainError("infinity has no continued fraction");
    ContinuedFraction cf;
    mpz_class p(static_cast<long>(x.p));
    mpz_class q(static_cast<long>(x.q));
    while (q != 0) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        cf.entries.push_back(a);
        mpz_class r = p - a * q;
        p = q;
        q = r;
    }
    // Uniqueness: fold a trailing 1 into the previous entry.
    if (cf.entries.size() > 1 && cf.entries.back() == 1) {
        cf.entries.pop_back();
        cf.entries.back() += 1;
    }
    return cf;
}

Slope cf_evaluate(const ContinuedFraction& cf) {
    if (cf.is_periodic())
        throw DomainError("periodic continued fraction is irrational");
    mpz_class h1(1), h0(0), k1(0), k0(1);  // convergents
    for (const auto& a : cf.entries) {
        mpz_class h = a * h1 + h0;
        mpz_class k = a * k1 + k0;
        h0 = h1;
        h1 = h;
        k0 = k1;
        k1 = k;
    }
    if (!h1.fits_slong_p() || !k1.fits_slong_p())
        throw DomainError("continued-fraction value exceeds slope range");
    return Slope(h1.get_si(), k1.get_si());
}

QuadraticIrrational::QuadraticIrrational(mpz_class P, mpz_class Q, mpz_class D)
    : p_(std::move(P)), q_(std::move(Q)), d_(std::move(D)) {
    if (q_ == 0) throw DomainError("quadratic irrational with zero denominator");
    if (d_ <= 0) throw DomainError("discriminant must be positive");
    if (mpz_perfect_square_p(d_.get_mpz_t()))
        throw DomainError("discriminant is a perfect square (rational value)");
    normalize();
}

void QuadraticIrrational::normalize() {
    // Enforce Q | D - P^2 by scaling the representation.
    if ((d_ - p_ * p_) % q_ != 0) {
        mpz_class aq = abs(q_);
        p_ *= aq;
        d_ *= aq * aq;
        q_ *= aq;
    }
    // Cosmetic reduction by small primes: (gP + sqrt(g^2 D'))/gQ -> (P+sqrt(D'))/Q.
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (long pr : primes) {
        mpz_class g(pr), g2(pr * pr);
        while (p_ % g == 0 && q_ % g == 0 && d_ % g2 == 0) {
            mpz_class np = p_ / g, nq = q_ / g, nd = d_ / g2;
            if ((nd - np * np) % nq != 0) break;
            p_ = np;
            q_ = nq;
            d_ = nd;
        }
    }
}

namespace {

// sign of (u + sqrt(D)), D > 0 non-square
int sign_plus_sqrt(const mpz_class& u, const mpz_class& d) {
    if (u >= 0) return 1;
    return d > u * u ? 1 : -1;
}

}  // namespace

mpz_class QuadraticIrrational::floor() const {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), d_.get_mpz_t());
    mpz_class a;
    if (q_ > 0) {
        mpz_class num = p_ + s;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), q_.get_mpz_t());
    } else {
        mpz_class num = p_ + s + 1;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), q_.get_mpz_t());
    }
    // Exact adjustment: a <= x < a + 1, where x - t has the sign of
    // (P - tQ + sqrt(D)) * sign(Q).
    int sq = q_ > 0 ? 1 : -1;
    while (sign_plus_sqrt(p_ - a * q_, d_) * sq < 0) a -= 1;
    while (sign_plus_sqrt(p_ - (a + 1) * q_, d_) * sq >= 0) a += 1;
    return a;
}

QuadraticIrrational QuadraticIrrational::conjugate() const {
    return QuadraticIrrational(-p_, -q_, d_);
}

bool QuadraticIrrational::equals(const QuadraticIrrational& o) const {
    if ((q_ > 0) != (o.q_ > 0)) return false;
    return p_ * o.q_ == o.p_ * q_ && d_ * o.q_ * o.q_ == o.d_ * q_ * q_;
}

QuadraticIrrational QuadraticIrrational::moebius(const mpz_class& a,
                                                 const mpz_class& b,
                                                 const mpz_class& c,
                                                 const mpz_class& d) const {
    mpz_class det = a * d - b * c;
    if (det == 0) throw DomainError("moebius with singular matrix");
    // (a x + b)/(c x + d) = (P' + det*Q*sqrt(D)) / N after rationalizing.
    mpz_class cp = c * p_ + d * q_;
    mpz_class n = cp * cp - c * c * d_;
    if (n == 0) throw DomainError("moebius image is infinite");
    mpz_class pp = (a * p_ + b * q_) * cp - a * c * d_;
    mpz_class coeff = det * q_;  // coefficient of sqrt(D)
    // Fold the radical coefficient into the discriminant, keeping it positive.
    mpz_class nd = d_ * coeff * coeff;
    if (coeff < 0) {
        pp = -pp;
        n = -n;
    }
    return QuadraticIrrational(pp, n, nd);
}

ContinuedFraction QuadraticIrrational::continued_fraction(
    std::size_t max_steps) const {
    ContinuedFraction cf;
    mpz_class P = p_, Q = q_, D = d_;
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    std::vector<mpz_class> entries;
    for (std::size_t i = 0; i < max_steps; ++i) {
        auto key = std::make_pair(P.get_str(), Q.get_str());
        auto it = seen.find(key);
        if (it != seen.end()) {
            cf.entries.assign(entries.begin(), entries.begin() + it->second);
            cf.period.assign(entries.begin() + it->second, entries.end());
            return cf;
        }
        seen.emplace(key, i);
        QuadraticIrrational cur(P, Q, D);
        mpz_class a = cur.floor();
        entries.push_back(a);
        mpz_class P2 = a * Q - P;
        mpz_class Q2 = (D - P2 * P2) / Q;
        P = P2;
        Q = Q2;
    }
    throw BudgetError("continued fraction period not found within budget");
}

double QuadraticIrrational::as_double() const {
    mpf_class f(d_, 256);
    mpf_sqrt(f.get_mpf_t(), f.get_mpf_t());
    mpf_class v = (mpf_class(p_, 256) + f) / mpf_class(q_, 256);
    return v.get_d();
}

std::string QuadraticIrrational::str() const {
    return "(" + p_.get_str() + "+sqrt(" + d_.get_str() + "))/" + q_.get_str();
}

QuadraticIrrational cf_evaluate_periodic(const ContinuedFraction& cf) {
    if (!cf.is_periodic())
        throw DomainError("expected a periodic continued fraction");
    // Purely periodic tail y = [ (b1,...,bk) ] satisfies y = (Ay+B)/(Cy+D)
    // with [[A,B],[C,D]] the continuant matrix of the period.
    mpz_class A(1), B(0), C(0), Dm(1);
    for (const auto& b : cf.period) {
        mpz_class nA = A * b + B;
        mpz_class nC = C * b + Dm;
        B = A;
        Dm = C;
        A = nA;
        C = nC;
    }
    // C y^2 + (D - A) y - B = 0; the tail is the root > 1.
    mpz_class disc = (A - Dm) * (A - Dm) + 4 * B * C;
    QuadraticIrrational y(A - Dm, 2 * C, disc);
    // Fold the preperiod on top of y.
    mpz_class h1(1), h0(0), k1(0), k0(1);
    for (const auto& a : cf.entries) {
        mpz_class h = a * h1 + h0;
        mpz_class k = a * k1 + k0;
        h0 = h1;
        h1 = h;
        k0 = k1;
        k1 = k;
    }
    return y.moebius(h1, h0, k1, k0);
}

}  // namespace torcc
