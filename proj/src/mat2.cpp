#include "torcc/mat2.hpp"

#include "torcc/errors.hpp"

namespace torcc {

Mat2::Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det() != 1) throw DomainError("Mat2 determinant must be 1");
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    return r;
}

Mat2 Mat2::inverse() const {
    Mat2 r;
    r.a = d;
    r.b = -b;
    r.c = -c;
    r.d = a;
    return r;
}

Mat2 Mat2::pow(std::int64_t n) const {
    Mat2 base = *this;
    if (n < 0) {
        base = inverse();
        n = -n;
    }
    Mat2 acc;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Mat2::is_plus_minus_identity() const {
    return b == 0 && c == 0 && ((a == 1 && d == 1) || (a == -1 && d == -1));
}

std::string Mat2::str() const {
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
           d.get_str() + "]]";
}

Slope apply(const Mat2& m, const Slope& x) {
    mpz_class np = m.a * x.p + m.b * x.q;
    mpz_class nq = m.c * x.p + m.d * x.q;
    if (!np.fits_slong_p() || !nq.fits_slong_p())
        throw DomainError("slope image exceeds 64-bit coordinates");
    return Slope(np.get_si(), nq.get_si());
}

Mat2 twist_matrix(const Slope& gamma) {
    mpz_class p(static_cast<long>(gamma.p));
    mpz_class q(static_cast<long>(gamma.q));
    return Mat2(1 - p * q, p * p, -q * q, 1 + p * q);
}

}  // namespace torcc
