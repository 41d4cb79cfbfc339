#pragma once

#include <gmpxx.h>

#include <string>

#include "torcc/slope.hpp"

namespace torcc {

/// Exact 2x2 integer matrix of determinant 1 (arbitrary precision).
struct Mat2 {
    mpz_class a, b, c, d;

    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_);

    mpz_class det() const { return a * d - b * c; }
    mpz_class trace() const { return a + d; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;
    Mat2 pow(std::int64_t n) const;  // negative n inverts first

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool is_plus_minus_identity() const;

    std::string str() const;

    static Mat2 identity() { return Mat2(); }
};

/// Moebius action on slopes: p/q -> (a p + b q)/(c p + d q).
/// Throws DomainError if the image does not fit in 64-bit slope coordinates.
Slope apply(const Mat2& m, const Slope& x);

/// The Dehn twist about the slope p/q as an SL(2,Z) matrix
/// [[1 - pq, p^2], [-q^2, 1 + pq]]; parabolic, fixes p/q.
Mat2 twist_matrix(const Slope& gamma);

}  // namespace torcc
