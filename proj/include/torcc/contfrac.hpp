#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "torcc/mat2.hpp"
#include "torcc/slope.hpp"

namespace torcc {

/// A continued fraction [a0; a1, ..., am] with an optional periodic tail.
/// Finite expansions use the convention that the last entry is >= 2 whenever
/// the length exceeds 1, which makes them unique. A nonempty period means the
/// represented number is a quadratic irrational.
struct ContinuedFraction {
    std::vector<mpz_class> entries;  // preperiod, entries[i] >= 1 for i >= 1
    std::vector<mpz_class> period;   // empty for rationals

    bool is_periodic() const { return !period.empty(); }
    std::string str() const;
    static ContinuedFraction parse(const std::string& s);
};

/// Canonical continued fraction of a finite rational slope.
/// Throws DomainError for infinity.
ContinuedFraction cf_expand(const Slope& x);

/// Evaluates a finite expansion back to the rational it came from.
Slope cf_evaluate(const ContinuedFraction& cf);

/// Exact quadratic irrational (P + sqrt(D))/Q with D > 0 non-square,
/// maintained so that Q divides D - P^2.
class QuadraticIrrational {
public:
    QuadraticIrrational(mpz_class P, mpz_class Q, mpz_class D);

    const mpz_class& P() const { return p_; }
    const mpz_class& Q() const { return q_; }
    const mpz_class& D() const { return d_; }

    mpz_class floor() const;
    QuadraticIrrational conjugate() const;

    /// Exact value equality (resolves different radical scalings).
    bool equals(const QuadraticIrrational& o) const;

    /// Image under [[a,b],[c,d]] with any nonzero determinant.
    QuadraticIrrational moebius(const mpz_class& a, const mpz_class& b,
                                const mpz_class& c, const mpz_class& d) const;
    QuadraticIrrational moebius(const Mat2& m) const {
        return moebius(m.a, m.b, m.c, m.d);
    }

    /// Exact eventually-periodic expansion, by the (P, Q) state-recurrence
    /// algorithm; never touches floating point.
    ContinuedFraction continued_fraction(std::size_t max_steps = 1u << 20) const;

    double as_double() const;
    std::string str() const;

private:
    void normalize();
    mpz_class p_, q_, d_;
};

/// Value of a continued fraction with a (nonempty) periodic tail.
QuadraticIrrational cf_evaluate_periodic(const ContinuedFraction& cf);

}  // namespace torcc
