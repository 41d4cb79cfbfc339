#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torcc/contfrac.hpp"
#include "torcc/mat2.hpp"

namespace torcc {

enum class Generator { Alpha, Beta };

struct TwistLetter {
    Generator gen;
    std::int64_t exponent;  // nonzero
};

/// Reduced word in the twists about a binding pair: consecutive letters use
/// distinct generators.
struct TwistWord {
    std::vector<TwistLetter> letters;
    void push(Generator g, std::int64_t e);
};

/// Tuple (q_1, ..., q_n) of positive integers, each in [1, B].
struct TwistTuple {
    std::vector<std::int64_t> q;
    std::int64_t bound = 1;

    TwistTuple(std::vector<std::int64_t> q_, std::int64_t B);
};

/// Image of a twist word under the representation sending tau_alpha to
/// [[1,k],[0,1]] and tau_beta to [[1,0],[-k,1]], k = i(alpha,beta);
/// matrices multiply in word order (words act left to right).
Mat2 rho(const TwistWord& word, std::int64_t k);

/// rho of tau_alpha^{q1} tau_beta^{-q1} ... tau_alpha^{qn} tau_beta^{-qn}.
Mat2 psi(const TwistTuple& t, std::int64_t k);

enum class IsometryType { Elliptic, Parabolic, Hyperbolic };

/// |trace| < 2, = 2, > 2. Note +-identity lands in Parabolic by the
/// |trace| = 2 convention; use Mat2::is_plus_minus_identity to flag it.
IsometryType classify(const Mat2& m);

/// Hyperbolic-plane translation length 2*arccosh(|trace|/2).
/// Throws DomainError for non-hyperbolic input.
double translation_length(const Mat2& m);

/// Exact attracting and repelling fixed points of a hyperbolic matrix.
std::pair<QuadraticIrrational, QuadraticIrrational> fixed_points(const Mat2& m);

struct CfBoundCertificate {
    mpz_class max_entry;
    mpz_class bound;  // k * B
    bool ok = false;
    ContinuedFraction cf;  // of the attracting fixed point
};

/// Checks that every periodic continued-fraction entry of the attracting
/// fixed point of psi(t, k) is at most k*B.
CfBoundCertificate cf_bound_certificate(const TwistTuple& t, std::int64_t k);

/// True iff no nonempty reduced word of letter-length <= maxlen with
/// exponents in [-max_exp, max_exp] maps to +-identity.
bool free_group_check(std::int64_t k, int maxlen, int max_exp = 3,
                      bool parallel = false);

/// Minimum trace of psi over all tuples with n <= n_max, q_i <= q_max.
/// Serial and OpenMP variants must agree; the parallel one splits on q_1.
mpz_class min_psi_trace_sweep(std::int64_t k, int n_max, std::int64_t q_max,
                              bool parallel = false);

}  // namespace torcc
