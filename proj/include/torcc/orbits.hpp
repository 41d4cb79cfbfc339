#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "torcc/thurston.hpp"

namespace torcc {

/// A cyclic equivalence class of tuples in [1,B]^n, keyed by its
/// lexicographically minimal rotation.
struct NecklaceClass {
    std::vector<std::int64_t> representative;
    std::int64_t multiplicity = 0;  // tuples in the class (n / period length)
};

/// Exact class count (1/n) * sum_{d | n} phi(d) * B^{n/d}.
mpz_class necklace_count(std::int64_t n, std::int64_t B);

/// One representative per cyclic class of [1,B]^n.
/// Throws BudgetError when B^n exceeds max_tuples.
std::vector<NecklaceClass> enumerate_classes(std::int64_t n, std::int64_t B,
                                             std::uint64_t max_tuples = 1u << 24);

struct SpectrumEntry {
    NecklaceClass cls;
    double length = 0.0;  // hyperbolic-plane translation length of psi
};

/// Translation length of psi per class, for all tuple sizes up to n.
std::vector<SpectrumEntry> length_spectrum(std::int64_t n, std::int64_t B,
                                           std::int64_t k,
                                           std::uint64_t max_tuples = 1u << 24);

struct GrowthEstimate {
    std::int64_t B = 0;
    std::int64_t n_max = 0;
    double C = 1.0;
    /// Cumulative class counts by the nC length proxy: counts[i] = number of
    /// classes with n <= i+1 (each class of size n given length n*C).
    std::vector<mpz_class> counts;
    double p_hat = 0.0;        // log(counts.back()) / (n_max * C)
    double closed_form_bound = 0.0;  // (n log B - log n)/(n C) at n = n_max
};

/// Orbit-growth estimate from the exact class counts; no enumeration needed,
/// so arbitrary B is fine.
GrowthEstimate growth_rate(std::int64_t B, std::int64_t n_max, double C);

struct AxisSweepReport {
    mpz_class empirical_K;  // max periodic cf entry observed
    mpz_class bound;        // k * B
    bool ok = false;        // empirical_K <= bound for every class
    std::int64_t classes = 0;
};

/// Runs the continued-fraction certificate over every class with tuple size
/// <= n; the serial and OpenMP routes must agree.
AxisSweepReport axis_boundedness_sweep(std::int64_t n, std::int64_t B,
                                       std::int64_t k, bool parallel = false,
                                       std::uint64_t max_tuples = 1u << 24);

}  // namespace torcc
