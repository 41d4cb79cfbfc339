#include <doctest.h>

#include <torcc/errors.hpp>
#include <torcc/orbits.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

using namespace torcc;

namespace {

// Independent oracle: canonical rotation by brute force.
std::vector<std::int64_t> min_rotation(std::vector<std::int64_t> t) {
    std::vector<std::int64_t> best = t;
    for (std::size_t r = 1; r < t.size(); ++r) {
        std::rotate(t.begin(), t.begin() + 1, t.end());
        best = std::min(best, t);
    }
    return best;
}

std::set<std::vector<std::int64_t>> brute_classes(std::int64_t n,
                                                  std::int64_t B) {
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> t(static_cast<std::size_t>(n), 1);
    for (;;) {
        out.insert(min_rotation(t));
        std::size_t i = 0;
        while (i < t.size() && t[i] == B) t[i++] = 1;
        if (i == t.size()) break;
        ++t[i];
    }
    return out;
}

}  // namespace

TEST_CASE("necklace counts") {
    CHECK(necklace_count(1, 2) == 2);
    CHECK(necklace_count(2, 2) == 3);
    CHECK(necklace_count(3, 2) == 4);
    CHECK(necklace_count(4, 2) == 6);
    CHECK(necklace_count(1, 7) == 7);
    // Lower bound B^n / n.
    for (std::int64_t n = 1; n <= 9; ++n)
        for (std::int64_t B = 2; B <= 5; ++B) {
            mpz_class bn;
            mpz_ui_pow_ui(bn.get_mpz_t(), static_cast<unsigned long>(B),
                          static_cast<unsigned long>(n));
            CHECK(necklace_count(n, B) * n >= bn);
            CHECK(necklace_count(n, B) <= bn);
        }
}

TEST_CASE("class enumeration matches brute-force deduplication") {
    for (std::int64_t n = 1; n <= 8; ++n)
        for (std::int64_t B = 2; B <= (n <= 6 ? 5 : 3); ++B) {
            auto classes = enumerate_classes(n, B);
            auto oracle = brute_classes(n, B);
            CHECK(mpz_class(classes.size()) == necklace_count(n, B));
            CHECK(classes.size() == oracle.size());
            mpz_class total = 0;
            for (const auto& c : classes) {
                CHECK(oracle.count(c.representative) == 1);
                CHECK(c.representative == min_rotation(c.representative));
                total += c.multiplicity;
            }
            // Multiplicities add up to the number of tuples.
            mpz_class bn;
            mpz_ui_pow_ui(bn.get_mpz_t(), static_cast<unsigned long>(B),
                          static_cast<unsigned long>(n));
            CHECK(total == bn);
        }
    CHECK_THROWS_AS(enumerate_classes(30, 10, 1000), BudgetError);
}

TEST_CASE("length spectrum") {
    auto spec = length_spectrum(4, 2, 2);
    // One entry per class of each size up to 4.
    CHECK(mpz_class(spec.size()) ==
          necklace_count(1, 2) + necklace_count(2, 2) + necklace_count(3, 2) +
              necklace_count(4, 2));
    for (const auto& e : spec) {
        CHECK(e.length > 0.0);
        // The length only depends on the class: rotations give equal traces.
        auto rot = e.cls.representative;
        std::rotate(rot.begin(), rot.end() - 1, rot.end());
        Mat2 a = psi(TwistTuple(e.cls.representative, 2), 2);
        Mat2 b = psi(TwistTuple(rot, 2), 2);
        CHECK(a.a + a.d == b.a + b.d);
        CHECK(e.length == doctest::Approx(translation_length(a)));
    }
    // The shortest class is the single block (1) with trace 6.
    double min_len = spec.front().length;
    for (const auto& e : spec) min_len = std::min(min_len, e.length);
    CHECK(min_len == doctest::Approx(2.0 * std::acosh(3.0)));
}

TEST_CASE("growth estimates") {
    auto g = growth_rate(2, 12, 1.0);
    CHECK(g.counts.size() == 12);
    // Cumulative counts are increasing and match the closed form.
    mpz_class run = 0;
    for (std::int64_t n = 1; n <= 12; ++n) {
        run += necklace_count(n, 2);
        CHECK(g.counts[static_cast<std::size_t>(n) - 1] == run);
    }
    CHECK(g.p_hat ==
          doctest::Approx(std::log(mpz_get_d(run.get_mpz_t())) / 12.0));
    CHECK(g.closed_form_bound ==
          doctest::Approx((12.0 * std::log(2.0) - std::log(12.0)) / 12.0));
    CHECK(g.p_hat >= g.closed_form_bound);
    // The estimate approaches log(B)/C from below as n grows.
    auto g2 = growth_rate(2, 40, 1.0);
    CHECK(g2.p_hat > g.p_hat - 1e-12);
    CHECK(g2.p_hat < std::log(2.0) / 1.0 + 1e-9);
    // Large B is fine: no enumeration happens.
    auto g3 = growth_rate(32, 10, 1.0);
    CHECK(g3.p_hat > 0.0);
    CHECK(g3.p_hat >= g3.closed_form_bound);
}

TEST_CASE("axis boundedness sweep") {
    auto serial = axis_boundedness_sweep(5, 3, 2, false);
    auto parallel = axis_boundedness_sweep(5, 3, 2, true);
    CHECK(serial.ok);
    CHECK(serial.bound == 6);
    CHECK(serial.empirical_K <= serial.bound);
    CHECK(serial.classes == parallel.classes);
    CHECK(serial.empirical_K == parallel.empirical_K);
    CHECK(serial.ok == parallel.ok);
    mpz_class expect = 0;
    for (std::int64_t n = 1; n <= 5; ++n) expect += necklace_count(n, 3);
    CHECK(mpz_class(serial.classes) == expect);
}
