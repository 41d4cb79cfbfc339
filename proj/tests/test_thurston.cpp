#include <doctest.h>

#include <torcc/contfrac.hpp>
#include <torcc/errors.hpp>
#include <torcc/thurston.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace torcc;

TEST_CASE("representation of the twist generators") {
    TwistWord a;
    a.push(Generator::Alpha, 1);
    Mat2 ma = rho(a, 2);
    CHECK(ma.a == 1);
    CHECK(ma.b == 2);
    CHECK(ma.c == 0);
    CHECK(ma.d == 1);

    TwistWord b;
    b.push(Generator::Beta, 1);
    Mat2 mb = rho(b, 2);
    CHECK(mb.a == 1);
    CHECK(mb.b == 0);
    CHECK(mb.c == -2);
    CHECK(mb.d == 1);

    // rho is a homomorphism: concatenating reduced words multiplies images.
    TwistWord w1, w2, w12;
    w1.push(Generator::Alpha, 3);
    w1.push(Generator::Beta, -2);
    w2.push(Generator::Alpha, -1);
    w2.push(Generator::Beta, 4);
    w12.push(Generator::Alpha, 3);
    w12.push(Generator::Beta, -2);
    w12.push(Generator::Alpha, -1);
    w12.push(Generator::Beta, 4);
    CHECK(rho(w12, 3) == rho(w1, 3) * rho(w2, 3));
}

TEST_CASE("psi anchors") {
    Mat2 p1 = psi(TwistTuple({1}, 1), 2);
    CHECK(p1.a == 5);
    CHECK(p1.b == 2);
    CHECK(p1.c == 2);
    CHECK(p1.d == 1);
    CHECK(p1.a + p1.d == 6);

    Mat2 p2 = psi(TwistTuple({2}, 2), 2);
    CHECK(p2.a == 17);
    CHECK(p2.b == 4);
    CHECK(p2.c == 4);
    CHECK(p2.d == 1);

    // psi of a concatenated tuple is the product of the blocks.
    Mat2 p11 = psi(TwistTuple({1, 2}, 2), 2);
    CHECK(p11 == p1 * p2);

    CHECK_THROWS_AS(TwistTuple({0}, 3), DomainError);
    CHECK_THROWS_AS(TwistTuple({4}, 3), DomainError);
    CHECK_THROWS_AS(TwistTuple({}, 3), DomainError);
}

TEST_CASE("classification by trace") {
    CHECK(classify(psi(TwistTuple({1}, 1), 2)) == IsometryType::Hyperbolic);
    CHECK(classify(Mat2(1, 2, 0, 1)) == IsometryType::Parabolic);
    CHECK(classify(Mat2(0, 1, -1, 0)) == IsometryType::Elliptic);
    CHECK(classify(Mat2(-1, 0, 0, -1)) == IsometryType::Parabolic);
    CHECK(Mat2(-1, 0, 0, -1).is_plus_minus_identity());
}

TEST_CASE("translation length") {
    Mat2 m = psi(TwistTuple({1}, 1), 2);  // trace 6
    CHECK(translation_length(m) == doctest::Approx(2.0 * std::acosh(3.0)));
    CHECK_THROWS_AS(translation_length(Mat2(1, 1, 0, 1)), DomainError);

    // Invariance under conjugation and inversion.
    std::vector<Mat2> conj = {Mat2(1, 1, 0, 1), Mat2(2, 1, 1, 1),
                              Mat2(0, -1, 1, 0)};
    for (const auto& g : conj) {
        Mat2 c = g * m * g.inverse();
        CHECK(translation_length(c) == doctest::Approx(translation_length(m)));
    }
    CHECK(translation_length(m.inverse()) ==
          doctest::Approx(translation_length(m)));
}

TEST_CASE("fixed points") {
    Mat2 m = psi(TwistTuple({1}, 1), 2);
    auto [att, rep] = fixed_points(m);
    CHECK(att.equals(QuadraticIrrational(1, 1, 2)));   // 1+sqrt2
    CHECK(rep.equals(QuadraticIrrational(-1, -1, 2)));  // 1-sqrt2
    // Exact check: the moebius image of each fixed point is itself.
    CHECK(att.moebius(m.a, m.b, m.c, m.d).equals(att));
    CHECK(rep.moebius(m.a, m.b, m.c, m.d).equals(rep));
    // The attracting point of the inverse is the repelling point.
    auto [att2, rep2] = fixed_points(m.inverse());
    CHECK(att2.equals(rep));
    CHECK(rep2.equals(att));
    // Attraction numerically: iterating m moves a test point toward att.
    double x = 0.25;
    for (int i = 0; i < 30; ++i) {
        double num = mpz_get_d(m.a.get_mpz_t()) * x + mpz_get_d(m.b.get_mpz_t());
        double den = mpz_get_d(m.c.get_mpz_t()) * x + mpz_get_d(m.d.get_mpz_t());
        x = num / den;
    }
    CHECK(x == doctest::Approx(att.as_double()).epsilon(1e-9));
}

TEST_CASE("continued fraction bound certificates") {
    auto cert = cf_bound_certificate(TwistTuple({1}, 1), 2);
    CHECK(cert.ok);
    CHECK(cert.bound == 2);
    CHECK(cert.max_entry == 2);  // axis endpoint 1+sqrt2 = [(2)]

    // Certificates hold across a small family and the bound scales with k*B.
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t q = 1; q <= 3; ++q) {
            auto c = cf_bound_certificate(TwistTuple({q, 1}, 3), k);
            CHECK(c.bound == 3 * k);
            CHECK(c.ok);
        }
}

TEST_CASE("free group check") {
    // k = 1 generates all of SL(2,Z): (a b a)^2 reduces to a word of length 5
    // mapping to -identity, so the check fails.
    CHECK_FALSE(free_group_check(1, 6));
    // k = 2 is the classical free Sanov pair (up to sign of the off-diagonal).
    CHECK(free_group_check(2, 6));
    CHECK(free_group_check(3, 6));
    // Serial and parallel routes agree.
    CHECK(free_group_check(2, 6, 3, true));
    CHECK_FALSE(free_group_check(1, 6, 3, true));
}

TEST_CASE("minimum trace sweep") {
    // The minimum over all tuples is attained at the single block (1) and
    // equals k^2 + 2.
    for (std::int64_t k = 2; k <= 5; ++k) {
        mpz_class serial = min_psi_trace_sweep(k, 3, 3, false);
        CHECK(serial == k * k + 2);
        CHECK(min_psi_trace_sweep(k, 3, 3, true) == serial);
    }
    // Traces grow with the bound on block sizes, never shrink.
    CHECK(min_psi_trace_sweep(2, 4, 4) <= min_psi_trace_sweep(2, 3, 3));
}
