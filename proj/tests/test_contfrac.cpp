#include <doctest.h>

#include <numeric>

#include "torcc/contfrac.hpp"
#include "torcc/errors.hpp"

using namespace torcc;

TEST_CASE("finite expansions") {
    auto cf = cf_expand(Slope(7, 3));
    REQUIRE(cf.entries.size() == 2);
    CHECK(cf.entries[0] == 2);
    CHECK(cf.entries[1] == 3);
    CHECK(cf_expand(Slope(5, 1)).entries.size() == 1);
    CHECK(cf_expand(Slope(5, 1)).entries[0] == 5);
    CHECK(cf_expand(Slope(0, 1)).entries[0] == 0);
    CHECK_THROWS_AS(cf_expand(Slope::infinity()), DomainError);
}

TEST_CASE("last entry at least 2 when length exceeds 1") {
    for (std::int64_t q = 1; q <= 40; ++q)
        for (std::int64_t p = -40; p <= 40; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            auto cf = cf_expand(Slope(p, q));
            if (cf.entries.size() > 1) CHECK(cf.entries.back() >= 2);
        }
}

TEST_CASE("expansion evaluates back exactly, denominators up to 200") {
    for (std::int64_t q = 1; q <= 200; ++q)
        for (std::int64_t p = -200; p <= 200; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Slope x(p, q);
            CHECK(cf_evaluate(cf_expand(x)) == x);
        }
}

TEST_CASE("printing and parsing") {
    auto cf = cf_expand(Slope(7, 3));
    CHECK(cf.str() == "[2;3]");
    CHECK(cf_evaluate(ContinuedFraction::parse("[2;3]")) == Slope(7, 3));
    ContinuedFraction periodic;
    periodic.entries = {mpz_class(1)};
    periodic.period = {mpz_class(2)};
    CHECK(periodic.str() == "[1;(2)]");
    auto parsed = ContinuedFraction::parse("[1;(2)]");
    CHECK(parsed.entries == periodic.entries);
    CHECK(parsed.period == periodic.period);
}

TEST_CASE("sqrt(2) expansion") {
    QuadraticIrrational x(0, 1, 2);  // sqrt(2)
    auto cf = x.continued_fraction();
    REQUIRE(cf.entries.size() == 1);
    CHECK(cf.entries[0] == 1);
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 2);
}

TEST_CASE("golden ratio and a negative surd") {
    QuadraticIrrational golden(1, 2, 5);  // (1+sqrt5)/2
    auto cf = golden.continued_fraction();
    CHECK(cf.entries.empty());
    REQUIRE(cf.period.size() == 1);
    CHECK(cf.period[0] == 1);

    QuadraticIrrational neg(1, -1, 2);  // -(1 + sqrt 2), negative value
    CHECK(neg.floor() == -3);
    auto ncf = neg.continued_fraction();
    CHECK(ncf.entries.at(0) == -3);
    CHECK(!ncf.period.empty());
}

TEST_CASE("floor is exact near integer boundaries") {
    QuadraticIrrational x(0, 1, 2);
    CHECK(x.floor() == 1);
    CHECK(x.conjugate().floor() == -2);  // -sqrt(2)
    QuadraticIrrational big(100, 1, 10100);  // 100 + sqrt(10100) = 200.498...
    CHECK(big.floor() == 200);
}

TEST_CASE("periodic evaluation inverts the expansion") {
    QuadraticIrrational x(3, 7, 61);
    auto cf = x.continued_fraction();
    auto back = cf_evaluate_periodic(cf);
    CHECK(back.equals(x));
}

TEST_CASE("moebius image is exact") {
    QuadraticIrrational x(1, 1, 2);  // 1 + sqrt 2
    // x is fixed by [[5,2],[2,1]]? (5x+2)/(2x+1) with x = 1+sqrt2
    auto y = x.moebius(mpz_class(5), mpz_class(2), mpz_class(2), mpz_class(1));
    CHECK(y.equals(x));
    auto z = x.moebius(mpz_class(1), mpz_class(1), mpz_class(0), mpz_class(1));
    CHECK(z.equals(QuadraticIrrational(2, 1, 2)));  // 2 + sqrt 2
}

TEST_CASE("quadratic irrational rejects perfect squares") {
    CHECK_THROWS_AS(QuadraticIrrational(0, 1, 9), DomainError);
    CHECK_THROWS_AS(QuadraticIrrational(0, 0, 2), DomainError);
}
