#include <doctest.h>

#include <torcc/errors.hpp>
#include <torcc/marking.hpp>
#include <torcc/mat2.hpp>
#include <torcc/mm.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

using namespace torcc;

TEST_CASE("marking invariant and parsing") {
    CHECK_THROWS_AS(Marking(Slope(0, 1), Slope(5, 1)), DomainError);
    CHECK_THROWS_AS(Marking(Slope(1, 2), Slope(1, 2)), DomainError);
    Marking m(Slope(0, 1), Slope(1, 0));
    CHECK(m.str() == "0/1|inf");
    CHECK(Marking::parse("0/1|inf") == m);
    CHECK(Marking::parse("0/1|1/0") == m);
    CHECK(Marking::parse("2/5|1/2") == Marking(Slope(2, 5), Slope(1, 2)));
    CHECK_THROWS_AS(Marking::parse("2/5"), DomainError);
}

TEST_CASE("elementary moves") {
    Marking m(Slope(0, 1), Slope(1, 0));
    auto moves = elementary_moves(m);
    REQUIRE(moves.size() == 3);
    auto has = [&](const Marking& x) {
        return std::find(moves.begin(), moves.end(), x) != moves.end();
    };
    CHECK(has(Marking(Slope(1, 0), Slope(0, 1))));   // flip
    CHECK(has(Marking(Slope(0, 1), Slope(1, 1))));   // twist
    CHECK(has(Marking(Slope(0, 1), Slope(-1, 1))));  // inverse twist

    // Moves are involutive enough to return: every move of m has m among its
    // own moves, and every move is a valid marking.
    std::uint64_t ctr = 0;
    for (int i = 0; i < 300; ++i) {
        Marking r = random_marking(21, ctr++, 25);
        auto mv = elementary_moves(r);
        CHECK(mv.size() == 3);
        for (const auto& x : mv) {
            CHECK(intersection_number(x.base, x.transversal) == 1);
            auto back = elementary_moves(x);
            CHECK(std::find(back.begin(), back.end(), r) != back.end());
        }
    }
}

TEST_CASE("neighbor index parametrization") {
    std::uint64_t ctr = 1000;
    for (int i = 0; i < 400; ++i) {
        Marking r = random_marking(22, ctr++, 30);
        std::int64_t idx = neighbor_index(r.base, r.transversal);
        CHECK(neighbor_at_index(r.base, idx) == r.transversal);
        // The twist about the base shifts the index by exactly one.
        Mat2 t = twist_matrix(r.base);
        Slope shifted = apply(t, r.transversal);
        CHECK(neighbor_index(r.base, shifted) == idx + 1);
        Slope unshifted = apply(t.inverse(), r.transversal);
        CHECK(neighbor_index(r.base, unshifted) == idx - 1);
    }
}

TEST_CASE("marking distance") {
    Marking m(Slope(0, 1), Slope(1, 0));
    CHECK(marking_distance(m, m) == 0);
    CHECK(marking_distance(m, Marking(Slope(1, 0), Slope(0, 1))) == 1);
    CHECK(marking_distance(m, Marking(Slope(0, 1), Slope(1, 1))) == 1);
    // Five twists about the base.
    CHECK(marking_distance(m, Marking(Slope(0, 1), Slope(1, 5))) == 5);
    // Symmetry and the triangle inequality on a corpus.
    std::uint64_t ctr = 2000;
    for (int i = 0; i < 25; ++i) {
        Marking a = random_marking(23, ctr++, 8);
        Marking b = random_marking(23, ctr++, 8);
        Marking c = random_marking(23, ctr++, 8);
        std::int64_t ab = marking_distance(a, b);
        CHECK(marking_distance(b, a) == ab);
        CHECK(ab <= marking_distance(a, c) + marking_distance(c, b));
    }
}

TEST_CASE("marking distance is isometry invariant") {
    std::vector<Mat2> mats = {Mat2(1, 1, 0, 1), Mat2(2, 1, 1, 1),
                              Mat2(0, -1, 1, 0)};
    std::uint64_t ctr = 3000;
    for (int i = 0; i < 20; ++i) {
        Marking a = random_marking(24, ctr++, 8);
        Marking b = random_marking(24, ctr++, 8);
        std::int64_t d = marking_distance(a, b);
        for (const auto& A : mats) {
            Marking aa(apply(A, a.base), apply(A, a.transversal));
            Marking bb(apply(A, b.base), apply(A, b.transversal));
            CHECK(marking_distance(aa, bb) == d);
        }
    }
}

TEST_CASE("corridor distance agrees with the unrestricted search") {
    std::uint64_t ctr = 9000;
    for (int i = 0; i < 250; ++i) {
        Marking a = random_marking(25, ctr++, 12);
        Marking b = random_marking(25, ctr++, 12);
        std::int64_t bfs;
        try {
            bfs = marking_distance(a, b, 4000000);
        } catch (const BudgetError&) {
            continue;
        }
        CHECK(marking_distance_corridor(a, b) == bfs);
    }
    // Regression: this pair once crashed the corridor construction.
    CHECK(marking_distance_corridor(Marking::parse("inf|2/1"),
                                    Marking::parse("14/3|5/1")) == 8);
    // Far-apart markings are exact and cheap where plain BFS is hopeless.
    Marking far1 = Marking::parse("-17/35|-50/103");
    Marking far2 = Marking::parse("29/26|68/61");
    CHECK(marking_distance_corridor(far1, far2) == 43);
    CHECK(marking_distance_corridor(far2, far1) == 43);
}

TEST_CASE("distance search honors its budget") {
    Marking m(Slope(0, 1), Slope(1, 0));
    Marking far(Slope(89, 144), Slope(55, 89));
    CHECK_THROWS_AS(marking_distance(m, far, 50), BudgetError);
}

TEST_CASE("marking balls and set distance") {
    Marking m(Slope(0, 1), Slope(1, 0));
    auto b0 = marking_ball(m, 0);
    CHECK(b0.size() == 1);
    auto b1 = marking_ball(m, 1);
    CHECK(b1.size() == 4);  // center plus its three moves
    auto b2 = marking_ball(m, 2);
    // Every member of the radius-2 ball really is within 2, and the ball is
    // exactly the set of such markings among radius-3 candidates.
    for (const auto& x : b2) CHECK(marking_distance(m, x) <= 2);
    for (const auto& x : marking_ball(m, 3))
        if (marking_distance(m, x) <= 2)
            CHECK(std::find(b2.begin(), b2.end(), x) != b2.end());

    std::vector<Marking> targets = {Marking(Slope(0, 1), Slope(1, 3)),
                                    Marking(Slope(1, 1), Slope(1, 0))};
    std::int64_t direct = std::min(marking_distance(m, targets[0]),
                                   marking_distance(m, targets[1]));
    CHECK(distance_to_set(m, targets) == direct);
}

TEST_CASE("annular distance between markings") {
    Marking m(Slope(0, 1), Slope(1, 0));
    Marking n(Slope(0, 1), Slope(1, 5));
    // Both bases equal the core, so the transversals carry the projection.
    CHECK(marking_annular_distance(Slope(0, 1), m, n) == 6);
    // Otherwise the base is used: these bases differ by five twists at inf.
    Marking p(Slope(5, 1), Slope(1, 0));
    Marking q(Slope(0, 1), Slope(1, 0));
    CHECK(marking_annular_distance(Slope(1, 0), p, q) == 6);
}
