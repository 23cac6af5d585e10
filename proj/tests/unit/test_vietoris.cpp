#include "pointfree/vietoris.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pointfree;
using testsupport::Rng;

namespace {

const Rect kUnit(0, 1, 0, 1);
const Point kHalf{Rational(1, 2), Rational(1, 2)};

} // namespace

TEST_CASE("point sets sort and deduplicate") {
    FinitePointSet a({Point{1, 0}, Point{0, 0}, Point{1, 0}});
    CHECK(a.size() == 2);
    CHECK(a.points().front() == Point{0, 0});
    CHECK_THROWS_AS(FinitePointSet({}), std::invalid_argument);
    CHECK(min_pairwise_linf(a) == 1);
    CHECK(min_pairwise_linf(FinitePointSet({Point{0, 0}, Point{0, 3}, Point{4, 0}})) == 3);
}

TEST_CASE("vietoris membership examples") {
    BasicOpen u({Region(kUnit)}, Region(kUnit));
    CHECK(u.normal);
    CHECK(vietoris_member(FinitePointSet({kHalf}), u));
    CHECK_FALSE(vietoris_member(FinitePointSet({kHalf, Point{5, 5}}), u));

    BasicOpen two = BasicOpen::normal_form({Region(kUnit), Region(Rect(2, 3, 0, 1))});
    CHECK_FALSE(vietoris_member(FinitePointSet({kHalf}), two));
    CHECK(vietoris_member(FinitePointSet({kHalf, Point{Rational(5, 2), Rational(1, 2)}}), two));
}

TEST_CASE("separated neighborhood examples") {
    BasicOpen pair = separated_neighborhood(FinitePointSet({Point{0, 0}, Point{1, 0}}));
    REQUIRE(pair.positive.size() == 2);
    CHECK(pair.positive[0].rects() ==
          std::vector<Rect>{Rect(Rational(-1, 3), Rational(1, 3), Rational(-1, 3), Rational(1, 3))});
    CHECK(pair.positive[1].rects() ==
          std::vector<Rect>{Rect(Rational(2, 3), Rational(4, 3), Rational(-1, 3), Rational(1, 3))});
    CHECK(pair.normal);

    BasicOpen single = separated_neighborhood(FinitePointSet({Point{0, 0}}));
    CHECK(single.positive.size() == 1);
    CHECK(single.positive[0].rects() == std::vector<Rect>{Rect(-1, 1, -1, 1)});

    BasicOpen three = separated_neighborhood(FinitePointSet({Point{0, 0}, Point{0, 3}, Point{4, 0}}));
    REQUIRE(three.positive.size() == 3);
    for (const Region& r : three.positive) {
        CHECK(r.rects().front().width() == 2); // radius 1 boxes, delta = 3
    }
}

TEST_CASE("separated neighborhood contains its set with disjoint positives") {
    Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        FinitePointSet a = testsupport::random_point_set(rng, 1, 4, -3, 3);
        BasicOpen u = separated_neighborhood(a);
        CHECK(u.normal);
        CHECK(vietoris_member(a, u));
        for (std::size_t p = 0; p < u.positive.size(); ++p) {
            for (std::size_t q = p + 1; q < u.positive.size(); ++q) {
                CHECK_FALSE(region_intersect(u.positive[p], u.positive[q]).has_value());
            }
        }
    }
}

TEST_CASE("normal form refinement worked example") {
    BasicOpen u({Region(kUnit)}, Region(Rect(-2, 2, -2, 2)));
    CHECK_FALSE(u.normal);
    FinitePointSet a({kHalf, Point{Rational(3, 2), 0}});
    BasicOpen v = normal_form_refinement(u, a);
    CHECK(v.normal);
    REQUIRE(v.positive.size() == 3);
    CHECK(v.positive[0].rects() == std::vector<Rect>{kUnit});
    CHECK(v.positive[1].rects() ==
          std::vector<Rect>{Rect(Rational(1, 6), Rational(5, 6), Rational(1, 6), Rational(5, 6))});
    CHECK(v.positive[2].rects() ==
          std::vector<Rect>{Rect(Rational(7, 6), Rational(11, 6), Rational(-1, 3), Rational(1, 3))});
    CHECK(vietoris_member(a, v));
}

TEST_CASE("refining an already-normal open around a singleton stays inside it") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit)});
    FinitePointSet a({kHalf});
    BasicOpen v = normal_form_refinement(u, a);
    CHECK(v.normal);
    CHECK(v.positive.size() == 2);
    CHECK(vietoris_member(a, v));
    CHECK(region_subset(v.negative, u.negative));
}

TEST_CASE("refinement members stay members of the coarser open") {
    Rng rng(53);
    for (int i = 0; i < 20; ++i) {
        FinitePointSet a = testsupport::random_point_set(rng, 1, 3, -2, 2);
        // Coarse open: separated boxes as positives, a much larger negative.
        BasicOpen coarse(separated_neighborhood(a).positive, Region(Rect(-10, 10, -10, 10)));
        REQUIRE(vietoris_member(a, coarse));
        BasicOpen v = normal_form_refinement(coarse, a);
        CHECK(v.normal);
        CHECK(vietoris_member(a, v));
        for (int s = 0; s < 5; ++s) {
            FinitePointSet b = testsupport::sample_member(rng, v);
            REQUIRE(vietoris_member(b, v));
            CHECK(vietoris_member(b, coarse));
        }
    }
}

TEST_CASE("refinement rejects non-members") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit)});
    CHECK_THROWS_AS(normal_form_refinement(u, FinitePointSet({Point{5, 5}})),
                    std::invalid_argument);
}

TEST_CASE("compatible finds the center witness") {
    BasicOpen u = BasicOpen::normal_form({Region(Rect(0, 2, 0, 1))});
    BasicOpen v = BasicOpen::normal_form({Region(Rect(1, 3, 0, 1))});
    auto w = compatible(u, v);
    REQUIRE(w.has_value());
    CHECK(w->points() == std::vector<Point>{Point{Rational(3, 2), Rational(1, 2)}});
    CHECK(vietoris_member(*w, u));
    CHECK(vietoris_member(*w, v));
}

TEST_CASE("compatible on disjoint negatives yields none") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit)});
    BasicOpen v = BasicOpen::normal_form({Region(Rect(2, 3, 2, 3))});
    CHECK_FALSE(compatible(u, v).has_value());
}

TEST_CASE("compatible of an open with itself returns a member") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit), Region(Rect(2, 3, 0, 1))});
    auto w = compatible(u, u);
    REQUIRE(w.has_value());
    CHECK(vietoris_member(*w, u));
}

TEST_CASE("compatible witnesses always verify membership") {
    Rng rng(59);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        BasicOpen u = BasicOpen::normal_form({testsupport::random_region(rng, -3, 3),
                                              testsupport::random_region(rng, -3, 3)});
        BasicOpen v = BasicOpen::normal_form({testsupport::random_region(rng, -3, 3)});
        auto w = compatible(u, v);
        if (w) {
            ++found;
            CHECK(vietoris_member(*w, u));
            CHECK(vietoris_member(*w, v));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("membership is antitone in positives and monotone in negative") {
    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
        FinitePointSet a = testsupport::random_point_set(rng, 1, 4, -3, 3);
        BasicOpen u = separated_neighborhood(a);

        // Adding a positive never adds members.
        std::vector<Region> more = u.positive;
        more.push_back(testsupport::random_region(rng, -3, 3));
        BasicOpen u_more(more, u.negative);
        FinitePointSet probe = testsupport::random_point_set(rng, 1, 4, -3, 3);
        if (vietoris_member(probe, u_more)) {
            CHECK(vietoris_member(probe, u));
        }

        // Shrinking the negative never adds members.
        auto shrunk = region_intersect(u.negative, testsupport::random_region(rng, -3, 3));
        if (shrunk) {
            BasicOpen u_shrunk(u.positive, *shrunk);
            if (vietoris_member(probe, u_shrunk)) {
                CHECK(vietoris_member(probe, u));
            }
        }
    }
}
