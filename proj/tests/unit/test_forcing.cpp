#include "pointfree/forcing.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pointfree;
using testsupport::Rng;

namespace {

const Rect kUnit(0, 1, 0, 1);
const RieszTerm X = RieszTerm::x();
const RieszTerm Y = RieszTerm::y();

} // namespace

TEST_CASE("forces_equal delegates to the negative region") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit)});
    CHECK(forces_equal(u, X, X, Rational(1, 1000)).proven());

    EqVerdict v = forces_equal(u, X, Y, Rational(1, 1000));
    REQUIRE(v.refuted());
    CHECK(u.negative.member(*v.witness));
    CHECK(v.witness->x != v.witness->y); // rects always contain off-diagonal points
}

TEST_CASE("forced sup interval on the two-box example") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit), Region(Rect(2, 3, 0, 1))});
    const Rational tol(1, 100);
    ForcedInterval f = forced_sup_interval(u, X, tol);
    CHECK(abs(f.lo - 2) <= tol);
    CHECK(abs(f.hi - 3) <= tol);
    // dense-sampling oracle per rect: inf over the boxes are 0 and 2, sup
    // over the union is 3
    CHECK(testsupport::sample_inf(X, u.positive[1], 8) >= f.lo);
    CHECK(testsupport::sample_sup(X, u.positive_union(), 8) <= f.hi);
}

TEST_CASE("forced sup of the unit term is exact") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit)});
    ForcedInterval f = forced_sup_interval(u, RieszTerm::one(), Rational(1, 100));
    CHECK(f.lo == 1);
    CHECK(f.hi == 1);
}

TEST_CASE("forced sup of x over the unit box") {
    BasicOpen u = BasicOpen::normal_form({Region(kUnit)});
    const Rational tol(1, 100);
    ForcedInterval f = forced_sup_interval(u, X, tol);
    CHECK(abs(f.lo - 0) <= tol);
    CHECK(abs(f.hi - 1) <= tol);
}

TEST_CASE("forced sup rejects non-normal opens") {
    BasicOpen u({Region(kUnit)}, Region(Rect(-2, 2, -2, 2)));
    REQUIRE_FALSE(u.normal);
    CHECK_THROWS_AS(forced_sup_interval(u, X, Rational(1, 100)), std::invalid_argument);
}

TEST_CASE("forced sup contains sampled member suprema") {
    Rng rng(89);
    const Rational tol(1, 500);
    for (int i = 0; i < 25; ++i) {
        FinitePointSet a = testsupport::random_point_set(rng, 1, 3, -2, 2);
        RieszTerm t = testsupport::random_term(rng, 4);
        BasicOpen u = normability_refine(a, t, Rational(1, 50));
        ForcedInterval f = forced_sup_interval(u, t, tol);
        for (int s = 0; s < 5; ++s) {
            FinitePointSet member = testsupport::sample_member(rng, u);
            REQUIRE(vietoris_member(member, u));
            std::optional<Rational> member_sup;
            for (const Point& p : member.points()) {
                Rational v = eval(t, p);
                if (!member_sup || *member_sup < v) member_sup = v;
            }
            CHECK(f.lo - tol <= *member_sup);
            CHECK(*member_sup <= f.hi + tol);
        }
    }
}

TEST_CASE("normability refine pins the forced width") {
    Rng rng(97);
    const Rational eps(1, 100);
    const Rational tol(1, 1000);
    for (int i = 0; i < 10; ++i) {
        FinitePointSet a = testsupport::random_point_set(rng, 1, 3, -2, 2);
        RieszTerm t = testsupport::random_term(rng, 4);
        BasicOpen u = normability_refine(a, t, eps);
        CHECK(u.normal);
        CHECK(vietoris_member(a, u));
        for (std::size_t p = 0; p < u.positive.size(); ++p) {
            CHECK(enclosure(t, u.positive[p].rects().front(), eps / 4, 8).width() < eps);
            for (std::size_t q = p + 1; q < u.positive.size(); ++q) {
                CHECK_FALSE(region_intersect(u.positive[p], u.positive[q]).has_value());
            }
        }
        ForcedInterval f = forced_sup_interval(u, t, tol);
        CHECK(f.hi - f.lo < eps + 2 * tol);
    }
}

TEST_CASE("normability refine worked examples") {
    // x over a singleton: the box shrinks until its width is below eps
    BasicOpen u1 = normability_refine(FinitePointSet({Point{0, 0}}), X, Rational(1, 10));
    REQUIRE(u1.positive.size() == 1);
    const Rect& box1 = u1.positive[0].rects().front();
    CHECK(box1.width() / 2 < Rational(1, 20));
    ForcedInterval f1 = forced_sup_interval(u1, X, Rational(1, 1000));
    CHECK(f1.hi - f1.lo < Rational(1, 10));

    // a constant term never forces shrinking
    FinitePointSet two({Point{0, 0}, Point{1, 0}});
    BasicOpen u2 = normability_refine(two, RieszTerm::one(), Rational(1, 1000000));
    const Rect& box2 = u2.positive[0].rects().front();
    CHECK(box2.width() == Rational(2, 3)); // separated radius delta/3 = 1/3 untouched
    ForcedInterval f2 = forced_sup_interval(u2, RieszTerm::one(), Rational(1, 1000));
    CHECK(f2.lo == 1);
    CHECK(f2.hi == 1);

    // x + y is 1-Lipschitz in each coordinate
    BasicOpen u3 = normability_refine(two, X + Y, Rational(1, 10));
    for (const Region& pos : u3.positive) {
        CHECK(pos.rects().front().width() / 2 < Rational(1, 40));
    }
}

TEST_CASE("refining the open shrinks the forced interval up to tol") {
    Rng rng(101);
    const Rational tol(1, 500);
    for (int i = 0; i < 10; ++i) {
        FinitePointSet a = testsupport::random_point_set(rng, 2, 3, -2, 2);
        RieszTerm t = testsupport::random_term(rng, 4);
        Rational h = min_pairwise_linf(a) / 3;
        BasicOpen coarse = testsupport::boxes_around(a, h);
        BasicOpen fine = testsupport::boxes_around(a, h / 2);
        ForcedInterval fc = forced_sup_interval(coarse, t, tol);
        ForcedInterval ff = forced_sup_interval(fine, t, tol);
        CHECK(ff.lo >= fc.lo - tol);
        CHECK(ff.hi <= fc.hi + tol);
    }
}

TEST_CASE("point evaluation hom check examples") {
    std::vector<Rect> rects{kUnit, Rect(2, 3, 0, 1)};
    HomCheckResult inside = point_eval_hom_check(Point{Rational(1, 2), Rational(1, 2)}, rects);
    REQUIRE(inside.index.has_value());
    CHECK(*inside.index == 0);
    CHECK(inside.join_value == Rational(1, 2));

    HomCheckResult outside = point_eval_hom_check(Point{5, 5}, rects);
    CHECK(outside.outside());
    CHECK(outside.join_value.sign() <= 0);

    HomCheckResult second = point_eval_hom_check(Point{Rational(5, 2), Rational(1, 2)}, rects);
    REQUIRE(second.index.has_value());
    CHECK(*second.index == 1);
}

TEST_CASE("hom check agrees with membership on a grid") {
    std::vector<Rect> rects{Rect(-1, 0, -1, 1), Rect(Rational(1, 2), 2, 0, 3)};
    Region uni({rects[0], rects[1]});
    const Rational pitch(1, 4);
    for (Rational x = -2; x <= 3; x += pitch) {
        for (Rational y = -2; y <= 4; y += pitch) {
            Point p{x, y};
            HomCheckResult r = point_eval_hom_check(p, rects);
            CHECK((r.join_value.sign() > 0) == uni.member(p));
            CHECK(r.index.has_value() == uni.member(p));
            if (r.index) {
                CHECK(rects[*r.index].contains(p));
            }
        }
    }
}
