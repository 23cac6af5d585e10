#include "pointfree/obstruction.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pointfree;
using testsupport::Rng;

namespace {

// Independent re-check of a sweep violation from its recorded trace.
bool reverify(const SelectorViolation& v) {
    auto chosen = [](const SweepStep& s) { return s.choice == 0 ? s.swept : s.antipode; };
    if (v.kind == SelectorViolation::Kind::Discontinuity) {
        if (v.step + 1 >= v.trace.size()) return false;
        Rational d = point_distance(chosen(v.trace[v.step]), chosen(v.trace[v.step + 1]),
                                    Metric::L2Sq);
        return d > v.threshold_sq;
    }
    // wraparound: no adjacent step broke the bound, and the endpoint
    // choices agree even though the labels swapped
    for (std::size_t k = 0; k + 1 < v.trace.size(); ++k) {
        Rational d = point_distance(chosen(v.trace[k]), chosen(v.trace[k + 1]), Metric::L2Sq);
        if (d > v.threshold_sq) return false;
    }
    return v.trace.front().choice == v.trace.back().choice;
}

} // namespace

TEST_CASE("circle point examples") {
    CHECK(circle_point(CircleParam({Point{0, 0}, 1, Rational(0)})).as_point() == Point{1, 0});
    CHECK(circle_point(CircleParam({Point{0, 0}, 1, Rational(1)})).as_point() == Point{0, 1});
    CHECK(circle_point(CircleParam({Point{0, 0}, 1, std::nullopt})).as_point() == Point{-1, 0});
    CHECK(circle_point(CircleParam({Point{2, 3}, Rational(9, 4), Rational(0)})).as_point() ==
          Point{Rational(7, 2), 3});
}

TEST_CASE("rational-radius circle points land exactly on the circle") {
    for (Rational r_sq : {Rational(1), Rational(9, 4), Rational(4)}) {
        for (Rational t = -4; t <= 4; t += Rational(1, 4)) {
            Point p = circle_point(CircleParam({Point{0, 0}, r_sq, t})).as_point();
            CHECK(p.x * p.x + p.y * p.y == r_sq);
        }
    }
}

TEST_CASE("irrational-radius circle points are enclosed") {
    CircleParam c({Point{0, 0}, 2, Rational(1, 3)});
    PointEnclosure p = circle_point(c, Rational(1, 1000));
    CHECK_FALSE(p.exact());
    Interval norm = add(square(p.x), square(p.y));
    CHECK(norm.contains(2));
}

TEST_CASE("sqrt monodromy certificates") {
    const Rational tol(1, 1000000);
    MonodromyCertificate c = sqrt_monodromy(Rational(1, 4), 64, tol);
    CHECK(c.start_root.as_point() == Point{Rational(1, 2), 0});
    CHECK(c.end_root.as_point() == Point{Rational(-1, 2), 0});
    CHECK(c.separation.contains(1)); // 2 * sqrt(1/4)
    CHECK(c.valid());
    CHECK(c.path.size() == 65);

    MonodromyCertificate c1 = sqrt_monodromy(1, 64, tol);
    CHECK(c1.separation.contains(2));
    CHECK(c1.valid());
}

TEST_CASE("monodromy separation encloses twice the root modulus") {
    const Rational tol(1, 1000000);
    for (Rational r_sq : {Rational(1, 4), Rational(1), Rational(2), Rational(3, 5), Rational(9)}) {
        MonodromyCertificate c = sqrt_monodromy(r_sq, 32, tol);
        Interval eps = sqrt_enclosure(r_sq, tol);
        // both intervals enclose the exact separation 2*sqrt(r_sq)
        CHECK(c.separation.lo <= 2 * eps.hi);
        CHECK(c.separation.hi >= 2 * eps.lo);
        CHECK(c.valid());
    }
}

TEST_CASE("monodromy input validation") {
    CHECK_THROWS_AS(sqrt_monodromy(1, 4, Rational(1, 1000)), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_monodromy(0, 64, Rational(1, 1000)), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_monodromy(1, 64, Rational(0)), std::invalid_argument);
    // enclosures too coarse to tell the two roots apart
    CHECK_THROWS_AS(sqrt_monodromy(Rational(1, 4), 64, Rational(10)), std::runtime_error);
}

TEST_CASE("antipodal sweep catches the canned selectors") {
    SweepConfig cfg(FinitePointSet({Point{0, 0}}), 0, Rational(1, 4), 16);

    SelectorViolation constant =
        antipodal_sweep([](std::size_t, const Point&, const Point&) { return 0; }, cfg);
    CHECK(constant.kind == SelectorViolation::Kind::Wraparound);
    CHECK(constant.step == 16);
    CHECK(reverify(constant));

    SelectorViolation flip = antipodal_sweep(
        [](std::size_t k, const Point&, const Point&) { return k < 8 ? 0 : 1; }, cfg);
    CHECK(flip.kind == SelectorViolation::Kind::Discontinuity);
    CHECK(flip.step == 7);
    CHECK(reverify(flip));

    SelectorViolation larger = antipodal_sweep(
        [](std::size_t, const Point& swept, const Point& antipode) {
            return swept.x >= antipode.x ? 0 : 1;
        },
        cfg);
    CHECK(reverify(larger));
}

TEST_CASE("every seeded random selector violates some constraint") {
    Rng rng(127);
    SweepConfig cfg(FinitePointSet({Point{0, 0}, Point{2, 2}}), 0, Rational(1, 10), 12);
    for (int i = 0; i < 50; ++i) {
        std::vector<int> choices;
        for (std::size_t k = 0; k <= cfg.steps; ++k) choices.push_back(rng.uniform(0, 1));
        SelectorViolation v = antipodal_sweep(
            [&](std::size_t k, const Point&, const Point&) { return choices[k]; }, cfg);
        CHECK(reverify(v));
    }
}

TEST_CASE("sweep configuration validation") {
    FinitePointSet base({Point{0, 0}, Point{1, 0}});
    // separated box half-width is 1/3; the disc needs 2*iota below that
    CHECK_THROWS_AS(SweepConfig(base, 0, Rational(1, 4), 16), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig(base, 5, Rational(1, 10), 16), std::invalid_argument);
    CHECK_THROWS_AS(SweepConfig(base, 0, Rational(1, 10), 4), std::invalid_argument);
    SweepConfig ok(base, 0, Rational(1, 10), 16);
    CHECK(ok.disc_center() == Point{Rational(-1, 10), 0});
}

TEST_CASE("antipodal unsatisfiability brute force") {
    UnsatRecord r1 = antipodal_unsat(1);
    CHECK(r1.assignments_checked == 4);
    CHECK(r1.satisfying == 0);

    UnsatRecord r4 = antipodal_unsat(4);
    CHECK(r4.assignments_checked == 32);
    CHECK(r4.satisfying == 0);

    UnsatRecord r12 = antipodal_unsat(12);
    CHECK(r12.assignments_checked == 8192);
    CHECK(r12.satisfying == 0);

    CHECK_THROWS_AS(antipodal_unsat(0), std::invalid_argument);
    CHECK_THROWS_AS(antipodal_unsat(kUnsatMaxN + 1), std::invalid_argument);
}

TEST_CASE("dropping the wrap constraint admits exactly the constant assignments") {
    // sanity check of the enumeration itself: with only the adjacency
    // constraints, the two constant assignments satisfy; the wrap kills them
    for (unsigned n = 1; n <= 8; ++n) {
        std::uint64_t adjacent_only = 0;
        const std::uint64_t total = std::uint64_t(1) << (n + 1);
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            bool ok = true;
            for (unsigned k = 0; k < n && ok; ++k) {
                ok = ((bits >> k) & 1) == ((bits >> (k + 1)) & 1);
            }
            if (ok) ++adjacent_only;
        }
        CHECK(adjacent_only == 2);
        CHECK(antipodal_unsat(n).satisfying == 0);
    }
}
