#ifndef POINTFREE_GEOMETRY_HPP
#define POINTFREE_GEOMETRY_HPP

#include "pointfree/interval.hpp"
#include "pointfree/rational.hpp"

#include <optional>
#include <vector>

namespace pointfree {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

/// Open axis-aligned rectangle (x_lo, x_hi) x (y_lo, y_hi) with rational
/// corners. Construction rejects degenerate boxes, so every Rect has
/// interior and its closure equals the closure of its interior.
struct Rect {
    Rational x_lo, x_hi;
    Rational y_lo, y_hi;

    Rect(Rational xl, Rational xh, Rational yl, Rational yh);

    static Rect box(const Point& center, const Rational& half_width);

    Rational width() const { return x_hi - x_lo; }
    Rational height() const { return y_hi - y_lo; }
    Point center() const { return Point{(x_lo + x_hi) / 2, (y_lo + y_hi) / 2}; }
    Interval x_range() const { return Interval(x_lo, x_hi); }
    Interval y_range() const { return Interval(y_lo, y_hi); }

    /// Strict interior membership (the rectangle is an open set).
    bool contains(const Point& p) const {
        return x_lo < p.x && p.x < x_hi && y_lo < p.y && p.y < y_hi;
    }

    friend bool operator==(const Rect& a, const Rect& b) {
        return a.x_lo == b.x_lo && a.x_hi == b.x_hi && a.y_lo == b.y_lo && a.y_hi == b.y_hi;
    }
};

/// Finite union of open rational rectangles; the open subsets of the plane
/// this library works with. Overlaps between the rectangles are permitted
/// and no canonical form is maintained.
class Region {
public:
    explicit Region(std::vector<Rect> rects);
    explicit Region(Rect r) : Region(std::vector<Rect>{std::move(r)}) {}

    const std::vector<Rect>& rects() const { return rects_; }

    bool member(const Point& p) const;

    friend bool operator==(const Region& a, const Region& b) { return a.rects_ == b.rects_; }

private:
    std::vector<Rect> rects_;
};

enum class Metric {
    L1,    ///< taxicab |dx| + |dy|
    L2Sq,  ///< squared Euclidean dx^2 + dy^2 (rational-exact)
    LInf,  ///< max(|dx|, |dy|)
};

bool region_member(const Region& r, const Point& p);

/// Point set union; with regions as rect lists this is concatenation.
Region region_union(const Region& a, const Region& b);
Region region_union(const std::vector<Region>& regions);

/// Exact decision of "every point of a lies in b" via the coordinate-sweep
/// grid decomposition: the x/y coordinates of both regions cut the plane
/// into faces that never straddle a rectangle boundary, so one
/// representative point per face decides the face. Returns a rational
/// witness point in a \ b when containment fails.
std::optional<Point> region_subset_witness(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);

/// Point set intersection; pairwise rect overlaps, degenerate slivers
/// (shared edges of open rects) dropped. nullopt when the intersection is
/// empty as an open set.
std::optional<Region> region_intersect(const Region& a, const Region& b);

Rational point_distance(const Point& a, const Point& b, Metric m);

/// Exact distance from p to the closure of r (equals the infimum over the
/// open set since rects are non-degenerate).
Rational region_distance(const Region& r, const Point& p, Metric m);

/// Exact sup over the closure of r of the distance to p (attained at a
/// rect corner by convexity).
Rational region_sup_distance(const Region& r, const Point& p, Metric m);

/// Exact diameter of the closure of r: max distance over pairs of corners.
Rational region_diameter(const Region& r, Metric m);

/// L-infinity Minkowski inflation: every rect grows by eps on all four
/// sides. The result contains every point within L-inf distance eps of r.
Region region_expand(const Region& r, const Rational& eps);

} // namespace pointfree

#endif
