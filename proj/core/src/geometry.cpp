#include "pointfree/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace pointfree {

Rect::Rect(Rational xl, Rational xh, Rational yl, Rational yh)
    : x_lo(std::move(xl)), x_hi(std::move(xh)), y_lo(std::move(yl)), y_hi(std::move(yh)) {
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
        throw std::invalid_argument("Rect: sides must be non-degenerate open intervals");
    }
}

Rect Rect::box(const Point& center, const Rational& half_width) {
    return Rect(center.x - half_width, center.x + half_width,
                center.y - half_width, center.y + half_width);
}

Region::Region(std::vector<Rect> rects) : rects_(std::move(rects)) {
    if (rects_.empty()) {
        throw std::invalid_argument("Region: rect list must be non-empty");
    }
}

bool Region::member(const Point& p) const {
    return std::any_of(rects_.begin(), rects_.end(),
                       [&](const Rect& r) { return r.contains(p); });
}

bool region_member(const Region& r, const Point& p) { return r.member(p); }

Region region_union(const Region& a, const Region& b) {
    std::vector<Rect> rects = a.rects();
    rects.insert(rects.end(), b.rects().begin(), b.rects().end());
    return Region(std::move(rects));
}

Region region_union(const std::vector<Region>& regions) {
    std::vector<Rect> rects;
    for (const Region& r : regions) {
        rects.insert(rects.end(), r.rects().begin(), r.rects().end());
    }
    return Region(std::move(rects));
}

namespace {

// Sorted distinct coordinates of both regions along one axis, plus the
// representative values used to probe every face of the arrangement:
// each breakpoint itself and each open-gap midpoint.
std::vector<Rational> face_representatives(const Region& a, const Region& b, bool x_axis) {
    std::vector<Rational> coords;
    auto push = [&](const Rect& r) {
        if (x_axis) {
            coords.push_back(r.x_lo);
            coords.push_back(r.x_hi);
        } else {
            coords.push_back(r.y_lo);
            coords.push_back(r.y_hi);
        }
    };
    for (const Rect& r : a.rects()) push(r);
    for (const Rect& r : b.rects()) push(r);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

    std::vector<Rational> reps;
    reps.reserve(coords.size() * 2);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        reps.push_back(coords[i]);
        if (i + 1 < coords.size()) {
            reps.push_back((coords[i] + coords[i + 1]) / 2);
        }
    }
    return reps;
}

} // namespace

std::optional<Point> region_subset_witness(const Region& a, const Region& b) {
    const std::vector<Rational> xs = face_representatives(a, b, true);
    const std::vector<Rational> ys = face_representatives(a, b, false);
    for (const Rational& x : xs) {
        for (const Rational& y : ys) {
            Point p{x, y};
            if (a.member(p) && !b.member(p)) {
                return p;
            }
        }
    }
    return std::nullopt;
}

bool region_subset(const Region& a, const Region& b) {
    return !region_subset_witness(a, b).has_value();
}

std::optional<Region> region_intersect(const Region& a, const Region& b) {
    std::vector<Rect> rects;
    for (const Rect& ra : a.rects()) {
        for (const Rect& rb : b.rects()) {
            const Rational& xl = max(ra.x_lo, rb.x_lo);
            const Rational& xh = min(ra.x_hi, rb.x_hi);
            const Rational& yl = max(ra.y_lo, rb.y_lo);
            const Rational& yh = min(ra.y_hi, rb.y_hi);
            if (xl < xh && yl < yh) {
                rects.emplace_back(xl, xh, yl, yh);
            }
        }
    }
    if (rects.empty()) {
        return std::nullopt;
    }
    return Region(std::move(rects));
}

Rational point_distance(const Point& a, const Point& b, Metric m) {
    Rational dx = abs(a.x - b.x);
    Rational dy = abs(a.y - b.y);
    switch (m) {
        case Metric::L1: return dx + dy;
        case Metric::L2Sq: return dx * dx + dy * dy;
        case Metric::LInf: return max(dx, dy);
    }
    throw std::logic_error("point_distance: bad metric");
}

namespace {

// Componentwise gap from p to the closure of r (zero inside the slab).
Rational axis_gap(const Rational& v, const Rational& lo, const Rational& hi) {
    if (v < lo) return lo - v;
    if (v > hi) return v - hi;
    return 0;
}

Rational rect_distance(const Rect& r, const Point& p, Metric m) {
    Rational dx = axis_gap(p.x, r.x_lo, r.x_hi);
    Rational dy = axis_gap(p.y, r.y_lo, r.y_hi);
    switch (m) {
        case Metric::L1: return dx + dy;
        case Metric::L2Sq: return dx * dx + dy * dy;
        case Metric::LInf: return max(dx, dy);
    }
    throw std::logic_error("rect_distance: bad metric");
}

std::vector<Point> rect_corners(const Rect& r) {
    return {Point{r.x_lo, r.y_lo}, Point{r.x_lo, r.y_hi},
            Point{r.x_hi, r.y_lo}, Point{r.x_hi, r.y_hi}};
}

} // namespace

Rational region_distance(const Region& r, const Point& p, Metric m) {
    Rational best = rect_distance(r.rects().front(), p, m);
    for (std::size_t i = 1; i < r.rects().size(); ++i) {
        best = min(best, rect_distance(r.rects()[i], p, m));
    }
    return best;
}

Rational region_sup_distance(const Region& r, const Point& p, Metric m) {
    // The distance to a fixed point is convex, so its max over a closed box
    // sits at a corner; over a union, at a corner of some rect.
    std::optional<Rational> best;
    for (const Rect& rect : r.rects()) {
        for (const Point& c : rect_corners(rect)) {
            Rational d = point_distance(p, c, m);
            if (!best || *best < d) best = d;
        }
    }
    return *best;
}

Rational region_diameter(const Region& r, Metric m) {
    std::vector<Point> corners;
    for (const Rect& rect : r.rects()) {
        auto cs = rect_corners(rect);
        corners.insert(corners.end(), cs.begin(), cs.end());
    }
    Rational best = 0;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        for (std::size_t j = i + 1; j < corners.size(); ++j) {
            best = max(best, point_distance(corners[i], corners[j], m));
        }
    }
    return best;
}

Region region_expand(const Region& r, const Rational& eps) {
    if (eps.sign() <= 0) {
        throw std::invalid_argument("region_expand: eps must be positive");
    }
    std::vector<Rect> rects;
    rects.reserve(r.rects().size());
    for (const Rect& rect : r.rects()) {
        rects.emplace_back(rect.x_lo - eps, rect.x_hi + eps, rect.y_lo - eps, rect.y_hi + eps);
    }
    return Region(std::move(rects));
}

} // namespace pointfree
