#include "pointfree/vietoris.hpp"

#include <algorithm>
#include <stdexcept>

namespace pointfree {

FinitePointSet::FinitePointSet(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw std::invalid_argument("FinitePointSet: must be non-empty");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

Rational min_pairwise_linf(const FinitePointSet& a) {
    const auto& ps = a.points();
    if (ps.size() < 2) {
        throw std::invalid_argument("min_pairwise_linf: need at least two points");
    }
    std::optional<Rational> best;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            Rational d = point_distance(ps[i], ps[j], Metric::LInf);
            if (!best || d < *best) best = d;
        }
    }
    return *best;
}

BasicOpen::BasicOpen(std::vector<Region> positives, Region neg)
    : positive(std::move(positives)), negative(std::move(neg)), normal(false) {
    if (positive.empty()) {
        throw std::invalid_argument("BasicOpen: positive list must be non-empty");
    }
    Region u = positive_union();
    normal = region_subset(u, negative) && region_subset(negative, u);
}

BasicOpen BasicOpen::normal_form(std::vector<Region> positives) {
    if (positives.empty()) {
        throw std::invalid_argument("BasicOpen: positive list must be non-empty");
    }
    Region neg = region_union(positives);
    BasicOpen u(std::move(positives), std::move(neg));
    u.normal = true; // negative is the union by construction
    return u;
}

Region BasicOpen::positive_union() const { return region_union(positive); }

bool vietoris_member(const FinitePointSet& a, const BasicOpen& u) {
    for (const Region& pos : u.positive) {
        bool met = std::any_of(a.points().begin(), a.points().end(),
                               [&](const Point& p) { return pos.member(p); });
        if (!met) return false;
    }
    return std::all_of(a.points().begin(), a.points().end(),
                       [&](const Point& p) { return u.negative.member(p); });
}

BasicOpen separated_neighborhood(const FinitePointSet& a) {
    Rational radius = a.size() == 1 ? kSingletonBoxRadius : min_pairwise_linf(a) / 3;
    std::vector<Region> positives;
    positives.reserve(a.size());
    for (const Point& p : a.points()) {
        positives.emplace_back(Rect::box(p, radius));
    }
    return BasicOpen::normal_form(std::move(positives));
}

BasicOpen normal_form_refinement(const BasicOpen& u, const FinitePointSet& a) {
    if (!vietoris_member(a, u)) {
        throw std::invalid_argument("normal_form_refinement: the point set is not a member of the open");
    }
    std::vector<Region> positives;
    for (const Region& pos : u.positive) {
        auto clipped = region_intersect(pos, u.negative);
        if (!clipped) {
            // impossible: a witnesses pos ∩ negative
            throw std::logic_error("normal_form_refinement: positive disjoint from negative");
        }
        positives.push_back(std::move(*clipped));
    }
    BasicOpen sep = separated_neighborhood(a);
    for (const Region& box : sep.positive) {
        auto clipped = region_intersect(box, u.negative);
        if (!clipped) {
            throw std::logic_error("normal_form_refinement: separation box disjoint from negative");
        }
        positives.push_back(std::move(*clipped));
    }
    return BasicOpen::normal_form(std::move(positives));
}

namespace {

// Grid point nearest the rect center (ties toward the smaller multiple),
// falling back to a lexicographic scan of all grid points inside the rect.
std::optional<Point> grid_point_in_region(const Region& r, const Rational& pitch) {
    auto snap = [&](const Rational& v) {
        // nearest multiple of pitch; k = floor(v/pitch + 1/2)
        return Rational(floor(v / pitch + Rational(1, 2))) * pitch;
    };
    for (const Rect& rect : r.rects()) {
        Point c = rect.center();
        Point snapped{snap(c.x), snap(c.y)};
        if (rect.contains(snapped)) {
            return snapped;
        }
    }
    for (const Rect& rect : r.rects()) {
        BigInt kx0 = floor(rect.x_lo / pitch) + 1;
        BigInt ky0 = floor(rect.y_lo / pitch) + 1;
        for (BigInt kx = kx0; Rational(kx) * pitch < rect.x_hi; ++kx) {
            for (BigInt ky = ky0; Rational(ky) * pitch < rect.y_hi; ++ky) {
                Point p{Rational(kx) * pitch, Rational(ky) * pitch};
                if (rect.contains(p)) {
                    return p;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<FinitePointSet> compatible(const BasicOpen& u, const BasicOpen& v,
                                         const Rational& pitch) {
    if (pitch.sign() <= 0) {
        throw std::invalid_argument("compatible: pitch must be positive");
    }
    auto both = region_intersect(u.negative, v.negative);
    if (!both) {
        return std::nullopt;
    }

    std::vector<Point> witness;
    std::vector<bool> covered_u(u.positive.size(), false);
    std::vector<bool> covered_v(v.positive.size(), false);
    auto mark = [&](const Point& p) {
        for (std::size_t i = 0; i < u.positive.size(); ++i) {
            if (u.positive[i].member(p)) covered_u[i] = true;
        }
        for (std::size_t j = 0; j < v.positive.size(); ++j) {
            if (v.positive[j].member(p)) covered_v[j] = true;
        }
        witness.push_back(p);
    };

    for (std::size_t i = 0; i < u.positive.size(); ++i) {
        if (covered_u[i]) continue;
        auto qi = region_intersect(u.positive[i], *both);
        if (!qi) return std::nullopt;
        // Prefer a point that also serves an uncovered positive of v.
        std::optional<Point> found;
        for (std::size_t j = 0; j < v.positive.size() && !found; ++j) {
            if (covered_v[j]) continue;
            if (auto pair_region = region_intersect(*qi, v.positive[j])) {
                found = grid_point_in_region(*pair_region, pitch);
            }
        }
        if (!found) {
            found = grid_point_in_region(*qi, pitch);
        }
        if (!found) return std::nullopt;
        mark(*found);
    }
    for (std::size_t j = 0; j < v.positive.size(); ++j) {
        if (covered_v[j]) continue;
        auto qj = region_intersect(v.positive[j], *both);
        if (!qj) return std::nullopt;
        auto found = grid_point_in_region(*qj, pitch);
        if (!found) return std::nullopt;
        mark(*found);
    }

    FinitePointSet a(std::move(witness));
    if (!vietoris_member(a, u) || !vietoris_member(a, v)) {
        return std::nullopt; // grid landed outside a negative; treat as exhausted
    }
    return a;
}

} // namespace pointfree
