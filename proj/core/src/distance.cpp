#include "pointfree/distance.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace pointfree {

RieszTerm distance_term(const Point& z, Metric m) {
    const RieszTerm dx = RieszTerm::x() - RieszTerm::constant(z.x);
    const RieszTerm dy = RieszTerm::y() - RieszTerm::constant(z.y);
    switch (m) {
        case Metric::L1:
            return abs(dx) + abs(dy);
        case Metric::L2Sq:
            return RieszTerm::square(dx) + RieszTerm::square(dy);
        case Metric::LInf:
            throw std::invalid_argument("distance_term: LInf is not a distance-term metric");
    }
    throw std::logic_error("distance_term: bad metric");
}

DistanceInterval forced_distance_interval(const BasicOpen& u, const Point& z, DistMetric m,
                                          const Rational& tol) {
    if (!u.normal) {
        throw std::invalid_argument("forced_distance_interval: open must be in normal form");
    }
    const Metric base = m == DistMetric::L1 ? Metric::L1 : Metric::L2Sq;
    // A member lies inside the union (so no closer than the union) and
    // meets every positive (so some point is within the nearest positive's
    // sup distance).
    Rational lo = region_distance(u.negative, z, base);
    std::optional<Rational> hi;
    for (const Region& pos : u.positive) {
        Rational s = region_sup_distance(pos, z, base);
        if (!hi || s < *hi) hi = s;
    }
    if (m != DistMetric::L2) {
        return DistanceInterval{lo, *hi, m};
    }
    if (tol.sign() <= 0) {
        throw std::invalid_argument("forced_distance_interval: tolerance must be positive");
    }
    return DistanceInterval{sqrt_enclosure(lo, tol).lo, sqrt_enclosure(*hi, tol).hi,
                            DistMetric::L2};
}

DistanceOracle forced_distance_oracle(BasicOpen u, DistMetric m, Rational tol) {
    if (!u.normal) {
        throw std::invalid_argument("forced_distance_oracle: open must be in normal form");
    }
    auto query = [u = std::move(u), m, tol = std::move(tol)](const Point& p) {
        return forced_distance_interval(u, p, m, tol);
    };
    return DistanceOracle{std::move(query), m};
}

std::optional<Region> recover_positive_info(const DistanceOracle& oracle, const Rect& window,
                                            const Rational& pitch, const Rational& eps) {
    if (pitch.sign() <= 0 || eps.sign() <= 0) {
        throw std::invalid_argument("recover_positive_info: pitch and eps must be positive");
    }
    const Rational threshold = 2 * eps;
    const Rational half = pitch / 2;
    std::vector<Rect> cells;
    for (Rational y = window.y_lo; y <= window.y_hi; y += pitch) {
        std::optional<Rational> run_start;
        Rational run_end = 0;
        auto flush = [&]() {
            if (run_start) {
                cells.emplace_back(*run_start - half, run_end + half, y - half, y + half);
                run_start.reset();
            }
        };
        for (Rational x = window.x_lo; x <= window.x_hi; x += pitch) {
            DistanceInterval d = oracle.query(Point{x, y});
            if (d.hi < threshold) {
                if (!run_start) run_start = x;
                run_end = x;
            } else {
                flush();
            }
        }
        flush();
    }
    if (cells.empty()) {
        return std::nullopt;
    }
    return Region(std::move(cells));
}

} // namespace pointfree
