#ifndef POINTFREE_DISTANCE_HPP
#define POINTFREE_DISTANCE_HPP

#include "pointfree/riesz.hpp"
#include "pointfree/vietoris.hpp"

#include <functional>
#include <optional>

namespace pointfree {

/// Metric for distance queries. L2 is true Euclidean: its interval
/// endpoints are square-root enclosures of the exact squared values, never
/// single rationals.
enum class DistMetric { L1, L2Sq, L2 };

/// Rigorous bracket for the distance from a query point to the set a basic
/// open describes; every member's exact distance lands inside it.
struct DistanceInterval {
    Rational lo;
    Rational hi;
    DistMetric metric;
};

/// The observable face of the generic set: all downstream consumers see
/// only distance queries, never points.
struct DistanceOracle {
    std::function<DistanceInterval(const Point&)> query;
    DistMetric metric;
};

/// Term computing the distance from the coordinates to a fixed point:
/// |x - xz| + |y - yz| for L1, (x - xz)^2 + (y - yz)^2 for L2Sq.
/// LInf is rejected.
RieszTerm distance_term(const Point& z, Metric m);

/// For a normal-form open: lo is the exact distance from z to the union of
/// the positives, hi the least over positives of the exact sup of the
/// distance over that positive (a member must meet it). Both endpoints are
/// exact rationals for L1/L2Sq; for L2 they pass through sqrt enclosures
/// at tolerance tol. Throws std::invalid_argument for non-normal opens.
DistanceInterval forced_distance_interval(const BasicOpen& u, const Point& z, DistMetric m,
                                          const Rational& tol);

/// Canonical oracle of a normal-form open.
DistanceOracle forced_distance_oracle(BasicOpen u, DistMetric m, Rational tol);

/// Threshold scan recovering positive information from a distance oracle:
/// grid points of the window whose queried upper bound is below 2*eps
/// contribute their pitch-sized cell. Horizontally adjacent cells are
/// coalesced into runs. nullopt when no cell qualifies.
std::optional<Region> recover_positive_info(const DistanceOracle& oracle, const Rect& window,
                                            const Rational& pitch, const Rational& eps);

} // namespace pointfree

#endif
