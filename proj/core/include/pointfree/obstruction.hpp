#ifndef POINTFREE_OBSTRUCTION_HPP
#define POINTFREE_OBSTRUCTION_HPP

#include "pointfree/vietoris.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace pointfree {

/// Rectangular enclosure of a plane point; degenerate (width zero) when
/// the point is known exactly.
struct PointEnclosure {
    Interval x;
    Interval y;

    bool exact() const { return x.is_point() && y.is_point(); }
    Point as_point() const;
    Point midpoint() const { return Point{x.mid(), y.mid()}; }
};

/// Tan-half-angle circle parametrization: t = 0 is the rightmost point,
/// t = 1 the topmost, nullopt (the infinite parameter) the leftmost; the
/// radius is carried as its square so rational-radius circles stay exact.
struct CircleParam {
    Point center;
    Rational radius_sq;
    std::optional<Rational> t; // nullopt = infinity

    CircleParam(Point c, Rational r_sq, std::optional<Rational> param);
};

/// Exact rational point when the radius is rational (radius_sq a perfect
/// rational square); otherwise a sqrt-enclosure pair at tolerance tol.
PointEnclosure circle_point(const CircleParam& c, const Rational& tol = Rational(1, 1000000));

/// Evidence that a locally consistent square-root selection around a
/// circle does not close up: the tracked branch returns to the antipode of
/// its start. Valid when the recorded endpoint separation provably exceeds
/// the largest single step the branch ever took.
struct MonodromyCertificate {
    PointEnclosure start_root;
    PointEnclosure end_root;
    Interval separation;        ///< encloses the exact |end - start|
    Rational consistency_bound; ///< upper bound on the largest per-step movement
    std::size_t steps;
    std::vector<PointEnclosure> path; ///< selected root per step, for rendering

    bool valid() const { return consistency_bound < separation.lo; }
};

/// Tracks the square-root branch around the circle of radius `radius_sq`
/// centered at the origin: at each of `steps` roughly equally spaced
/// parameters both roots are enclosed and the one provably closer to the
/// previous selection is kept (for steps >= 8 consecutive branch movement
/// stays below the 2*sqrt(radius_sq) root separation, so the choice is
/// forced). Throws std::runtime_error when the enclosures are too wide to
/// disambiguate at the given tolerance.
MonodromyCertificate sqrt_monodromy(const Rational& radius_sq, std::size_t steps,
                                    const Rational& tol);

/// Antipodal-pair sweep configuration: the closed disc of radius iota with
/// the target point as its rightmost point must fit inside that point's
/// separated box, which pins 2*iota below the box half-width.
struct SweepConfig {
    FinitePointSet base;
    std::size_t target_index;
    Rational iota;
    std::size_t steps;

    SweepConfig(FinitePointSet base_points, std::size_t target, Rational radius,
                std::size_t step_count);

    const Point& target() const { return base.points()[target_index]; }
    Point disc_center() const;
};

/// Chooses 0 for the swept point, 1 for its antipode.
using Selector = std::function<int(std::size_t step, const Point& swept, const Point& antipode)>;

struct SweepStep {
    Point swept;
    Point antipode;
    int choice;
};

/// The constraint a selector violated, with enough recorded state to
/// re-verify the violation from scratch: either two adjacent chosen points
/// further apart than the doubled per-step chord bound, or identical
/// first/last choices even though the half-turn swaps the pair labels.
struct SelectorViolation {
    enum class Kind { Discontinuity, Wraparound };
    Kind kind;
    std::size_t step; ///< Discontinuity: between step and step+1; Wraparound: the last step
    Rational threshold_sq;
    std::vector<SweepStep> trace;
};

/// Sweeps antipodal pairs through half a turn of the iota-disc and reports
/// the first violated constraint. One always exists: a selector with no
/// adjacent flip repeats its first choice at the identified endpoint.
SelectorViolation antipodal_sweep(const Selector& selector, const SweepConfig& cfg);

/// Exhaustive check that the sweep constraints are jointly unsatisfiable:
/// no assignment c_0..c_n has every adjacent pair equal and the endpoints
/// different.
struct UnsatRecord {
    unsigned n;
    std::uint64_t assignments_checked;
    std::uint64_t satisfying;
};

inline constexpr unsigned kUnsatMaxN = 24;

UnsatRecord antipodal_unsat(unsigned n);

} // namespace pointfree

#endif
