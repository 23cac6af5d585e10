#ifndef POINTFREE_VIETORIS_HPP
#define POINTFREE_VIETORIS_HPP

#include "pointfree/geometry.hpp"

#include <optional>
#include <vector>

namespace pointfree {

/// Finite non-empty set of plane points with exact pairwise-distinct
/// members. Construction sorts lexicographically and removes exact
/// duplicates, turning any finite enumeration into a genuine finite set.
class FinitePointSet {
public:
    explicit FinitePointSet(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    friend bool operator==(const FinitePointSet& a, const FinitePointSet& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<Point> points_;
};

/// Min pairwise L-infinity distance of the members; positive by the
/// distinctness invariant. Requires at least two points.
Rational min_pairwise_linf(const FinitePointSet& a);

/// Basic open of the hyperspace of finite point sets: a set A belongs when
/// it meets every positive region and is contained in the single negative
/// region. `normal` records whether the negative equals the union of the
/// positives as a point set (decided exactly on construction).
struct BasicOpen {
    std::vector<Region> positive;
    Region negative;
    bool normal;

    BasicOpen(std::vector<Region> positives, Region neg);

    /// Builds the normal form open determined by the positives alone; the
    /// negative is literally their union.
    static BasicOpen normal_form(std::vector<Region> positives);

    Region positive_union() const;
};

bool vietoris_member(const FinitePointSet& a, const BasicOpen& u);

/// Box half-width used for singleton sets, where no pairwise separation
/// distance exists.
inline const Rational kSingletonBoxRadius = 1;

/// Normal-form open around `a` with exactly one positive box per point:
/// open L-inf balls of radius delta/3 for delta the min pairwise L-inf
/// distance (radius 1 for singletons). The closed boxes are pairwise
/// disjoint, which is what the /3 buys over /2.
BasicOpen separated_neighborhood(const FinitePointSet& a);

/// Refines `u` around a member `a` into a normal-form open contained in
/// `u`: positives are every positive of u clipped to the negative, plus
/// the separated box of each point of `a` clipped the same way; the
/// negative is the union of those. Throws std::invalid_argument when a is
/// not a member of u.
BasicOpen normal_form_refinement(const BasicOpen& u, const FinitePointSet& a);

inline const Rational kCompatibleDefaultPitch = Rational(1, 16);

/// Bounded search for a common member of two basic opens: rational points
/// on a pitch-aligned grid inside the pairwise intersections of positives,
/// within both negatives. nullopt means the grid search was exhausted, not
/// that the opens are provably incompatible.
std::optional<FinitePointSet> compatible(const BasicOpen& u, const BasicOpen& v,
                                         const Rational& pitch = kCompatibleDefaultPitch);

} // namespace pointfree

#endif
