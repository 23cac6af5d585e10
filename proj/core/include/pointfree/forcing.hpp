#ifndef POINTFREE_FORCING_HPP
#define POINTFREE_FORCING_HPP

#include "pointfree/riesz.hpp"
#include "pointfree/vietoris.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pointfree {

/// Rational interval that provably contains sup(term) in every extension
/// compatible with the basic open it was computed from.
struct ForcedInterval {
    Rational lo;
    Rational hi;
    BasicOpen open;
    RieszTerm term;
};

/// A basic open forces r = s exactly when the two terms agree on its
/// negative region; this delegates to the region-level equality decision.
EqVerdict forces_equal(const BasicOpen& u, const RieszTerm& r, const RieszTerm& s,
                       const Rational& tol, int max_depth = kDefaultMaxDepth,
                       std::uint64_t seed = 0);

/// For a normal-form open: lo is the best lower bound over the positives
/// of inf(term), hi the upper bound of sup(term) over their union, each
/// side certified to within tol. Every member's max term value lands in
/// [lo, hi]. Throws std::invalid_argument for non-normal opens.
ForcedInterval forced_sup_interval(const BasicOpen& u, const RieszTerm& term,
                                   const Rational& tol, int max_depth = kDefaultMaxDepth);

/// Covers `a` with pairwise disjoint boxes on which `term` varies less
/// than eps (shrinking the separated boxes until the enclosure width
/// complies), so the resulting normal-form open forces sup(term) into an
/// interval of width < eps (+ enclosure slack).
BasicOpen normability_refine(const FinitePointSet& a, const RieszTerm& term,
                             const Rational& eps);

/// Outcome of evaluating the join of the rects' bump terms at a point:
/// either the index of a rect certified to contain the point, or outside
/// with the join value <= 0. The point evaluation r -> r(z) is a lattice
/// homomorphism, so a positive join forces a positive bump.
struct HomCheckResult {
    std::optional<std::size_t> index;
    Rational join_value;

    bool outside() const { return !index.has_value(); }
};

HomCheckResult point_eval_hom_check(const Point& z, const std::vector<Rect>& rects);

} // namespace pointfree

#endif
