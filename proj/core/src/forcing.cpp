#include "pointfree/forcing.hpp"

#include <stdexcept>

namespace pointfree {

EqVerdict forces_equal(const BasicOpen& u, const RieszTerm& r, const RieszTerm& s,
                       const Rational& tol, int max_depth, std::uint64_t seed) {
    return equal_on_region(r, s, u.negative, tol, max_depth, seed);
}

ForcedInterval forced_sup_interval(const BasicOpen& u, const RieszTerm& term,
                                   const Rational& tol, int max_depth) {
    if (!u.normal) {
        throw std::invalid_argument("forced_sup_interval: open must be in normal form");
    }
    // Every member meets each positive, so its max is at least each
    // positive's inf; and it lies inside the union, so its max is at most
    // the union's sup.
    std::optional<Rational> lo;
    for (const Region& pos : u.positive) {
        Interval inf = inf_enclosure(term, pos, tol, max_depth);
        if (!lo || *lo < inf.lo) lo = inf.lo;
    }
    NormCut sup = sup_enclosure(term, u.positive_union(), tol, max_depth);
    Rational hi = sup.sup_enclosure.hi;
    if (hi < *lo) {
        throw std::logic_error("forced_sup_interval: crossed bounds");
    }
    return ForcedInterval{*lo, hi, u, term};
}

namespace {

constexpr int kMaxShrinkSteps = 200;

} // namespace

BasicOpen normability_refine(const FinitePointSet& a, const RieszTerm& term,
                             const Rational& eps) {
    if (eps.sign() <= 0) {
        throw std::invalid_argument("normability_refine: eps must be positive");
    }
    Rational radius =
        a.size() == 1 ? kSingletonBoxRadius : min_pairwise_linf(a) / 3;
    const Rational leaf_tol = eps / 4;
    std::vector<Region> positives;
    positives.reserve(a.size());
    for (const Point& p : a.points()) {
        Rational h = radius;
        int steps = 0;
        while (true) {
            Rect box = Rect::box(p, h);
            if (enclosure(term, box, leaf_tol).width() < eps) {
                positives.emplace_back(box);
                break;
            }
            if (++steps > kMaxShrinkSteps) {
                throw std::runtime_error("normability_refine: shrink cap exceeded");
            }
            h /= 2;
        }
    }
    return BasicOpen::normal_form(std::move(positives));
}

HomCheckResult point_eval_hom_check(const Point& z, const std::vector<Rect>& rects) {
    if (rects.empty()) {
        throw std::invalid_argument("point_eval_hom_check: rect list must be non-empty");
    }
    std::optional<Rational> join_value;
    std::optional<std::size_t> index;
    for (std::size_t i = 0; i < rects.size(); ++i) {
        Rational v = eval(bump_term(rects[i]), z);
        if (!join_value || *join_value < v) join_value = v;
        if (!index && v.sign() > 0) {
            if (!rects[i].contains(z)) {
                throw std::logic_error("point_eval_hom_check: positive bump outside its rect");
            }
            index = i;
        }
    }
    if (!index && join_value->sign() > 0) {
        throw std::logic_error("point_eval_hom_check: positive join without positive bump");
    }
    return HomCheckResult{index, *join_value};
}

} // namespace pointfree
