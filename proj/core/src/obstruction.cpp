#include "pointfree/obstruction.hpp"

#include <stdexcept>

namespace pointfree {

Point PointEnclosure::as_point() const {
    if (!exact()) {
        throw std::logic_error("PointEnclosure: not an exact point");
    }
    return Point{x.lo, y.lo};
}

CircleParam::CircleParam(Point c, Rational r_sq, std::optional<Rational> param)
    : center(std::move(c)), radius_sq(std::move(r_sq)), t(std::move(param)) {
    if (radius_sq.sign() <= 0) {
        throw std::invalid_argument("CircleParam: radius_sq must be positive");
    }
}

namespace {

// Unit-circle point of the tan-half-angle parameter; exact rational.
Point unit_circle_point(const std::optional<Rational>& t) {
    if (!t) {
        return Point{-1, 0};
    }
    Rational d = 1 + *t * *t;
    return Point{(1 - *t * *t) / d, (2 * *t) / d};
}

bool perfect_rational_square(const Rational& q, Rational& root) {
    if (q.sign() < 0) return false;
    BigInt rn = boost::multiprecision::sqrt(q.num());
    BigInt rd = boost::multiprecision::sqrt(q.den());
    if (rn * rn == q.num() && rd * rd == q.den()) {
        root = Rational(rn, rd);
        return true;
    }
    return false;
}

Interval exact_or_sqrt(const Rational& sq, const Rational& tol) {
    Rational root;
    if (perfect_rational_square(sq, root)) {
        return Interval(root, root);
    }
    return sqrt_enclosure(sq, tol);
}

// Squared euclidean distance between two point enclosures, as an interval.
Interval dist_sq(const PointEnclosure& a, const PointEnclosure& b) {
    return add(square(sub(a.x, b.x)), square(sub(a.y, b.y)));
}

// Outward sqrt of a non-negative interval.
Interval sqrt_interval(const Interval& sq, const Rational& tol) {
    return Interval(sqrt_enclosure(sq.lo, tol).lo, sqrt_enclosure(sq.hi, tol).hi);
}

} // namespace

PointEnclosure circle_point(const CircleParam& c, const Rational& tol) {
    Point u = unit_circle_point(c.t);
    Interval r = exact_or_sqrt(c.radius_sq, tol);
    return PointEnclosure{add(Interval::point(c.center.x), scale(u.x, r)),
                          add(Interval::point(c.center.y), scale(u.y, r))};
}

namespace {

// Rational point on the circle of rational radius at fraction k/steps of a
// full turn (approximately; the quarter arcs are swept uniformly in the
// tan-half parameter, which distorts angles by at most a factor of two).
Point circle_sequence_point(const Rational& radius, std::size_t k, std::size_t steps) {
    Rational s = Rational(4 * static_cast<long long>(k), static_cast<long long>(steps));
    BigInt whole = floor(s);
    int quadrant = static_cast<int>(whole % 4);
    Rational t = s - Rational(whole);
    Point u = unit_circle_point(t);
    Point rotated;
    switch (quadrant) {
        case 0: rotated = u; break;
        case 1: rotated = Point{-u.y, u.x}; break;
        case 2: rotated = Point{-u.x, -u.y}; break;
        default: rotated = Point{u.y, -u.x}; break;
    }
    return Point{radius * rotated.x, radius * rotated.y};
}

// Both square roots of w, given |w| = modulus exactly (w on that circle).
// Root formulas have non-negative radicands by construction.
std::pair<PointEnclosure, PointEnclosure> roots_of(const Point& w, const Rational& modulus,
                                                   const Rational& tol) {
    Interval re = exact_or_sqrt((modulus + w.x) / 2, tol);
    Interval im = exact_or_sqrt((modulus - w.x) / 2, tol);
    if (w.y.sign() < 0) {
        im = neg(im);
    }
    PointEnclosure plus{re, im};
    PointEnclosure minus{neg(re), neg(im)};
    return {plus, minus};
}

} // namespace

MonodromyCertificate sqrt_monodromy(const Rational& radius_sq, std::size_t steps,
                                    const Rational& tol) {
    if (steps < 8) {
        throw std::invalid_argument("sqrt_monodromy: need at least 8 steps");
    }
    if (radius_sq.sign() <= 0 || tol.sign() <= 0) {
        throw std::invalid_argument("sqrt_monodromy: radius_sq and tol must be positive");
    }
    const Rational& circle_radius = radius_sq; // roots then have modulus sqrt(radius_sq)

    MonodromyCertificate cert;
    cert.steps = steps;
    cert.consistency_bound = 0;
    cert.path.reserve(steps + 1);

    PointEnclosure prev;
    for (std::size_t k = 0; k <= steps; ++k) {
        Point w = circle_sequence_point(circle_radius, k, steps);
        auto [plus, minus] = roots_of(w, circle_radius, tol);
        PointEnclosure chosen;
        if (k == 0) {
            chosen = plus; // branch starts at the root with non-negative real part
        } else {
            Interval d_plus = dist_sq(plus, prev);
            Interval d_minus = dist_sq(minus, prev);
            if (d_plus.hi < d_minus.lo) {
                chosen = plus;
            } else if (d_minus.hi < d_plus.lo) {
                chosen = minus;
            } else {
                throw std::runtime_error(
                    "sqrt_monodromy: root enclosures too wide to disambiguate; decrease tol");
            }
            Rational movement = sqrt_interval(dist_sq(chosen, prev), tol).hi;
            cert.consistency_bound = max(cert.consistency_bound, movement);
        }
        cert.path.push_back(chosen);
        prev = chosen;
    }

    cert.start_root = cert.path.front();
    cert.end_root = cert.path.back();
    cert.separation = sqrt_interval(dist_sq(cert.start_root, cert.end_root), tol);
    return cert;
}

SweepConfig::SweepConfig(FinitePointSet base_points, std::size_t target, Rational radius,
                         std::size_t step_count)
    : base(std::move(base_points)), target_index(target), iota(std::move(radius)),
      steps(step_count) {
    if (target_index >= base.size()) {
        throw std::invalid_argument("SweepConfig: target index out of range");
    }
    if (iota.sign() <= 0) {
        throw std::invalid_argument("SweepConfig: iota must be positive");
    }
    if (steps < 8) {
        throw std::invalid_argument("SweepConfig: need at least 8 steps");
    }
    Rational box_half_width =
        base.size() == 1 ? kSingletonBoxRadius : min_pairwise_linf(base) / 3;
    if (!(2 * iota < box_half_width)) {
        throw std::invalid_argument(
            "SweepConfig: the iota disc does not fit inside the target's separated box");
    }
}

Point SweepConfig::disc_center() const {
    const Point& z0 = target();
    return Point{z0.x - iota, z0.y};
}

SelectorViolation antipodal_sweep(const Selector& selector, const SweepConfig& cfg) {
    const Point c = cfg.disc_center();
    const std::size_t n = cfg.steps;

    // Swept point at angle fraction k/n of a half turn, plus its antipode.
    auto pair_at = [&](std::size_t k) {
        Point offset = circle_sequence_point(cfg.iota, k, 2 * n);
        Point swept{c.x + offset.x, c.y + offset.y};
        Point antipode{2 * c.x - swept.x, 2 * c.y - swept.y};
        return std::pair<Point, Point>{swept, antipode};
    };

    std::vector<SweepStep> trace;
    trace.reserve(n + 1);
    Rational max_chord_sq = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        auto [swept, antipode] = pair_at(k);
        if (k > 0) {
            max_chord_sq = max(max_chord_sq, point_distance(swept, trace.back().swept, Metric::L2Sq));
        }
        int choice = selector(k, swept, antipode);
        if (choice != 0 && choice != 1) {
            throw std::invalid_argument("antipodal_sweep: selector must return 0 or 1");
        }
        trace.push_back(SweepStep{swept, antipode, choice});
    }
    const Rational threshold_sq = 4 * max_chord_sq; // (doubled chord bound)^2

    auto chosen = [&](const SweepStep& s) { return s.choice == 0 ? s.swept : s.antipode; };
    for (std::size_t k = 0; k < n; ++k) {
        Rational d = point_distance(chosen(trace[k]), chosen(trace[k + 1]), Metric::L2Sq);
        if (d > threshold_sq) {
            return SelectorViolation{SelectorViolation::Kind::Discontinuity, k, threshold_sq,
                                     std::move(trace)};
        }
    }
    // No adjacent flip, so the last choice equals the first; but the final
    // pair is the first with labels swapped, so agreeing labels pick
    // antipodal points for the same open.
    if (trace.front().choice != trace.back().choice) {
        throw std::logic_error("antipodal_sweep: continuous trace with flipped endpoints");
    }
    return SelectorViolation{SelectorViolation::Kind::Wraparound, n, threshold_sq,
                             std::move(trace)};
}

UnsatRecord antipodal_unsat(unsigned n) {
    if (n < 1) {
        throw std::invalid_argument("antipodal_unsat: n must be at least 1");
    }
    if (n > kUnsatMaxN) {
        throw std::invalid_argument("antipodal_unsat: n exceeds the brute-force cap");
    }
    const std::uint64_t total = std::uint64_t(1) << (n + 1);
    std::uint64_t satisfying = 0;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        bool adjacent_equal = true;
        for (unsigned k = 0; k < n && adjacent_equal; ++k) {
            adjacent_equal = ((bits >> k) & 1) == ((bits >> (k + 1)) & 1);
        }
        const bool endpoints_differ = ((bits >> 0) & 1) != ((bits >> n) & 1);
        if (adjacent_equal && endpoints_differ) {
            ++satisfying;
        }
    }
    return UnsatRecord{n, total, satisfying};
}

} // namespace pointfree
