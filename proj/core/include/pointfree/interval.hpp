#ifndef POINTFREE_INTERVAL_HPP
#define POINTFREE_INTERVAL_HPP

#include "pointfree/rational.hpp"

#include <iosfwd>
#include <optional>

namespace pointfree {

/// Closed rational interval [lo, hi]. Every operation returns the tightest
/// rational enclosure of the exact image set, so composing them never loses
/// soundness, only sharpness.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);

    static Interval point(const Rational& v) { return Interval(v, v); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

Interval add(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval sub(const Interval& a, const Interval& b);
Interval scale(const Rational& q, const Interval& a);
Interval mul(const Interval& a, const Interval& b);
/// Pointwise max of the two input sets.
Interval join(const Interval& a, const Interval& b);
/// Pointwise min of the two input sets.
Interval meet(const Interval& a, const Interval& b);
Interval square(const Interval& a);

/// Smallest interval containing both arguments (set union hull).
Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }
inline Interval operator*(const Rational& q, const Interval& a) { return scale(q, a); }

/// Rigorous two-sided enclosure of sqrt(q) with hi - lo <= tol and lo >= 0,
/// computed by bisection. Exact (degenerate) for perfect rational squares.
/// Throws std::invalid_argument for q < 0 or tol <= 0.
Interval sqrt_enclosure(const Rational& q, const Rational& tol);

std::ostream& operator<<(std::ostream& os, const Interval& iv);

} // namespace pointfree

#endif
