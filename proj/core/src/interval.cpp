#include "pointfree/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace pointfree {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) {
        throw std::invalid_argument("Interval: lo > hi");
    }
}

Interval add(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval neg(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval sub(const Interval& a, const Interval& b) { return add(a, neg(b)); }

Interval scale(const Rational& q, const Interval& a) {
    if (q.sign() >= 0) {
        return Interval(q * a.lo, q * a.hi);
    }
    return Interval(q * a.hi, q * a.lo);
}

Interval mul(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval join(const Interval& a, const Interval& b) {
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi));
}

Interval meet(const Interval& a, const Interval& b) {
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi));
}

Interval square(const Interval& a) {
    const Rational s1 = a.lo * a.lo;
    const Rational s2 = a.hi * a.hi;
    if (a.lo.sign() <= 0 && a.hi.sign() >= 0) {
        return Interval(0, max(s1, s2));
    }
    return Interval(min(s1, s2), max(s1, s2));
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const Rational& lo = max(a.lo, b.lo);
    const Rational& hi = min(a.hi, b.hi);
    if (hi < lo) {
        return std::nullopt;
    }
    return Interval(lo, hi);
}

namespace {

// Exact integer square root test.
bool perfect_square(const BigInt& n, BigInt& root) {
    if (n.sign() < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

} // namespace

Interval sqrt_enclosure(const Rational& q, const Rational& tol) {
    if (q.sign() < 0) {
        throw std::invalid_argument("sqrt_enclosure: negative input");
    }
    if (tol.sign() <= 0) {
        throw std::invalid_argument("sqrt_enclosure: tolerance must be positive");
    }
    if (q.is_zero()) {
        return Interval(0, 0);
    }
    BigInt rn, rd;
    if (perfect_square(q.num(), rn) && perfect_square(q.den(), rd)) {
        Rational root(rn, rd);
        return Interval(root, root);
    }
    // Bisection on x^2 = q; monotone convergence, halving the bracket each step.
    Rational lo = 0;
    Rational hi = max(Rational(1), q);
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= q) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Interval(lo, hi);
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << "[" << iv.lo << ", " << iv.hi << "]";
}

} // namespace pointfree
