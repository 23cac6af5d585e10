#include "pointfree/riesz.hpp"

#include <stdexcept>

namespace pointfree {

struct RieszTerm::Node {
    Kind kind;
    Rational factor; // Scale only
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

RieszTerm RieszTerm::one() {
    static const RieszTerm t{std::make_shared<Node>(Node{Kind::One, Rational(), nullptr, nullptr})};
    return t;
}

RieszTerm RieszTerm::x() {
    static const RieszTerm t{std::make_shared<Node>(Node{Kind::X, Rational(), nullptr, nullptr})};
    return t;
}

RieszTerm RieszTerm::y() {
    static const RieszTerm t{std::make_shared<Node>(Node{Kind::Y, Rational(), nullptr, nullptr})};
    return t;
}

RieszTerm RieszTerm::constant(const Rational& q) { return scale(q, one()); }

RieszTerm RieszTerm::add(const RieszTerm& a, const RieszTerm& b) {
    return RieszTerm{std::make_shared<Node>(Node{Kind::Add, Rational(), a.node_, b.node_})};
}

RieszTerm RieszTerm::scale(const Rational& q, const RieszTerm& t) {
    return RieszTerm{std::make_shared<Node>(Node{Kind::Scale, q, t.node_, nullptr})};
}

RieszTerm RieszTerm::join(const RieszTerm& a, const RieszTerm& b) {
    return RieszTerm{std::make_shared<Node>(Node{Kind::Join, Rational(), a.node_, b.node_})};
}

RieszTerm RieszTerm::meet(const RieszTerm& a, const RieszTerm& b) {
    return RieszTerm{std::make_shared<Node>(Node{Kind::Meet, Rational(), a.node_, b.node_})};
}

RieszTerm RieszTerm::square(const RieszTerm& t) {
    return RieszTerm{std::make_shared<Node>(Node{Kind::Square, Rational(), t.node_, nullptr})};
}

RieszTerm::Kind RieszTerm::kind() const { return node_->kind; }

RieszTerm RieszTerm::lhs() const {
    if (!node_->a) throw std::logic_error("RieszTerm: no lhs");
    return RieszTerm{node_->a};
}

RieszTerm RieszTerm::rhs() const {
    if (!node_->b) throw std::logic_error("RieszTerm: no rhs");
    return RieszTerm{node_->b};
}

RieszTerm RieszTerm::arg() const {
    if (!node_->a) throw std::logic_error("RieszTerm: no arg");
    return RieszTerm{node_->a};
}

const Rational& RieszTerm::factor() const {
    if (node_->kind != Kind::Scale) throw std::logic_error("RieszTerm: not a Scale node");
    return node_->factor;
}

std::size_t RieszTerm::depth() const {
    switch (kind()) {
        case Kind::One:
        case Kind::X:
        case Kind::Y:
            return 1;
        case Kind::Scale:
        case Kind::Square:
            return 1 + arg().depth();
        case Kind::Add:
        case Kind::Join:
        case Kind::Meet: {
            std::size_t da = lhs().depth(), db = rhs().depth();
            return 1 + (da > db ? da : db);
        }
    }
    throw std::logic_error("RieszTerm: bad kind");
}

std::size_t RieszTerm::node_count() const {
    switch (kind()) {
        case Kind::One:
        case Kind::X:
        case Kind::Y:
            return 1;
        case Kind::Scale:
        case Kind::Square:
            return 1 + arg().node_count();
        case Kind::Add:
        case Kind::Join:
        case Kind::Meet:
            return 1 + lhs().node_count() + rhs().node_count();
    }
    throw std::logic_error("RieszTerm: bad kind");
}

RieszTerm abs(const RieszTerm& t) { return RieszTerm::join(t, -t); }

Rational eval(const RieszTerm& t, const Point& p) {
    switch (t.kind()) {
        case RieszTerm::Kind::One: return 1;
        case RieszTerm::Kind::X: return p.x;
        case RieszTerm::Kind::Y: return p.y;
        case RieszTerm::Kind::Add: return eval(t.lhs(), p) + eval(t.rhs(), p);
        case RieszTerm::Kind::Scale: return t.factor() * eval(t.arg(), p);
        case RieszTerm::Kind::Join: return max(eval(t.lhs(), p), eval(t.rhs(), p));
        case RieszTerm::Kind::Meet: return min(eval(t.lhs(), p), eval(t.rhs(), p));
        case RieszTerm::Kind::Square: {
            Rational v = eval(t.arg(), p);
            return v * v;
        }
    }
    throw std::logic_error("eval: bad term kind");
}

RieszTerm bump_term(const Rect& o) {
    const RieszTerm x = RieszTerm::x();
    const RieszTerm y = RieszTerm::y();
    RieszTerm left = x - RieszTerm::constant(o.x_lo);
    RieszTerm right = RieszTerm::constant(o.x_hi) - x;
    RieszTerm bottom = y - RieszTerm::constant(o.y_lo);
    RieszTerm top = RieszTerm::constant(o.y_hi) - y;
    return RieszTerm::meet(RieszTerm::meet(left, right), RieszTerm::meet(bottom, top));
}

} // namespace pointfree
