#include "pointfree/riesz.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

// Range computation for terms over a box runs two sound evaluations in
// lockstep and intersects them:
//   - plain structural interval arithmetic, and
//   - an affine-form pass (first-order forms with interval remainders)
//     whose remainder symbols are hash-consed on the normalized argument
//     form, so syntactically different occurrences of the same lattice or
//     square argument cancel exactly. This is what lets identities like
//     (r ∧ s) + (r ∨ s) = r + s certify at tolerance 1e-6 without
//     subdividing to astronomically many boxes.
// Subdivision on top of the per-box evaluation then handles genuine
// nonlinearity; children are clipped to ancestor bounds, which keeps the
// reported width monotone in the depth limit.

namespace pointfree {

namespace {

constexpr std::size_t kEnclosureSplitBudget = 20000;
constexpr std::size_t kExtremumSplitBudget = 100000;
constexpr std::size_t kEqualitySplitBudget = 20000;
constexpr int kProbesPerRect = 16;

using LinTerms = std::vector<std::pair<int, Rational>>; // sorted by symbol id

struct AffineForm {
    Rational c0;
    LinTerms lin;

    Rational rad() const {
        Rational r = 0;
        for (const auto& [sym, coeff] : lin) r += abs(coeff);
        return r;
    }
    Interval range() const {
        Rational r = rad();
        return Interval(c0 - r, c0 + r);
    }
};

AffineForm af_const(Rational v) { return AffineForm{std::move(v), {}}; }

AffineForm af_add(const AffineForm& a, const AffineForm& b) {
    AffineForm out;
    out.c0 = a.c0 + b.c0;
    out.lin.reserve(a.lin.size() + b.lin.size());
    std::size_t i = 0, j = 0;
    while (i < a.lin.size() || j < b.lin.size()) {
        if (j == b.lin.size() || (i < a.lin.size() && a.lin[i].first < b.lin[j].first)) {
            out.lin.push_back(a.lin[i++]);
        } else if (i == a.lin.size() || b.lin[j].first < a.lin[i].first) {
            out.lin.push_back(b.lin[j++]);
        } else {
            Rational c = a.lin[i].second + b.lin[j].second;
            if (!c.is_zero()) out.lin.emplace_back(a.lin[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

AffineForm af_scale(const Rational& q, const AffineForm& a) {
    if (q.is_zero()) return af_const(0);
    AffineForm out;
    out.c0 = q * a.c0;
    out.lin.reserve(a.lin.size());
    for (const auto& [sym, coeff] : a.lin) out.lin.emplace_back(sym, q * coeff);
    return out;
}

AffineForm af_sub(const AffineForm& a, const AffineForm& b) { return af_add(a, af_scale(-1, b)); }

struct SymKey {
    int tag; // 0: |arg|, 1: (arg)^2
    Rational c0;
    LinTerms lin;

    friend bool operator<(const SymKey& a, const SymKey& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.c0 != b.c0) return a.c0 < b.c0;
        if (a.lin.size() != b.lin.size()) return a.lin.size() < b.lin.size();
        for (std::size_t i = 0; i < a.lin.size(); ++i) {
            if (a.lin[i].first != b.lin[i].first) return a.lin[i].first < b.lin[i].first;
            if (a.lin[i].second != b.lin[i].second) return a.lin[i].second < b.lin[i].second;
        }
        return false;
    }
};

class SymbolTable {
public:
    int intern(SymKey key) {
        auto [it, inserted] = ids_.emplace(std::move(key), next_);
        if (inserted) ++next_;
        return it->second;
    }

private:
    std::map<SymKey, int> ids_;
    int next_ = 2; // 0 and 1 are the box coordinates
};

struct PairVal {
    Interval iv;
    AffineForm af;
};

// Sign-and-scale normalization: returns (lambda, normalized) with
// lambda > 0, original = sign * lambda * normalized, and the leading
// linear coefficient of `normalized` equal to +1. Only called with
// non-empty lin.
struct Normalized {
    Rational lambda;
    int sign;
    AffineForm form;
};

Normalized normalize(const AffineForm& a) {
    const Rational& lead = a.lin.front().second;
    Normalized n;
    n.sign = lead.sign();
    n.lambda = abs(lead);
    n.form = af_scale(Rational(n.sign) / n.lambda, a);
    return n;
}

// Enclosure of |arg| as an affine form. Decisions are made from the pure
// affine range so identical argument forms always take identical branches
// and share remainder symbols.
AffineForm af_abs(const AffineForm& arg, SymbolTable& syms) {
    if (arg.lin.empty()) return af_const(abs(arg.c0));
    Normalized n = normalize(arg);
    Interval rng = n.form.range();
    if (rng.lo.sign() >= 0) return af_scale(Rational(n.sign), arg);
    if (rng.hi.sign() <= 0) return af_scale(Rational(-n.sign), arg);
    Rational m = max(-rng.lo, rng.hi); // |normalized| ∈ [0, m]
    int sym = syms.intern(SymKey{0, n.form.c0, n.form.lin});
    Rational half = m / 2;
    AffineForm out;
    out.c0 = n.lambda * half;
    out.lin.emplace_back(sym, n.lambda * half);
    return out;
}

AffineForm af_square(const AffineForm& arg, SymbolTable& syms) {
    if (arg.lin.empty()) return af_const(arg.c0 * arg.c0);
    Normalized n = normalize(arg);
    const Rational c = n.form.c0;
    AffineForm linear = n.form;
    linear.c0 = 0; // pure linear part, leading coefficient +1
    Rational r = linear.rad();
    Rational r2 = r * r; // (linear)^2 ∈ [0, r^2]
    int sym = syms.intern(SymKey{1, Rational(0), linear.lin});
    AffineForm quad;
    quad.c0 = r2 / 2;
    quad.lin.emplace_back(sym, r2 / 2);
    AffineForm out = af_add(af_add(af_const(c * c), af_scale(2 * c, linear)), quad);
    return af_scale(n.lambda * n.lambda, out);
}

class BoxEvaluator {
public:
    explicit BoxEvaluator(const Rect& box) {
        Rational xm = (box.x_lo + box.x_hi) / 2;
        Rational xr = (box.x_hi - box.x_lo) / 2;
        Rational ym = (box.y_lo + box.y_hi) / 2;
        Rational yr = (box.y_hi - box.y_lo) / 2;
        x_.iv = box.x_range();
        x_.af = AffineForm{xm, {{0, xr}}};
        y_.iv = box.y_range();
        y_.af = AffineForm{ym, {{1, yr}}};
    }

    PairVal eval(const RieszTerm& t) {
        auto it = memo_.find(t.node_id());
        if (it != memo_.end()) return it->second;
        PairVal v = compute(t);
        memo_.emplace(t.node_id(), v);
        return v;
    }

    Interval range(const RieszTerm& t) {
        PairVal v = eval(t);
        auto tight = intersect(v.iv, v.af.range());
        if (!tight) throw std::logic_error("enclosure: disjoint sound bounds");
        return *tight;
    }

private:
    PairVal compute(const RieszTerm& t) {
        using K = RieszTerm::Kind;
        switch (t.kind()) {
            case K::One: return {Interval(1, 1), af_const(1)};
            case K::X: return x_;
            case K::Y: return y_;
            case K::Add: {
                PairVal a = eval(t.lhs()), b = eval(t.rhs());
                return {add(a.iv, b.iv), af_add(a.af, b.af)};
            }
            case K::Scale: {
                PairVal a = eval(t.arg());
                return {scale(t.factor(), a.iv), af_scale(t.factor(), a.af)};
            }
            case K::Join: {
                PairVal a = eval(t.lhs()), b = eval(t.rhs());
                return {join(a.iv, b.iv), af_lattice(a.af, b.af, true)};
            }
            case K::Meet: {
                PairVal a = eval(t.lhs()), b = eval(t.rhs());
                return {meet(a.iv, b.iv), af_lattice(a.af, b.af, false)};
            }
            case K::Square: {
                PairVal a = eval(t.arg());
                return {square(a.iv), af_square(a.af, syms_)};
            }
        }
        throw std::logic_error("enclosure: bad term kind");
    }

    // max(a,b) = (a + b + |a-b|)/2, min flips the sign of the |a-b| term;
    // exact branch when the difference has constant sign.
    AffineForm af_lattice(const AffineForm& a, const AffineForm& b, bool is_join) {
        AffineForm d = af_sub(a, b);
        Interval rng = d.range();
        if (rng.lo.sign() >= 0) return is_join ? a : b; // a >= b everywhere
        if (rng.hi.sign() <= 0) return is_join ? b : a;
        AffineForm ad = af_abs(d, syms_);
        AffineForm sum = af_add(a, b);
        AffineForm combined = is_join ? af_add(sum, ad) : af_sub(sum, ad);
        return af_scale(Rational(1, 2), combined);
    }

    PairVal x_, y_;
    SymbolTable syms_;
    std::map<const void*, PairVal> memo_;
};

Interval direct_enclosure(const RieszTerm& t, const Rect& box) {
    BoxEvaluator ev(box);
    return ev.range(t);
}

std::pair<Rect, Rect> bisect_longest(const Rect& box) {
    // ties split x
    if (box.height() > box.width()) {
        Rational mid = (box.y_lo + box.y_hi) / 2;
        return {Rect(box.x_lo, box.x_hi, box.y_lo, mid), Rect(box.x_lo, box.x_hi, mid, box.y_hi)};
    }
    Rational mid = (box.x_lo + box.x_hi) / 2;
    return {Rect(box.x_lo, mid, box.y_lo, box.y_hi), Rect(mid, box.x_hi, box.y_lo, box.y_hi)};
}

Interval clip_to(const Interval& inherited, const Interval& fresh) {
    auto tight = intersect(inherited, fresh);
    if (!tight) throw std::logic_error("enclosure: child bound disjoint from parent");
    return *tight;
}

} // namespace

Interval enclosure(const RieszTerm& t, const Rect& box, const Rational& tol, int max_depth) {
    if (tol.sign() <= 0) {
        throw std::invalid_argument("enclosure: tolerance must be positive");
    }
    struct Item {
        Rect box;
        int depth;
        Interval bound;
    };
    std::deque<Item> queue;
    queue.push_back({box, 0, direct_enclosure(t, box)});
    std::vector<Interval> leaves;
    std::size_t splits = 0;
    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        bool refine = item.bound.width() > tol && item.depth < max_depth &&
                      splits < kEnclosureSplitBudget;
        if (!refine) {
            leaves.push_back(item.bound);
            continue;
        }
        ++splits;
        auto [b1, b2] = bisect_longest(item.box);
        queue.push_back({b1, item.depth + 1, clip_to(item.bound, direct_enclosure(t, b1))});
        queue.push_back({b2, item.depth + 1, clip_to(item.bound, direct_enclosure(t, b2))});
    }
    Interval out = leaves.front();
    for (std::size_t i = 1; i < leaves.size(); ++i) out = hull(out, leaves[i]);
    return out;
}

namespace {

// Closure sample points giving fast certified bounds for extrema of
// piecewise-linear terms (their extrema sit at corners).
std::vector<Point> box_samples(const Rect& box) {
    return {box.center(),
            Point{box.x_lo, box.y_lo}, Point{box.x_lo, box.y_hi},
            Point{box.x_hi, box.y_lo}, Point{box.x_hi, box.y_hi}};
}

} // namespace

NormCut sup_enclosure(const RieszTerm& t, const Region& region, const Rational& tol,
                      int max_depth) {
    if (tol.sign() <= 0) {
        throw std::invalid_argument("sup_enclosure: tolerance must be positive");
    }
    struct Item {
        Rect box;
        int depth;
        Interval enc;
        std::uint64_t seq;
    };
    struct ByUpper {
        bool operator()(const Item& a, const Item& b) const {
            if (a.enc.hi != b.enc.hi) return a.enc.hi < b.enc.hi; // max-heap on hi
            return a.seq > b.seq;
        }
    };
    std::priority_queue<Item, std::vector<Item>, ByUpper> live;
    std::uint64_t seq = 0;
    std::optional<Rational> lower;
    auto note_value = [&](const Rational& v) {
        if (!lower || *lower < v) lower = v;
    };
    auto admit = [&](const Rect& box, int depth, const Interval& enc) {
        note_value(enc.lo);
        for (const Point& p : box_samples(box)) note_value(eval(t, p));
        live.push(Item{box, depth, enc, seq++});
    };
    for (const Rect& r : region.rects()) {
        admit(r, 0, direct_enclosure(t, r));
    }
    std::size_t splits = 0;
    while (true) {
        while (!live.empty() && live.top().enc.hi <= *lower) live.pop();
        Rational upper = live.empty() ? *lower : max(*lower, live.top().enc.hi);
        if (upper - *lower <= tol) {
            return NormCut{Interval(*lower, upper), region, tol};
        }
        Item item = live.top();
        live.pop();
        if (item.depth >= max_depth || splits >= kExtremumSplitBudget) {
            throw std::runtime_error(
                "sup_enclosure: tolerance unreachable within depth/box budget");
        }
        ++splits;
        auto [b1, b2] = bisect_longest(item.box);
        admit(b1, item.depth + 1, clip_to(item.enc, direct_enclosure(t, b1)));
        admit(b2, item.depth + 1, clip_to(item.enc, direct_enclosure(t, b2)));
    }
}

Interval inf_enclosure(const RieszTerm& t, const Region& region, const Rational& tol,
                       int max_depth) {
    NormCut cut = sup_enclosure(-t, region, tol, max_depth);
    return neg(cut.sup_enclosure);
}

EqVerdict equal_on_region(const RieszTerm& r, const RieszTerm& s, const Region& region,
                          const Rational& tol, int max_depth, std::uint64_t seed) {
    if (tol.sign() <= 0) {
        throw std::invalid_argument("equal_on_region: tolerance must be positive");
    }
    const RieszTerm diff = r - s;

    auto refuted_at = [&](const Point& p) -> std::optional<EqVerdict> {
        if (eval(r, p) != eval(s, p)) {
            return EqVerdict{EqVerdict::Kind::RefutedAt, tol, p};
        }
        return std::nullopt;
    };

    // Probe pass: deterministic off-center points plus seeded rational samples.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> frac(1, 63);
    for (const Rect& box : region.rects()) {
        const Rational w = box.width(), h = box.height();
        const Point c = box.center();
        const Point probes[] = {
            c,
            Point{c.x - w / 4, c.y}, Point{c.x + w / 4, c.y},
            Point{c.x, c.y - h / 4}, Point{c.x, c.y + h / 4},
            Point{c.x - w / 4, c.y - h / 4}, Point{c.x + w / 4, c.y + h / 4},
            Point{c.x - w / 4, c.y + h / 4}, Point{c.x + w / 4, c.y - h / 4},
        };
        for (const Point& p : probes) {
            if (auto v = refuted_at(p)) return *v;
        }
        for (int k = 0; k < kProbesPerRect; ++k) {
            Point p{box.x_lo + w * Rational(frac(rng), 64), box.y_lo + h * Rational(frac(rng), 64)};
            if (auto v = refuted_at(p)) return *v;
        }
    }

    // Proof pass: show the difference enclosure stays within ±tol on every
    // rect; a box whose enclosure clears ±tol entirely is a refutation.
    bool unknown = false;
    for (const Rect& top : region.rects()) {
        struct Item {
            Rect box;
            int depth;
            Interval bound;
        };
        std::deque<Item> queue;
        queue.push_back({top, 0, direct_enclosure(diff, top)});
        std::size_t splits = 0;
        while (!queue.empty()) {
            Item item = std::move(queue.front());
            queue.pop_front();
            if (-tol <= item.bound.lo && item.bound.hi <= tol) continue;
            if (item.bound.lo > tol || item.bound.hi < -tol) {
                // difference bounded away from zero on the whole box
                auto v = refuted_at(item.box.center());
                if (v) return *v;
                throw std::logic_error("equal_on_region: refuting box without witness");
            }
            if (item.depth >= max_depth || splits >= kEqualitySplitBudget) {
                unknown = true;
                continue;
            }
            ++splits;
            auto [b1, b2] = bisect_longest(item.box);
            queue.push_back({b1, item.depth + 1, clip_to(item.bound, direct_enclosure(diff, b1))});
            queue.push_back({b2, item.depth + 1, clip_to(item.bound, direct_enclosure(diff, b2))});
        }
    }
    if (unknown) {
        return EqVerdict{EqVerdict::Kind::Unknown, tol, std::nullopt};
    }
    return EqVerdict{EqVerdict::Kind::ProvenWithin, tol, std::nullopt};
}

} // namespace pointfree
