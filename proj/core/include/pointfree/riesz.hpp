#ifndef POINTFREE_RIESZ_HPP
#define POINTFREE_RIESZ_HPP

#include "pointfree/geometry.hpp"

#include <cstddef>
#include <memory>
#include <optional>

namespace pointfree {

/// Term of the lattice-ordered algebra generated by 1, x, y under vector
/// addition, rational scaling, join, meet, and squaring. Immutable tree
/// with shared subterms; copying is cheap.
class RieszTerm {
public:
    enum class Kind { One, X, Y, Add, Scale, Join, Meet, Square };

    static RieszTerm one();
    static RieszTerm x();
    static RieszTerm y();
    static RieszTerm constant(const Rational& q); // q * 1
    static RieszTerm add(const RieszTerm& a, const RieszTerm& b);
    static RieszTerm scale(const Rational& q, const RieszTerm& t);
    static RieszTerm join(const RieszTerm& a, const RieszTerm& b);
    static RieszTerm meet(const RieszTerm& a, const RieszTerm& b);
    static RieszTerm square(const RieszTerm& t);

    Kind kind() const;
    RieszTerm lhs() const;            // Add, Join, Meet
    RieszTerm rhs() const;            // Add, Join, Meet
    RieszTerm arg() const;            // Scale, Square
    const Rational& factor() const;   // Scale

    std::size_t depth() const;
    std::size_t node_count() const;

    /// Stable identity of the underlying node; used for memoization.
    const void* node_id() const { return node_.get(); }

private:
    struct Node;
    explicit RieszTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

inline RieszTerm operator+(const RieszTerm& a, const RieszTerm& b) { return RieszTerm::add(a, b); }
inline RieszTerm operator-(const RieszTerm& t) { return RieszTerm::scale(-1, t); }
inline RieszTerm operator-(const RieszTerm& a, const RieszTerm& b) { return a + (-b); }
inline RieszTerm operator*(const Rational& q, const RieszTerm& t) { return RieszTerm::scale(q, t); }

/// join(t, -t); the lattice absolute value.
RieszTerm abs(const RieszTerm& t);

/// Exact value of the denoted function at p.
Rational eval(const RieszTerm& t, const Point& p);

inline const Rational kDefaultEnclosureTol = Rational(1, 1000000);
inline constexpr int kDefaultMaxDepth = 40;

/// Rigorous enclosure of the term's range over the closed box: structural
/// interval arithmetic sharpened by an affine-form pass, with adaptive
/// longest-side bisection (ties split x) while a leaf enclosure is wider
/// than tol and depth remains. The result is the hull of leaf enclosures
/// clipped to ancestor bounds; it may be wider than tol at the depth cap,
/// which the caller can inspect.
Interval enclosure(const RieszTerm& t, const Rect& box, const Rational& tol,
                   int max_depth = kDefaultMaxDepth);

/// Located upper cut of sup over a compact region, realized as a rational
/// enclosure of width <= tol.
struct NormCut {
    Interval sup_enclosure;
    Region region;
    Rational tol;
};

/// Branch-and-bound enclosure of sup over closure(region) to width <= tol.
/// Throws std::runtime_error when the tolerance is unreachable within the
/// depth/box budget.
NormCut sup_enclosure(const RieszTerm& t, const Region& region, const Rational& tol,
                      int max_depth = kDefaultMaxDepth);

/// Same machinery for inf.
Interval inf_enclosure(const RieszTerm& t, const Region& region, const Rational& tol,
                       int max_depth = kDefaultMaxDepth);

/// Three-valued outcome of enclosure-based equality on a region.
struct EqVerdict {
    enum class Kind { ProvenWithin, RefutedAt, Unknown };
    Kind kind;
    Rational tol;                  // ProvenWithin: |r - s| <= tol on the region
    std::optional<Point> witness;  // RefutedAt: exact evaluations differ here

    bool proven() const { return kind == Kind::ProvenWithin; }
    bool refuted() const { return kind == Kind::RefutedAt; }
};

/// Decides r = s on a region up to tol: proof when the enclosure of |r - s|
/// stays within tol on every rect; refutation with an exact witness point
/// when a probe or a separated enclosure finds one; Unknown at the depth
/// cap. Deterministic for a fixed seed.
EqVerdict equal_on_region(const RieszTerm& r, const RieszTerm& s, const Region& region,
                          const Rational& tol, int max_depth = kDefaultMaxDepth,
                          std::uint64_t seed = 0);

/// (x - x_lo) ∧ (x_hi - x) ∧ (y - y_lo) ∧ (y_hi - y): positive exactly on
/// the open rectangle, zero on its boundary, negative outside.
RieszTerm bump_term(const Rect& o);

} // namespace pointfree

#endif
