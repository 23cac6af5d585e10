#include "pointfree/json_io.hpp"

#include <stdexcept>

namespace pointfree::io {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

const json& expect_array(const json& j, std::size_t size, const char* what) {
    if (!j.is_array() || j.size() != size) {
        fail(std::string("expected ") + what);
    }
    return j;
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Interval& iv) { return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}}; }

json to_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

json to_json(const Rect& r) {
    return json{{"x", json::array({r.x_lo.str(), r.x_hi.str()})},
                {"y", json::array({r.y_lo.str(), r.y_hi.str()})}};
}

json to_json(const Region& r) {
    json arr = json::array();
    for (const Rect& rect : r.rects()) arr.push_back(to_json(rect));
    return arr;
}

json to_json(const FinitePointSet& a) {
    json arr = json::array();
    for (const Point& p : a.points()) arr.push_back(to_json(p));
    return arr;
}

json to_json(const BasicOpen& u) {
    json pos = json::array();
    for (const Region& r : u.positive) pos.push_back(to_json(r));
    return json{{"positive", pos}, {"negative", to_json(u.negative)}};
}

json to_json(const RieszTerm& t) {
    using K = RieszTerm::Kind;
    switch (t.kind()) {
        case K::One: return json{{"gen", "one"}};
        case K::X: return json{{"gen", "x"}};
        case K::Y: return json{{"gen", "y"}};
        case K::Add:
            return json{{"op", "add"}, {"args", json::array({to_json(t.lhs()), to_json(t.rhs())})}};
        case K::Join:
            return json{{"op", "join"}, {"args", json::array({to_json(t.lhs()), to_json(t.rhs())})}};
        case K::Meet:
            return json{{"op", "meet"}, {"args", json::array({to_json(t.lhs()), to_json(t.rhs())})}};
        case K::Scale:
            return json{{"op", "scale"}, {"q", t.factor().str()}, {"arg", to_json(t.arg())}};
        case K::Square:
            return json{{"op", "square"}, {"arg", to_json(t.arg())}};
    }
    fail("bad term kind");
}

json to_json(const NormCut& c) {
    return json{{"sup", to_json(c.sup_enclosure)}, {"region", to_json(c.region)},
                {"tol", c.tol.str()}};
}

json to_json(const EqVerdict& v) {
    switch (v.kind) {
        case EqVerdict::Kind::ProvenWithin:
            return json{{"verdict", "proven"}, {"tol", v.tol.str()}};
        case EqVerdict::Kind::RefutedAt:
            return json{{"verdict", "refuted"}, {"witness", to_json(*v.witness)}};
        case EqVerdict::Kind::Unknown:
            return json{{"verdict", "unknown"}, {"tol", v.tol.str()}};
    }
    fail("bad verdict kind");
}

json to_json(const ForcedInterval& f) {
    return json{{"lo", f.lo.str()}, {"hi", f.hi.str()}, {"open", to_json(f.open)},
                {"term", to_json(f.term)}};
}

json to_json(const DistanceInterval& d) {
    return json{{"lo", d.lo.str()}, {"hi", d.hi.str()}, {"metric", metric_name(d.metric)}};
}

json to_json(const PointEnclosure& p) {
    return json{{"x", json::array({p.x.lo.str(), p.x.hi.str()})},
                {"y", json::array({p.y.lo.str(), p.y.hi.str()})}};
}

json to_json(const MonodromyCertificate& c) {
    json path = json::array();
    for (const PointEnclosure& p : c.path) path.push_back(to_json(p));
    return json{{"start", to_json(c.start_root)},
                {"end", to_json(c.end_root)},
                {"separation", to_json(c.separation)},
                {"consistency_bound", c.consistency_bound.str()},
                {"steps", c.steps},
                {"valid", c.valid()},
                {"path", path}};
}

json to_json(const SelectorViolation& v) {
    json trace = json::array();
    for (std::size_t k = 0; k < v.trace.size(); ++k) {
        const SweepStep& s = v.trace[k];
        trace.push_back(json{{"step", k},
                             {"swept", to_json(s.swept)},
                             {"antipode", to_json(s.antipode)},
                             {"choice", s.choice}});
    }
    return json{{"kind", v.kind == SelectorViolation::Kind::Discontinuity ? "discontinuity"
                                                                          : "wraparound"},
                {"step", v.step},
                {"threshold_sq", v.threshold_sq.str()},
                {"trace", trace}};
}

json to_json(const UnsatRecord& r) {
    return json{{"n", r.n}, {"checked", r.assignments_checked}, {"satisfying", r.satisfying}};
}

json to_json(const HomCheckResult& r) {
    json j{{"join_value", r.join_value.str()}};
    if (r.index) {
        j["index"] = *r.index;
    } else {
        j["outside"] = true;
    }
    return j;
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) fail("rational must be a string like \"p/q\"");
    return Rational::parse(j.get<std::string>());
}

Interval interval_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi")) {
        fail("interval must be {\"lo\":...,\"hi\":...}");
    }
    return Interval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

Point point_from_json(const json& j) {
    expect_array(j, 2, "point [\"x\",\"y\"]");
    return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

Rect rect_from_json(const json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        fail("rect must be {\"x\":[lo,hi],\"y\":[lo,hi]}");
    }
    const json& xs = expect_array(j.at("x"), 2, "rect x bounds");
    const json& ys = expect_array(j.at("y"), 2, "rect y bounds");
    return Rect(rational_from_json(xs[0]), rational_from_json(xs[1]),
                rational_from_json(ys[0]), rational_from_json(ys[1]));
}

Region region_from_json(const json& j) {
    if (!j.is_array() || j.empty()) fail("region must be a non-empty rect array");
    std::vector<Rect> rects;
    rects.reserve(j.size());
    for (const json& r : j) rects.push_back(rect_from_json(r));
    return Region(std::move(rects));
}

FinitePointSet point_set_from_json(const json& j) {
    if (!j.is_array() || j.empty()) fail("point set must be a non-empty point array");
    std::vector<Point> points;
    points.reserve(j.size());
    for (const json& p : j) points.push_back(point_from_json(p));
    return FinitePointSet(std::move(points));
}

BasicOpen basic_open_from_json(const json& j) {
    if (!j.is_object() || !j.contains("positive") || !j.contains("negative")) {
        fail("basic open must be {\"positive\":[...],\"negative\":...}");
    }
    const json& pos = j.at("positive");
    if (!pos.is_array() || pos.empty()) fail("positive list must be non-empty");
    std::vector<Region> positives;
    positives.reserve(pos.size());
    for (const json& r : pos) positives.push_back(region_from_json(r));
    return BasicOpen(std::move(positives), region_from_json(j.at("negative")));
}

RieszTerm term_from_json(const json& j) {
    if (!j.is_object()) fail("term must be an object");
    if (j.contains("gen")) {
        const std::string g = j.at("gen").get<std::string>();
        if (g == "one") return RieszTerm::one();
        if (g == "x") return RieszTerm::x();
        if (g == "y") return RieszTerm::y();
        fail("unknown generator \"" + g + "\"");
    }
    if (!j.contains("op")) fail("term needs \"gen\" or \"op\"");
    const std::string op = j.at("op").get<std::string>();
    if (op == "add" || op == "join" || op == "meet") {
        const json& args = expect_array(j.at("args"), 2, "binary term args");
        RieszTerm a = term_from_json(args[0]);
        RieszTerm b = term_from_json(args[1]);
        if (op == "add") return RieszTerm::add(a, b);
        if (op == "join") return RieszTerm::join(a, b);
        return RieszTerm::meet(a, b);
    }
    if (op == "scale") {
        return RieszTerm::scale(rational_from_json(j.at("q")), term_from_json(j.at("arg")));
    }
    if (op == "square") {
        return RieszTerm::square(term_from_json(j.at("arg")));
    }
    fail("unknown term op \"" + op + "\"");
}

std::string metric_name(DistMetric m) {
    switch (m) {
        case DistMetric::L1: return "l1";
        case DistMetric::L2Sq: return "l2sq";
        case DistMetric::L2: return "l2";
    }
    fail("bad metric");
}

DistMetric dist_metric_from_name(const std::string& name) {
    if (name == "l1") return DistMetric::L1;
    if (name == "l2sq") return DistMetric::L2Sq;
    if (name == "l2") return DistMetric::L2;
    fail("unknown metric \"" + name + "\" (expected l1, l2sq, or l2)");
}

} // namespace pointfree::io
