#ifndef POINTFREE_JSON_IO_HPP
#define POINTFREE_JSON_IO_HPP

#include "pointfree/distance.hpp"
#include "pointfree/forcing.hpp"
#include "pointfree/obstruction.hpp"
#include "pointfree/riesz.hpp"
#include "pointfree/vietoris.hpp"

#include <json.hpp>

#include <string>

// Wire formats. Rationals travel as canonical strings "p/q" (or "p"),
// points as ["x","y"] pairs, rects as {"x":["lo","hi"],"y":["lo","hi"]},
// regions as rect arrays, basic opens as
// {"positive":[Region,...],"negative":Region}, and terms as
//   {"gen":"one"|"x"|"y"}
// | {"op":"add"|"join"|"meet","args":[t,t]}
// | {"op":"scale","q":"p/q","arg":t}
// | {"op":"square","arg":t}.
// Parsers throw std::invalid_argument with a description on malformed
// payloads.

namespace pointfree::io {

using json = nlohmann::json;

json to_json(const Rational& r);
json to_json(const Interval& iv);
json to_json(const Point& p);
json to_json(const Rect& r);
json to_json(const Region& r);
json to_json(const FinitePointSet& a);
json to_json(const BasicOpen& u);
json to_json(const RieszTerm& t);
json to_json(const NormCut& c);
json to_json(const EqVerdict& v);
json to_json(const ForcedInterval& f);
json to_json(const DistanceInterval& d);
json to_json(const PointEnclosure& p);
json to_json(const MonodromyCertificate& c);
json to_json(const SelectorViolation& v);
json to_json(const UnsatRecord& r);
json to_json(const HomCheckResult& r);

Rational rational_from_json(const json& j);
Interval interval_from_json(const json& j);
Point point_from_json(const json& j);
Rect rect_from_json(const json& j);
Region region_from_json(const json& j);
FinitePointSet point_set_from_json(const json& j);
BasicOpen basic_open_from_json(const json& j);
RieszTerm term_from_json(const json& j);

std::string metric_name(DistMetric m);
DistMetric dist_metric_from_name(const std::string& name);

} // namespace pointfree::io

#endif
