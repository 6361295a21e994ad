#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "helly/constructions.hpp"
#include "helly/covering.hpp"
#include "helly/curve_spec.hpp"
#include "helly/helly.hpp"
#include "helly/intersections.hpp"
#include "helly/placement.hpp"

namespace helly::io {

using nlohmann::json;

json to_json(Point p);
json to_json(const CurveSpec& curve);
json to_json(const Placement& p);
json to_json(const PlacementSegment& s);
json to_json(const SolutionSet& s);
json to_json(const FamilySpec& f);
json to_json(const HexagonWitness& h);
json to_json(const OrderWitness& w);
json to_json(const HellyReport& r);

// Readers throw Error(MalformedInput) on missing or mistyped fields, and
// the kernel's InvalidCurve when a curve fails validation.
Point point_from_json(const json& j);
CurveSpec curve_from_json(const json& j);
Placement placement_from_json(const json& j);
PlacementSegment segment_from_json(const json& j);
SolutionSet solution_set_from_json(const json& j);
FamilySpec family_from_json(const json& j);
HexagonWitness hexagon_from_json(const json& j);
OrderWitness witness_from_json(const json& j);
HellyReport helly_report_from_json(const json& j);

/// A bare array of [x, y] pairs or an object with a "points" array.
std::vector<Point> points_from_json(const json& j);

json read_json_file(const std::string& path);
/// Writes j.dump(2) plus a trailing newline.
void write_json_file(const std::string& path, const json& j);

}  // namespace helly::io
