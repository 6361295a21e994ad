#pragma once

#include <string>
#include <vector>

#include "helly/curve_spec.hpp"
#include "helly/geometry.hpp"

namespace helly {

/// The homothet lambda*C + v; lambda == 1 is a translate.
struct Placement {
    double lambda = 1.0;
    Vector v;

    bool is_translate() const { return lambda == 1.0; }
    /// Maps a point of the base frame onto the placed curve's frame.
    Point apply(Point base) const { return Point{lambda * base.x + v.dx, lambda * base.y + v.dy}; }
    /// Inverse of apply.
    Point to_base(Point x) const { return Point{(x.x - v.dx) / lambda, (x.y - v.dy) / lambda}; }

    bool operator==(const Placement&) const = default;
};

/// Placements v(s) = v0 + s*direction, s in [0, length], all at one ratio.
struct PlacementSegment {
    double lambda = 1.0;
    Vector v0;
    Vector direction;  ///< unit length
    double length = 0.0;

    Placement at(double s) const { return {lambda, v0 + direction * s}; }
    Placement end() const { return at(length); }
    bool operator==(const PlacementSegment&) const = default;
};

/// All placements fitting a point set onto a curve. Continua occur only for
/// curves that are not strictly convex.
struct SolutionSet {
    std::vector<Placement> isolated;
    std::vector<PlacementSegment> continua;

    bool empty() const { return isolated.empty() && continua.empty(); }
    bool operator==(const SolutionSet&) const = default;
};

struct PlacedCurve {
    CurveSpec base;
    Placement placement;
};

struct FamilySpec {
    CurveSpec base;
    std::vector<Placement> placements;
    std::vector<std::string> labels;  ///< empty, or one per placement

    std::size_t size() const { return placements.size(); }
    PlacedCurve member(std::size_t i) const { return {base, placements[i]}; }
    bool operator==(const FamilySpec&) const = default;
};

}  // namespace helly
