#pragma once

#include <array>

#include "helly/covering.hpp"
#include "helly/curve_spec.hpp"
#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly {

/// Affinely regular hexagon inscribed in a curve. With u = x1 - c and
/// w = x2 - c the vertices are c+u, c+w, c+(w-u), c-u, c-w, c-(w-u).
struct HexagonWitness {
    Point center;
    std::array<Point, 6> vertices;
    double residual = 0.0;       ///< max boundary residual over the vertices
    double affine_defect = 0.0;  ///< max deviation from the vertex relations above
    bool operator==(const HexagonWitness&) const = default;
};

/// Inscribes an affinely regular hexagon in a bounded curve. Centrally
/// symmetric curves use the one-parameter search pinned at t = 0; other
/// curves solve for (centre, t) by damped Newton.
HexagonWitness inscribe_affine_regular_hexagon(const CurveSpec& curve, const TolerancePolicy& tol = {});

/// {x1, x3, x5, centre} of the inscribed hexagon, certified: each triple lies
/// on a translate, the four points on none.
OrderWitness four_point_witness(const CurveSpec& curve, const TolerancePolicy& tol = {});

/// Three collinear points (0,0), (1,0), (2,0) with the translate through each
/// pair: on the parabola no translate carries all three.
OrderWitness unbounded_collinear_witness(const CurveSpec& parabola, const TolerancePolicy& tol = {});

struct TriangleConfiguration {
    CurveSpec triangle;
    std::array<Point, 3> triple;
    SolutionSet placements;
};

/// The triangle (0,0), (2,0), (0,2) and the triple (0,0), (1,0), (0,1), which
/// the triangle's boundary carries in exactly three translated positions.
TriangleConfiguration triangle_three_placements(const TolerancePolicy& tol = {});

}  // namespace helly
