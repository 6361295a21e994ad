#pragma once

// Reference implementations for tests and certificates. Everything here is
// written against the plain data types only and never calls the kernel.

#include <optional>
#include <utility>
#include <vector>

#include "helly/curve_spec.hpp"
#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly::oracles {

/// Center and radius of the circle through three non-collinear points.
std::pair<Point, double> circle_circumcircle(Point p, Point q, Point r);

/// Intersection points of two circles (0, 1 or 2), sorted lexicographically.
std::vector<Point> circle_pair_points(Point c1, double r1, Point c2, double r2);

/// Signed boundary residual of x on lambda*C + v, from the closed-form
/// description of each curve kind. Support-sampled curves are not covered.
double residual(const CurveSpec& curve, const Placement& placement, Point x);

struct Box {
    Point lo;
    Point hi;
};

struct GridCoverResult {
    std::optional<Placement> placement;  ///< a translate carrying S within tol
    double residual_floor = 0.0;         ///< smallest max-residual seen
    Vector best;                         ///< translate attaining the floor
};

/// Dense scan of translates v over the box, followed by Gauss-Newton polish
/// of the best grid cells.
GridCoverResult grid_cover_search(const CurveSpec& curve, const std::vector<Point>& points, Box bounds, double step,
                                  double tol = 1e-9);

/// Every isolated translate putting the triple on the polygon boundary, by
/// solving each pair of edge constraints and checking the third point.
SolutionSet polygon_arrangement_placements(const std::vector<Point>& vertices, Point p, Point q, Point r,
                                           double tol = 1e-9);

/// Translates of y = coef*x^2 through p and q, by bisection on a scan of the
/// vertex abscissa over [-range, range].
std::vector<Vector> parabola_pair_scan(double coef, Point p, Point q, double range = 1e3);

}  // namespace helly::oracles
