#pragma once

#include <cstdint>
#include <vector>

#include "helly/curve_spec.hpp"
#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly {

/// All translates C + v passing through p and q. Bounded strictly convex
/// curves give at most two, the parabola at most one, polygons may give continua.
SolutionSet translate_through_two(const CurveSpec& curve, Point p, Point q, const TolerancePolicy& tol = {});

/// Translates through p, q, r: the pair solutions for (p, q) filtered by r.
SolutionSet translate_through_three(const CurveSpec& curve, Point p, Point q, Point r, const TolerancePolicy& tol = {});

struct HomothetFitOptions {
    int starts = 25;
    std::uint64_t seed = 0x5eedULL;
};

/// Diagnostics of one homothet fit: how many independent solves converged
/// and how tightly their answers cluster.
struct HomothetFitReport {
    SolutionSet solutions;
    int converged = 0;             ///< converged solves (bisector trace + multi-start)
    double cluster_diameter = 0.0; ///< spread of the converged solves, in units of max(1, lambda)
};

/// The homothet lambda*C + v through three non-collinear points, found by
/// marching the generalized bisector of (p, q) until it crosses the bisector
/// of (q, r), cross-checked by multi-start Newton. Requires a strictly convex
/// bounded curve. Two distinct converged answers raise TheoremViolation.
HomothetFitReport homothet_through_three_report(const CurveSpec& curve, Point p, Point q, Point r,
                                                const TolerancePolicy& tol = {}, const HomothetFitOptions& opt = {});

SolutionSet homothet_through_three(const CurveSpec& curve, Point p, Point q, Point r, const TolerancePolicy& tol = {},
                                   const HomothetFitOptions& opt = {});

/// Exact solution set (isolated placements and continua) of translates of a
/// convex polygon carrying p, q, r on the boundary.
SolutionSet polygon_translates_of_triple(const CurveSpec& polygon, Point p, Point q, Point r,
                                         const TolerancePolicy& tol = {});

/// Restricts a polygon solution set to placements that also carry x.
SolutionSet polygon_restrict(const CurveSpec& polygon, const SolutionSet& set, Point x, const TolerancePolicy& tol = {});

/// The vectors u with T + u inside the base curve, i.e. the negated
/// translations of an all-translate solution set.
std::vector<Vector> translation_vectors_into(const SolutionSet& set);

/// Largest signed_residual magnitude of the points on the placed curve.
double max_residual(const CurveSpec& curve, const Placement& placement, const std::vector<Point>& points);

/// Sorts lexicographically and merges placements within cluster_tol.
std::vector<Placement> deduplicate(std::vector<Placement> placements, double curve_diameter, const TolerancePolicy& tol);

}  // namespace helly
