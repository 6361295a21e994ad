#pragma once

#include <cstddef>
#include <vector>

#include "helly/curve_spec.hpp"
#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly {

// Factories. Each validates its parameters and throws InvalidCurve.
CurveSpec make_curve(CurveShape shape);
CurveSpec circle(double radius);
CurveSpec ellipse(double a, double b);
CurveSpec superellipse(double p, double a, double b);
CurveSpec support_sampled(std::vector<double> h);
CurveSpec convex_polygon(std::vector<Point> vertices);
CurveSpec parabola(double coef, bool downward = false);

/// Samples the support function of a bounded curve at n equispaced angles.
CurveSpec support_sampled_from(const CurveSpec& curve, std::size_t n);

/// The point reflection -C, as a curve of the same kind.
CurveSpec reflected(const CurveSpec& curve);

CurveClass classify(const CurveSpec& curve);

/// Interior point the gauge of a bounded curve is taken from: the origin for
/// every smooth variant, the vertex centroid for polygons.
Point basepoint(const CurveSpec& curve);

/// Support function h(angle) = max <x, (cos, sin)> over the body.
/// Throws UnboundedUnsupported where the support is infinite.
double support_function(const CurveSpec& curve, double angle);

/// Minkowski functional of the body about its basepoint: 1 on the curve,
/// below 1 inside, above 1 outside. Throws UnboundedUnsupported for parabolas.
double gauge(const CurveSpec& curve, Point x);

/// Gradient (a subgradient at corners) of gauge; zero at the basepoint.
Vector gauge_gradient(const CurveSpec& curve, Point x);

/// Zero exactly on lambda*C + v, negative inside the placed body, positive outside.
double signed_residual(const CurveSpec& curve, const Placement& placement, Point x);

/// Boundary point maximizing <x, d>.
Point support_point(const CurveSpec& curve, Vector d);

/// Bounded curves: the boundary point on the ray from the basepoint at
/// polar angle t. Parabolas: the graph point with abscissa t.
Point boundary_point(const CurveSpec& curve, double t);

struct BoundaryProjection {
    double t = 0.0;
    double distance = 0.0;
    Point point;
};

/// Nearest boundary point to x, with its parameter and Euclidean distance.
BoundaryProjection boundary_project(const CurveSpec& curve, Point x, const TolerancePolicy& tol = {});

/// Numerical certificate that the curve contains no segment: true iff no
/// chord between two of `samples` boundary points has its midpoint on the curve.
bool strictness_audit(const CurveSpec& curve, int samples, const TolerancePolicy& tol = {});

/// Euclidean diameter of a bounded curve; infinity for parabolas.
double diameter(const CurveSpec& curve);

}  // namespace helly
