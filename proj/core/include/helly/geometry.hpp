#pragma once

#include <cmath>
#include <compare>

namespace helly {

struct Vector {
    double dx = 0.0;
    double dy = 0.0;

    constexpr Vector operator+(Vector o) const { return {dx + o.dx, dy + o.dy}; }
    constexpr Vector operator-(Vector o) const { return {dx - o.dx, dy - o.dy}; }
    constexpr Vector operator-() const { return {-dx, -dy}; }
    constexpr Vector operator*(double s) const { return {dx * s, dy * s}; }
    constexpr Vector operator/(double s) const { return {dx / s, dy / s}; }
    constexpr bool operator==(const Vector&) const = default;

    double norm() const { return std::hypot(dx, dy); }
    constexpr double norm2() const { return dx * dx + dy * dy; }
    /// Counterclockwise quarter turn.
    constexpr Vector perp() const { return {-dy, dx}; }
};

constexpr Vector operator*(double s, Vector v) { return v * s; }
constexpr double dot(Vector a, Vector b) { return a.dx * b.dx + a.dy * b.dy; }
constexpr double cross(Vector a, Vector b) { return a.dx * b.dy - a.dy * b.dx; }

struct Point {
    double x = 0.0;
    double y = 0.0;

    constexpr Point operator+(Vector v) const { return {x + v.dx, y + v.dy}; }
    constexpr Point operator-(Vector v) const { return {x - v.dx, y - v.dy}; }
    constexpr Vector operator-(Point o) const { return {x - o.x, y - o.y}; }
    constexpr bool operator==(const Point&) const = default;
    constexpr auto operator<=>(const Point&) const = default;

    /// Position vector relative to the origin.
    constexpr Vector as_vector() const { return {x, y}; }
};

constexpr Point origin() { return {0.0, 0.0}; }
constexpr Point as_point(Vector v) { return {v.dx, v.dy}; }
inline double distance(Point a, Point b) { return (a - b).norm(); }
constexpr Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(Vector v) { return std::isfinite(v.dx) && std::isfinite(v.dy); }

struct TolerancePolicy {
    double residual_tol = 1e-9;  ///< boundary-membership residual
    double cluster_tol = 1e-6;   ///< radius under which two solutions are the same
    double angle_tol = 1e-9;     ///< relative cross-product bound for parallel directions
    int max_iter = 128;

    /// Throws PreconditionFailed unless all tolerances are positive and max_iter >= 1.
    void validate() const;
};

enum class Orientation { Left, Right, Collinear };

/// Sign of the doubled signed area of pqr; |area| <= residual_tol is Collinear.
Orientation orientation(Point p, Point q, Point r, const TolerancePolicy& tol = {});

/// |u x w| <= angle_tol * |u| * |w|. Throws ZeroVector for numerically zero input.
bool parallel(Vector u, Vector w, const TolerancePolicy& tol = {});

/// Necessary condition for x, y, z, x+v, y+v, z+v lying on one convex curve:
/// some pair among x-y, x-z, y-z, v is parallel.
bool lemma_collin_translate(Point x, Point y, Point z, Vector v, const TolerancePolicy& tol = {});

/// Necessary condition for x, y, z, kx, ky, kz (k != 1, centre at the origin)
/// lying on one convex curve: three of x, y, z, 0 are collinear.
bool lemma_collin_homothety(Point x, Point y, Point z, const TolerancePolicy& tol = {});

}  // namespace helly
