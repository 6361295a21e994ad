#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {

struct Circle {
    double radius = 1.0;
    bool operator==(const Circle&) const = default;
};

/// Axis-aligned, centred at the origin.
struct Ellipse {
    double a = 1.0;
    double b = 1.0;
    bool operator==(const Ellipse&) const = default;
};

/// |x/a|^p + |y/b|^p = 1 with p > 1.
struct Superellipse {
    double p = 2.0;
    double a = 1.0;
    double b = 1.0;
    bool operator==(const Superellipse&) const = default;
};

/// Bounded body given by samples of its support function at 2*pi*k/n,
/// interpolated by periodic cubic Hermite pieces.
struct SupportSampled {
    std::vector<double> h;
    bool operator==(const SupportSampled& o) const { return h == o.h; }
};

/// Counterclockwise vertices in strictly convex position. The basepoint is
/// the vertex centroid; gauges of polygons are taken relative to it.
struct ConvexPolygon {
    std::vector<Point> vertices;
    Point basepoint;
    bool operator==(const ConvexPolygon& o) const { return vertices == o.vertices; }
};

/// Boundary of the epigraph y >= coef*x^2 (or of the hypograph when downward).
struct Parabola {
    double coef = 1.0;
    bool downward = false;
    bool operator==(const Parabola&) const = default;
};

using CurveShape = std::variant<Circle, Ellipse, Superellipse, SupportSampled, ConvexPolygon, Parabola>;

struct CurveClass {
    bool bounded = true;
    bool strictly_convex = true;
    bool smooth = true;
    bool operator==(const CurveClass&) const = default;
};

/// An immutable, validated convex curve. Build one with the factories in
/// curves.hpp; they reject illegal parameters with InvalidCurve.
class CurveSpec {
public:
    const CurveShape& shape() const { return shape_; }

    template <class T>
    bool is() const { return std::holds_alternative<T>(shape_); }

    template <class T>
    const T& as() const { return std::get<T>(shape_); }

    bool operator==(const CurveSpec& o) const { return shape_ == o.shape_; }

private:
    explicit CurveSpec(CurveShape shape) : shape_(std::move(shape)) {}
    CurveShape shape_;

    friend CurveSpec make_curve(CurveShape shape);
};

}  // namespace helly
