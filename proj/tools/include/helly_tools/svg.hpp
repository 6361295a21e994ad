#pragma once

#include <string>
#include <vector>

#include "helly/curve_spec.hpp"
#include "helly/geometry.hpp"
#include "helly/placement.hpp"

namespace helly::svg {

struct Marker {
    Point at;
    std::string label;
};

/// Accumulates placed curves, polygons and labeled points, then emits an
/// SVG 1.1 document whose viewBox covers the content with a 10% margin.
class Drawing {
public:
    void add_curve(const CurveSpec& base, const Placement& placement);
    void add_polygon(const std::vector<Point>& vertices);
    void add_marker(Point at, std::string label);

    std::string str() const;

private:
    struct Polyline {
        std::vector<Point> pts;
        bool closed = true;
        std::size_t color = 0;
    };
    std::vector<Polyline> lines_;
    std::vector<Marker> markers_;
    // Unbounded curves are sampled at render time over the content's x range.
    std::vector<std::pair<CurveSpec, Placement>> unbounded_;
    std::size_t next_color_ = 0;
};

}  // namespace helly::svg
