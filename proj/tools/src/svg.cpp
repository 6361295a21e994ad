#include "helly_tools/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "helly/curves.hpp"

namespace helly::svg {

namespace {

constexpr int kSegments = 720;
constexpr std::array<const char*, 6> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

void Drawing::add_curve(const CurveSpec& base, const Placement& placement) {
    if (!classify(base).bounded) {
        unbounded_.emplace_back(base, placement);
        return;
    }
    Polyline line;
    line.color = next_color_++;
    for (int i = 0; i < kSegments; ++i) {
        line.pts.push_back(placement.apply(boundary_point(base, 2.0 * std::numbers::pi * i / kSegments)));
    }
    lines_.push_back(std::move(line));
}

void Drawing::add_polygon(const std::vector<Point>& vertices) {
    lines_.push_back({vertices, true, next_color_++});
}

void Drawing::add_marker(Point at, std::string label) { markers_.push_back({at, std::move(label)}); }

std::string Drawing::str() const {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    auto grow = [&](Point p) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    };
    for (const auto& l : lines_) std::for_each(l.pts.begin(), l.pts.end(), grow);
    for (const auto& m : markers_) grow(m.at);
    for (const auto& [base, pl] : unbounded_) grow(pl.apply(origin()));
    if (!std::isfinite(x0)) x0 = y0 = -1.0, x1 = y1 = 1.0;
    if (x1 - x0 < 1e-9) x0 -= 1.0, x1 += 1.0;
    if (y1 - y0 < 1e-9) y0 -= 1.0, y1 += 1.0;

    // Parabolas are drawn across the horizontal extent of everything else.
    std::vector<Polyline> lines = lines_;
    std::size_t color = next_color_;
    for (const auto& [base, pl] : unbounded_) {
        Polyline line;
        line.closed = false;
        line.color = color++;
        const double span = x1 - x0;
        for (int i = 0; i <= kSegments; ++i) {
            double x = x0 - 0.5 * span + 2.0 * span * i / kSegments;
            double t = (x - pl.v.dx) / pl.lambda;
            line.pts.push_back(pl.apply(boundary_point(base, t)));
        }
        lines.push_back(std::move(line));
    }

    const double mx = 0.1 * (x1 - x0), my = 0.1 * (y1 - y0);
    const double vx = x0 - mx, vw = x1 - x0 + 2 * mx;
    const double vy = -(y1 + my), vh = y1 - y0 + 2 * my;
    const double stroke = 0.004 * std::max(vw, vh);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"" << num(vx)
        << ' ' << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    // The clip keeps parabola arms from blowing up the drawing.
    out << "<clipPath id=\"view\"><rect x=\"" << num(vx) << "\" y=\"" << num(vy) << "\" width=\"" << num(vw)
        << "\" height=\"" << num(vh) << "\"/></clipPath>\n<g clip-path=\"url(#view)\">\n";
    for (const auto& l : lines) {
        out << (l.closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"" << kColors[l.color % kColors.size()]
            << "\" stroke-width=\"" << num(stroke) << "\" points=\"";
        for (std::size_t i = 0; i < l.pts.size(); ++i) {
            out << (i ? " " : "") << num(l.pts[i].x) << ',' << num(-l.pts[i].y);
        }
        out << "\"/>\n";
    }
    for (const auto& m : markers_) {
        out << "<circle cx=\"" << num(m.at.x) << "\" cy=\"" << num(-m.at.y) << "\" r=\"" << num(2.5 * stroke)
            << "\" fill=\"black\"/>\n";
        if (!m.label.empty()) {
            out << "<text x=\"" << num(m.at.x + 3 * stroke) << "\" y=\"" << num(-m.at.y - 3 * stroke)
                << "\" font-size=\"" << num(10 * stroke) << "\" font-family=\"sans-serif\">" << m.label << "</text>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace helly::svg
