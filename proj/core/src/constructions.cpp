#include "helly/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "numerics.hpp"

namespace helly {

namespace {

using detail::kTwoPi;

bool centrally_symmetric(const CurveSpec& curve) {
    if (curve.is<Circle>() || curve.is<Ellipse>() || curve.is<Superellipse>()) return true;
    if (curve.is<SupportSampled>()) {
        const auto& h = curve.as<SupportSampled>().h;
        if (h.size() % 2 != 0) return false;
        for (std::size_t k = 0; k < h.size() / 2; ++k) {
            if (std::abs(h[k] - h[k + h.size() / 2]) > 1e-12 * h[k]) return false;
        }
        return true;
    }
    if (curve.is<ConvexPolygon>()) {
        const auto& poly = curve.as<ConvexPolygon>();
        for (const Point& p : poly.vertices) {
            Point mirror = poly.basepoint - (p - poly.basepoint);
            bool found = std::any_of(poly.vertices.begin(), poly.vertices.end(),
                                     [&](const Point& q) { return distance(q, mirror) <= 1e-12 * (1.0 + mirror.as_vector().norm()); });
            if (!found) return false;
        }
        return true;
    }
    return false;
}

HexagonWitness assemble(const CurveSpec& curve, Point c, Vector u, Vector w) {
    HexagonWitness hex;
    hex.center = c;
    hex.vertices = {c + u, c + w, c + (w - u), c - u, c - w, c - (w - u)};
    const Placement identity{};
    for (const Point& x : hex.vertices) {
        hex.residual = std::max(hex.residual, std::abs(signed_residual(curve, identity, x)));
    }
    const auto& x = hex.vertices;
    double defect = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        Vector sym = (x[i] - c) + (x[i + 3] - c);
        defect = std::max(defect, sym.norm());
    }
    defect = std::max(defect, ((x[2] - c) - ((x[1] - c) - (x[0] - c))).norm());
    hex.affine_defect = defect;
    return hex;
}

// First s after t where the boundary point x(s) enters C + u, i.e. x(s) - u
// leaves the body; x(t) - u = c is inside, so the scan starts negative.
std::optional<double> next_vertex_param(const CurveSpec& curve, double t, Vector u, int max_iter) {
    auto f = [&](double s) { return gauge(curve, boundary_point(curve, s) - u) - 1.0; };
    constexpr int kSteps = 512;
    const double step = kTwoPi / kSteps;
    double a = t;
    double fa = f(a);
    for (int i = 1; i < kSteps; ++i) {
        double b = t + step * i;
        double fb = f(b);
        if (fa < 0.0 && fb >= 0.0) return detail::bracketed_root(f, a, b, fa, fb, max_iter);
        a = b;
        fa = fb;
    }
    return std::nullopt;
}

std::optional<HexagonWitness> symmetric_hexagon(const CurveSpec& curve, const TolerancePolicy& tol) {
    const Point c = basepoint(curve);
    const Vector u = boundary_point(curve, 0.0) - c;
    auto f = [&](double s) { return gauge(curve, boundary_point(curve, s) - u) - 1.0; };
    // f(0) = gauge(c) - 1 = -1 and, by symmetry, f(pi) = gauge(c - 2u) - 1 = 1.
    double s = detail::bracketed_root(f, 0.0, std::numbers::pi, f(0.0), f(std::numbers::pi), tol.max_iter);
    const Vector w = boundary_point(curve, s) - c;
    return assemble(curve, c, u, w);
}

struct GeneralDefect {
    std::array<double, 3> r{};
    Vector u;
    Vector w;
    bool ok = false;
};

GeneralDefect general_defect(const CurveSpec& curve, Point c, double t, int max_iter) {
    GeneralDefect d;
    Point x1 = boundary_point(curve, t);
    d.u = x1 - c;
    if (gauge(curve, c) >= 1.0) return d;
    auto s = next_vertex_param(curve, t, d.u, max_iter);
    if (!s) return d;
    d.w = boundary_point(curve, *s) - c;
    d.r = {gauge(curve, c - d.u) - 1.0, gauge(curve, c - d.w) - 1.0, gauge(curve, c - (d.w - d.u)) - 1.0};
    d.ok = true;
    return d;
}

double sq_norm(const std::array<double, 3>& r) { return r[0] * r[0] + r[1] * r[1] + r[2] * r[2]; }

// Solves A x = b for a 3x3 system by Cramer's rule.
std::optional<std::array<double, 3>> solve3(const std::array<std::array<double, 3>, 3>& a, const std::array<double, 3>& b) {
    auto det3 = [](const std::array<std::array<double, 3>, 3>& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    double det = det3(a);
    if (!(std::abs(det) > 1e-300) || !std::isfinite(det)) return std::nullopt;
    std::array<double, 3> x{};
    for (int col = 0; col < 3; ++col) {
        auto m = a;
        for (int row = 0; row < 3; ++row) m[row][col] = b[row];
        x[col] = det3(m) / det;
    }
    return x;
}

std::optional<HexagonWitness> general_hexagon(const CurveSpec& curve, const TolerancePolicy& tol) {
    // Start from the midpoint of opposite support points, averaged.
    Point c0{0.0, 0.0};
    constexpr int kDirs = 64;
    for (int i = 0; i < kDirs; ++i) {
        double a = std::numbers::pi * i / kDirs;
        Point p = support_point(curve, {std::cos(a), std::sin(a)});
        Point q = support_point(curve, {-std::cos(a), -std::sin(a)});
        c0.x += 0.5 * (p.x + q.x) / kDirs;
        c0.y += 0.5 * (p.y + q.y) / kDirs;
    }
    constexpr int kStarts = 12;
    for (int start = 0; start < kStarts; ++start) {
        double x[3] = {c0.x, c0.y, kTwoPi * start / kStarts};
        GeneralDefect d = general_defect(curve, {x[0], x[1]}, x[2], tol.max_iter);
        if (!d.ok) continue;
        for (int it = 0; it < tol.max_iter && sq_norm(d.r) > 1e-30; ++it) {
            std::array<std::array<double, 3>, 3> jac{};
            bool jac_ok = true;
            for (int k = 0; k < 3 && jac_ok; ++k) {
                double y[3] = {x[0], x[1], x[2]};
                const double hstep = 1e-7;
                y[k] += hstep;
                GeneralDefect dp = general_defect(curve, {y[0], y[1]}, y[2], tol.max_iter);
                y[k] -= 2.0 * hstep;
                GeneralDefect dm = general_defect(curve, {y[0], y[1]}, y[2], tol.max_iter);
                if (!dp.ok || !dm.ok) jac_ok = false;
                for (int row = 0; row < 3 && jac_ok; ++row) jac[row][k] = (dp.r[row] - dm.r[row]) / (2.0 * hstep);
            }
            if (!jac_ok) break;
            auto step = solve3(jac, {-d.r[0], -d.r[1], -d.r[2]});
            if (!step) break;
            double alpha = 1.0;
            bool improved = false;
            while (alpha > 1e-8) {
                double y[3] = {x[0] + alpha * (*step)[0], x[1] + alpha * (*step)[1], x[2] + alpha * (*step)[2]};
                GeneralDefect dn = general_defect(curve, {y[0], y[1]}, y[2], tol.max_iter);
                if (dn.ok && sq_norm(dn.r) < sq_norm(d.r)) {
                    std::copy(y, y + 3, x);
                    d = dn;
                    improved = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!improved) break;
        }
        HexagonWitness hex = assemble(curve, {x[0], x[1]}, d.u, d.w);
        if (hex.residual <= tol.residual_tol) return hex;
    }
    return std::nullopt;
}

}  // namespace

HexagonWitness inscribe_affine_regular_hexagon(const CurveSpec& curve, const TolerancePolicy& tol) {
    if (!classify(curve).bounded) throw Error(ErrorKind::PreconditionFailed, "hexagons are inscribed in bounded curves only");
    std::optional<HexagonWitness> hex = centrally_symmetric(curve) ? symmetric_hexagon(curve, tol) : general_hexagon(curve, tol);
    if (!hex || hex->residual > tol.residual_tol) {
        throw Error(ErrorKind::NoConvergence, "could not inscribe an affinely regular hexagon");
    }
    return *hex;
}

OrderWitness four_point_witness(const CurveSpec& curve, const TolerancePolicy& tol) {
    CurveClass cls = classify(curve);
    if (!cls.bounded || !cls.strictly_convex) {
        throw Error(ErrorKind::PreconditionFailed, "the four-point witness needs a strictly convex bounded curve");
    }
    HexagonWitness hex = inscribe_affine_regular_hexagon(curve, tol);
    std::vector<Point> pts{hex.vertices[0], hex.vertices[2], hex.vertices[4], hex.center};
    auto w = certify_order_witness(curve, pts, 3, FitMode::Translate, tol, 0);
    if (!w) throw Error(ErrorKind::NoConvergence, "hexagon points failed witness certification");
    return *w;
}

OrderWitness unbounded_collinear_witness(const CurveSpec& parabola, const TolerancePolicy& tol) {
    if (!parabola.is<Parabola>()) throw Error(ErrorKind::PreconditionFailed, "expected the parabola variant");
    std::vector<Point> pts{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    auto w = certify_order_witness(parabola, pts, 2, FitMode::Translate, tol, 0);
    if (!w) throw Error(ErrorKind::NoConvergence, "collinear points failed witness certification");
    return *w;
}

TriangleConfiguration triangle_three_placements(const TolerancePolicy& tol) {
    CurveSpec triangle = convex_polygon({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}});
    std::array<Point, 3> triple{Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}};
    SolutionSet placements = polygon_translates_of_triple(triangle, triple[0], triple[1], triple[2], tol);
    return {triangle, triple, placements};
}

}  // namespace helly
