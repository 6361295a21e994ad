#include "helly/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <type_traits>
#include <variant>

#include "helly/errors.hpp"

namespace helly::oracles {

namespace {

double polygon_gauge(const std::vector<Point>& vertices, Vector y) {
    double gx = 0.0;
    double gy = 0.0;
    for (const Point& a : vertices) {
        gx += a.x;
        gy += a.y;
    }
    gx /= static_cast<double>(vertices.size());
    gy /= static_cast<double>(vertices.size());
    double g = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % vertices.size()];
        // Outward normal of a counterclockwise edge.
        double nx = b.y - a.y;
        double ny = a.x - b.x;
        double h = nx * (a.x - gx) + ny * (a.y - gy);
        g = std::max(g, (nx * (y.dx - gx) + ny * (y.dy - gy)) / h);
    }
    return g;
}

double max_abs_residual(const CurveSpec& curve, const std::vector<Point>& pts, Vector v) {
    double m = 0.0;
    for (const Point& p : pts) m = std::max(m, std::abs(residual(curve, {1.0, v}, p)));
    return m;
}

// Gauss-Newton on the residual vector with a finite-difference Jacobian.
Vector polish(const CurveSpec& curve, const std::vector<Point>& pts, Vector v) {
    const std::size_t n = pts.size();
    std::vector<double> r(n), rx(n), ry(n);
    double best = max_abs_residual(curve, pts, v);
    for (int it = 0; it < 200 && best > 0.0; ++it) {
        const double h = 1e-7 * (1.0 + v.norm());
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = residual(curve, {1.0, v}, pts[i]);
            rx[i] = (residual(curve, {1.0, v + Vector{h, 0.0}}, pts[i]) - residual(curve, {1.0, v - Vector{h, 0.0}}, pts[i])) / (2 * h);
            ry[i] = (residual(curve, {1.0, v + Vector{0.0, h}}, pts[i]) - residual(curve, {1.0, v - Vector{0.0, h}}, pts[i])) / (2 * h);
        }
        double a = 0, b = 0, c = 0, gx = 0, gy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            a += rx[i] * rx[i];
            b += rx[i] * ry[i];
            c += ry[i] * ry[i];
            gx += rx[i] * r[i];
            gy += ry[i] * r[i];
        }
        const double mu = 1e-12 * (a + c);
        a += mu;
        c += mu;
        const double det = a * c - b * b;
        if (!(std::abs(det) > 0.0)) break;
        Vector step{-(c * gx - b * gy) / det, -(a * gy - b * gx) / det};
        bool moved = false;
        for (double alpha = 1.0; alpha > 1e-6; alpha *= 0.5) {
            Vector cand = v + step * alpha;
            double m = max_abs_residual(curve, pts, cand);
            if (m < best) {
                v = cand;
                best = m;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return v;
}

}  // namespace

std::pair<Point, double> circle_circumcircle(Point p, Point q, Point r) {
    const double bx = q.x - p.x, by = q.y - p.y;
    const double cx = r.x - p.x, cy = r.y - p.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double scale = std::max({bx * bx + by * by, cx * cx + cy * cy, 1e-300});
    if (std::abs(d) <= 1e-12 * scale) throw Error(ErrorKind::CollinearInput, "circumcircle of collinear points");
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    return {Point{p.x + ux, p.y + uy}, std::hypot(ux, uy)};
}

std::vector<Point> circle_pair_points(Point c1, double r1, Point c2, double r2) {
    const double dx = c2.x - c1.x, dy = c2.y - c1.y;
    const double d = std::hypot(dx, dy);
    if (d == 0.0 || d > r1 + r2 || d < std::abs(r1 - r2)) return {};
    const double a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
    const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
    const double mx = c1.x + a * dx / d, my = c1.y + a * dy / d;
    std::vector<Point> out{{mx - h * dy / d, my + h * dx / d}};
    if (h > 0.0) out.push_back({mx + h * dy / d, my - h * dx / d});
    std::sort(out.begin(), out.end());
    return out;
}

double residual(const CurveSpec& curve, const Placement& placement, Point x) {
    const Vector y{(x.x - placement.v.dx) / placement.lambda, (x.y - placement.v.dy) / placement.lambda};
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return std::hypot(y.dx, y.dy) / s.radius - 1.0;
            } else if constexpr (std::is_same_v<T, Ellipse>) {
                return std::hypot(y.dx / s.a, y.dy / s.b) - 1.0;
            } else if constexpr (std::is_same_v<T, Superellipse>) {
                return std::pow(std::pow(std::abs(y.dx / s.a), s.p) + std::pow(std::abs(y.dy / s.b), s.p), 1.0 / s.p) - 1.0;
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                return polygon_gauge(s.vertices, y) - 1.0;
            } else if constexpr (std::is_same_v<T, Parabola>) {
                return s.downward ? y.dy + s.coef * y.dx * y.dx : s.coef * y.dx * y.dx - y.dy;
            } else {
                throw Error(ErrorKind::PreconditionFailed, "no closed-form residual for support-sampled curves");
            }
        },
        curve.shape());
}

GridCoverResult grid_cover_search(const CurveSpec& curve, const std::vector<Point>& points, Box bounds, double step,
                                  double tol) {
    if (points.empty() || !(step > 0.0)) throw Error(ErrorKind::PreconditionFailed, "grid search needs points and a step");
    const auto nx = static_cast<std::size_t>(std::floor((bounds.hi.x - bounds.lo.x) / step)) + 1;
    const auto ny = static_cast<std::size_t>(std::floor((bounds.hi.y - bounds.lo.y) / step)) + 1;
    std::vector<double> f(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            f[i * ny + j] = max_abs_residual(curve, points, {bounds.lo.x + step * i, bounds.lo.y + step * j});
        }
    }
    // Local minima of the grid, best first.
    std::vector<std::pair<double, std::size_t>> minima;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            double fij = f[i * ny + j];
            bool local = true;
            for (int di = -1; di <= 1 && local; ++di) {
                for (int dj = -1; dj <= 1 && local; ++dj) {
                    long ii = static_cast<long>(i) + di, jj = static_cast<long>(j) + dj;
                    if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= static_cast<long>(nx) || jj >= static_cast<long>(ny)) continue;
                    if (f[ii * ny + jj] < fij) local = false;
                }
            }
            if (local) minima.push_back({fij, i * ny + j});
        }
    }
    std::sort(minima.begin(), minima.end());
    if (minima.size() > 32) minima.resize(32);

    GridCoverResult out;
    out.residual_floor = std::numeric_limits<double>::infinity();
    for (const auto& [fv, idx] : minima) {
        Vector v{bounds.lo.x + step * static_cast<double>(idx / ny), bounds.lo.y + step * static_cast<double>(idx % ny)};
        if (fv < out.residual_floor) {
            out.residual_floor = fv;
            out.best = v;
        }
        Vector pv = polish(curve, points, v);
        double m = max_abs_residual(curve, points, pv);
        if (m < out.residual_floor) {
            out.residual_floor = m;
            out.best = pv;
        }
    }
    if (out.residual_floor <= tol) out.placement = Placement{1.0, out.best};
    return out;
}

SolutionSet polygon_arrangement_placements(const std::vector<Point>& vertices, Point p, Point q, Point r, double tol) {
    const std::size_t n = vertices.size();
    auto on_boundary = [&](Point x) {
        for (std::size_t k = 0; k < n; ++k) {
            const Point& a = vertices[k];
            const Point& b = vertices[(k + 1) % n];
            Vector d = b - a;
            double t = std::clamp(dot(x - a, d) / dot(d, d), 0.0, 1.0);
            if (distance(x, a + d * t) <= tol) return true;
        }
        return false;
    };
    const std::array<std::array<Point, 3>, 3> roles{{{p, q, r}, {p, r, q}, {q, r, p}}};
    std::vector<Placement> found;
    for (const auto& [x, y, z] : roles) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Point& ai = vertices[i];
                const Point& aj = vertices[j];
                Vector di = vertices[(i + 1) % n] - ai;
                Vector dj = vertices[(j + 1) % n] - aj;
                // x - v = ai + s di, y - v = aj + t dj  =>  t dj - s di = (y - x) - (aj - ai)
                double det = cross(dj, di * -1.0);
                if (std::abs(det) <= 1e-14 * di.norm() * dj.norm()) continue;
                Vector rhs = (y - x) - (aj - ai);
                double t = cross(rhs, di * -1.0) / det;
                double s = cross(dj, rhs) / det;
                if (s < -1e-12 || s > 1 + 1e-12 || t < -1e-12 || t > 1 + 1e-12) continue;
                Vector v = x - (ai + di * s);
                if (!on_boundary(z - v)) continue;
                bool dup = std::any_of(found.begin(), found.end(), [&](const Placement& o) { return (o.v - v).norm() <= 1e-7; });
                if (!dup) found.push_back({1.0, v});
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Placement& a, const Placement& b) {
        return a.v.dx != b.v.dx ? a.v.dx < b.v.dx : a.v.dy < b.v.dy;
    });
    return {found, {}};
}

std::vector<Vector> parabola_pair_scan(double coef, Point p, Point q, double range) {
    // Vertex (h, k): both points satisfy y = k + coef (x - h)^2.
    auto g = [&](double h) { return (p.y - coef * (p.x - h) * (p.x - h)) - (q.y - coef * (q.x - h) * (q.x - h)); };
    std::vector<Vector> out;
    constexpr int kSamples = 20000;
    double a = -range;
    double ga = g(a);
    for (int i = 1; i <= kSamples; ++i) {
        double b = -range + 2.0 * range * i / kSamples;
        double gb = g(b);
        if (ga == 0.0 || (ga < 0.0) != (gb < 0.0)) {
            double lo = a, hi = b, glo = ga;
            for (int it = 0; it < 200 && glo != 0.0; ++it) {
                double mid = 0.5 * (lo + hi);
                double gm = g(mid);
                if ((gm < 0.0) == (glo < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            double h = glo == 0.0 ? lo : 0.5 * (lo + hi);
            out.push_back({h, p.y - coef * (p.x - h) * (p.x - h)});
        }
        a = b;
        ga = gb;
    }
    return out;
}

}  // namespace helly::oracles
