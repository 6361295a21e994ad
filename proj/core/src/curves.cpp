#include "helly/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "helly/errors.hpp"
#include "numerics.hpp"

namespace helly {

namespace {

using detail::kTwoPi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidCurve, what); }

Vector unit(double t) { return {std::cos(t), std::sin(t)}; }

// ---- support-sampled interpolation -------------------------------------------------

struct SupportValue {
    double h = 0.0;
    double dh = 0.0;
};

double knot(const std::vector<double>& h, long k) {
    long n = static_cast<long>(h.size());
    return h[static_cast<std::size_t>(((k % n) + n) % n)];
}

// Fourth-order central difference for the knot slopes.
double knot_slope(const std::vector<double>& h, long k, double step) {
    return (knot(h, k - 2) - 8.0 * knot(h, k - 1) + 8.0 * knot(h, k + 1) - knot(h, k + 2)) / (12.0 * step);
}

SupportValue eval_support(const std::vector<double>& h, double theta) {
    const long n = static_cast<long>(h.size());
    const double step = kTwoPi / static_cast<double>(n);
    double s = detail::wrap_angle(theta) / step;
    long k = static_cast<long>(std::floor(s));
    double tau = s - static_cast<double>(k);
    if (k >= n) {
        k -= n;
    }
    double y0 = knot(h, k);
    double y1 = knot(h, k + 1);
    double m0 = knot_slope(h, k, step) * step;
    double m1 = knot_slope(h, k + 1, step) * step;
    double t2 = tau * tau;
    double t3 = t2 * tau;
    double value = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + tau) * m0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
    double deriv = (6 * t2 - 6 * tau) * y0 + (3 * t2 - 4 * tau + 1) * m0 + (-6 * t2 + 6 * tau) * y1 + (3 * t2 - 2 * tau) * m1;
    return {value, deriv / step};
}

// Maximizer of <y, u(theta)> / h(theta); the value is the gauge of y.
std::pair<double, double> support_gauge_argmax(const SupportSampled& s, Vector y) {
    const std::size_t n = s.h.size();
    const double step = kTwoPi / static_cast<double>(n);
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        double t = step * static_cast<double>(k);
        double val = (y.dx * std::cos(t) + y.dy * std::sin(t)) / s.h[k];
        if (val > best_val) {
            best_val = val;
            best = k;
        }
    }
    double center = step * static_cast<double>(best);
    auto neg_ratio = [&](double t) { return -dot(y, unit(t)) / eval_support(s.h, t).h; };
    auto [t, v] = detail::minimize_1d(neg_ratio, center - step, center + step, 128);
    if (-v < best_val) return {center, best_val};
    return {t, -v};
}

// ---- per-variant gauge about the basepoint ----------------------------------------

double polygon_gauge_rel(const ConvexPolygon& poly, Vector y, std::size_t* active = nullptr) {
    const auto& vs = poly.vertices;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Point a = vs[i];
        Point b = vs[(i + 1) % vs.size()];
        Vector e = b - a;
        Vector normal{e.dy, -e.dx};
        double offset = dot(normal, a - poly.basepoint);
        double val = dot(normal, y) / offset;
        if (val > best) {
            best = val;
            if (active) *active = i;
        }
    }
    return best;
}

double superellipse_gauge(const Superellipse& s, Vector y) {
    double u = std::abs(y.dx / s.a);
    double w = std::abs(y.dy / s.b);
    double m = std::max(u, w);
    if (m == 0.0) return 0.0;
    return m * std::pow(std::pow(u / m, s.p) + std::pow(w / m, s.p), 1.0 / s.p);
}

double gauge_rel(const CurveSpec& c, Vector y) {
    return std::visit(
        overloaded{
            [&](const Circle& s) { return y.norm() / s.radius; },
            [&](const Ellipse& s) { return std::hypot(y.dx / s.a, y.dy / s.b); },
            [&](const Superellipse& s) { return superellipse_gauge(s, y); },
            [&](const SupportSampled& s) {
                if (y.norm2() == 0.0) return 0.0;
                return support_gauge_argmax(s, y).second;
            },
            [&](const ConvexPolygon& s) { return std::max(0.0, polygon_gauge_rel(s, y)); },
            [&](const Parabola&) -> double {
                throw Error(ErrorKind::UnboundedUnsupported, "gauge is undefined for the parabola; use signed_residual");
            },
        },
        c.shape());
}

void validate_shape(const CurveShape& shape) {
    std::visit(overloaded{
                   [](const Circle& s) {
                       if (!positive_finite(s.radius)) invalid("circle radius must be positive");
                   },
                   [](const Ellipse& s) {
                       if (!positive_finite(s.a) || !positive_finite(s.b)) invalid("ellipse semi-axes must be positive");
                   },
                   [](const Superellipse& s) {
                       if (!std::isfinite(s.p) || !(s.p > 1.0)) invalid("superellipse exponent must exceed 1");
                       if (!positive_finite(s.a) || !positive_finite(s.b)) invalid("superellipse semi-axes must be positive");
                   },
                   [](const SupportSampled& s) {
                       const std::size_t n = s.h.size();
                       if (n < 8) invalid("support samples need at least 8 values");
                       for (double v : s.h) {
                           if (!positive_finite(v)) invalid("support samples must be positive");
                       }
                       const double c = std::cos(kTwoPi / static_cast<double>(n));
                       for (std::size_t k = 0; k < n; ++k) {
                           double lhs = s.h[(k + n - 1) % n] + s.h[(k + 1) % n];
                           double rhs = 2.0 * s.h[k] * c;
                           if (lhs < rhs - 1e-12 * s.h[k]) {
                               invalid("support samples fail the convexity check at index " + std::to_string(k));
                           }
                       }
                   },
                   [](const ConvexPolygon& s) {
                       const auto& v = s.vertices;
                       if (v.size() < 3) invalid("polygon needs at least 3 vertices");
                       for (const Point& p : v) {
                           if (!is_finite(p)) invalid("polygon vertices must be finite");
                       }
                       for (std::size_t i = 0; i < v.size(); ++i) {
                           Point a = v[i];
                           Point b = v[(i + 1) % v.size()];
                           Point c = v[(i + 2) % v.size()];
                           if (orientation(a, b, c) != Orientation::Left) {
                               invalid("polygon vertices must be counterclockwise in strictly convex position");
                           }
                       }
                       // A counterclockwise turn at every vertex still admits a star; the
                       // total turning must be one full revolution.
                       double turning = 0.0;
                       for (std::size_t i = 0; i < v.size(); ++i) {
                           Vector e0 = v[(i + 1) % v.size()] - v[i];
                           Vector e1 = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
                           turning += std::atan2(cross(e0, e1), dot(e0, e1));
                       }
                       if (std::abs(turning - kTwoPi) > 1e-6) invalid("polygon is not simple");
                   },
                   [](const Parabola& s) {
                       if (!positive_finite(s.coef)) invalid("parabola coefficient must be positive");
                   },
               },
               shape);
}

}  // namespace

// ---- construction -----------------------------------------------------------------

CurveSpec make_curve(CurveShape shape) {
    if (auto* poly = std::get_if<ConvexPolygon>(&shape)) {
        Point c{0.0, 0.0};
        for (const Point& p : poly->vertices) {
            c.x += p.x;
            c.y += p.y;
        }
        if (!poly->vertices.empty()) {
            c.x /= static_cast<double>(poly->vertices.size());
            c.y /= static_cast<double>(poly->vertices.size());
        }
        poly->basepoint = c;
    }
    validate_shape(shape);
    return CurveSpec(std::move(shape));
}

CurveSpec circle(double radius) { return make_curve(Circle{radius}); }
CurveSpec ellipse(double a, double b) { return make_curve(Ellipse{a, b}); }
CurveSpec superellipse(double p, double a, double b) { return make_curve(Superellipse{p, a, b}); }
CurveSpec support_sampled(std::vector<double> h) { return make_curve(SupportSampled{std::move(h)}); }
CurveSpec convex_polygon(std::vector<Point> vertices) { return make_curve(ConvexPolygon{std::move(vertices), {}}); }
CurveSpec parabola(double coef, bool downward) { return make_curve(Parabola{coef, downward}); }

CurveSpec support_sampled_from(const CurveSpec& curve, std::size_t n) {
    std::vector<double> h(n);
    for (std::size_t k = 0; k < n; ++k) h[k] = support_function(curve, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    return support_sampled(std::move(h));
}

CurveSpec reflected(const CurveSpec& curve) {
    return std::visit(overloaded{
                          [&](const Circle&) { return curve; },
                          [&](const Ellipse&) { return curve; },
                          [&](const Superellipse&) { return curve; },
                          [&](const SupportSampled& s) {
                              const std::size_t n = s.h.size();
                              std::vector<double> h(n);
                              if (n % 2 == 0) {
                                  for (std::size_t k = 0; k < n; ++k) h[k] = s.h[(k + n / 2) % n];
                              } else {
                                  for (std::size_t k = 0; k < n; ++k) {
                                      double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
                                      h[k] = eval_support(s.h, t + std::numbers::pi).h;
                                  }
                              }
                              return support_sampled(std::move(h));
                          },
                          [&](const ConvexPolygon& s) {
                              std::vector<Point> v;
                              v.reserve(s.vertices.size());
                              for (const Point& p : s.vertices) v.push_back({-p.x, -p.y});
                              return convex_polygon(std::move(v));
                          },
                          [&](const Parabola& s) { return parabola(s.coef, !s.downward); },
                      },
                      curve.shape());
}

CurveClass classify(const CurveSpec& curve) {
    return std::visit(overloaded{
                          [](const Circle&) { return CurveClass{true, true, true}; },
                          [](const Ellipse&) { return CurveClass{true, true, true}; },
                          [](const Superellipse&) { return CurveClass{true, true, true}; },
                          [](const SupportSampled&) { return CurveClass{true, true, true}; },
                          [](const ConvexPolygon&) { return CurveClass{true, false, false}; },
                          [](const Parabola&) { return CurveClass{false, true, true}; },
                      },
                      curve.shape());
}

Point basepoint(const CurveSpec& curve) {
    if (auto* poly = std::get_if<ConvexPolygon>(&curve.shape())) return poly->basepoint;
    return origin();
}

// ---- evaluation -------------------------------------------------------------------

double support_function(const CurveSpec& curve, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return std::visit(
        overloaded{
            [&](const Circle& k) { return k.radius; },
            [&](const Ellipse& k) { return std::hypot(k.a * c, k.b * s); },
            [&](const Superellipse& k) {
                // Support of the p-ball is the dual q-norm.
                double q = k.p / (k.p - 1.0);
                return superellipse_gauge(Superellipse{q, 1.0, 1.0}, Vector{k.a * c, k.b * s});
            },
            [&](const SupportSampled& k) { return eval_support(k.h, angle).h; },
            [&](const ConvexPolygon& k) {
                double best = -std::numeric_limits<double>::infinity();
                for (const Point& p : k.vertices) best = std::max(best, p.x * c + p.y * s);
                return best;
            },
            [&](const Parabola& k) -> double {
                double sigma = k.downward ? -1.0 : 1.0;
                if (!(sigma * s < 0.0)) {
                    throw Error(ErrorKind::UnboundedUnsupported, "parabola support is infinite in this direction");
                }
                return c * c / (4.0 * k.coef * std::abs(s));
            },
        },
        curve.shape());
}

double gauge(const CurveSpec& curve, Point x) { return gauge_rel(curve, x - basepoint(curve)); }

Vector gauge_gradient(const CurveSpec& curve, Point x) {
    const Vector y = x - basepoint(curve);
    if (y.norm2() == 0.0) return {};
    return std::visit(
        overloaded{
            [&](const Circle& s) { return y / (s.radius * y.norm()); },
            [&](const Ellipse& s) {
                double g = std::hypot(y.dx / s.a, y.dy / s.b);
                return Vector{y.dx / (s.a * s.a), y.dy / (s.b * s.b)} / g;
            },
            [&](const Superellipse& s) {
                double g = superellipse_gauge(s, y);
                double u = std::abs(y.dx / s.a) / g;
                double w = std::abs(y.dy / s.b) / g;
                return Vector{std::copysign(std::pow(u, s.p - 1.0), y.dx) / s.a,
                              std::copysign(std::pow(w, s.p - 1.0), y.dy) / s.b};
            },
            [&](const SupportSampled& s) {
                double t = support_gauge_argmax(s, y).first;
                return unit(t) / eval_support(s.h, t).h;
            },
            [&](const ConvexPolygon& s) {
                std::size_t i = 0;
                polygon_gauge_rel(s, y, &i);
                Point a = s.vertices[i];
                Point b = s.vertices[(i + 1) % s.vertices.size()];
                Vector e = b - a;
                Vector normal{e.dy, -e.dx};
                return normal / dot(normal, a - s.basepoint);
            },
            [&](const Parabola&) -> Vector {
                throw Error(ErrorKind::UnboundedUnsupported, "gauge is undefined for the parabola");
            },
        },
        curve.shape());
}

double signed_residual(const CurveSpec& curve, const Placement& placement, Point x) {
    Point s = placement.to_base(x);
    if (auto* par = std::get_if<Parabola>(&curve.shape())) {
        return par->downward ? s.y + par->coef * s.x * s.x : par->coef * s.x * s.x - s.y;
    }
    if (auto* poly = std::get_if<ConvexPolygon>(&curve.shape())) {
        // Same value as gauge - 1, measured from the edges so rational data stays exact.
        const auto& vs = poly->vertices;
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Vector e = vs[(i + 1) % vs.size()] - vs[i];
            Vector normal{e.dy, -e.dx};
            best = std::max(best, dot(normal, s - vs[i]) / dot(normal, vs[i] - poly->basepoint));
        }
        return best;
    }
    return gauge(curve, s) - 1.0;
}

Point support_point(const CurveSpec& curve, Vector d) {
    double len = d.norm();
    if (!(len > 0.0)) throw Error(ErrorKind::ZeroVector, "support direction is zero");
    const Vector u = d / len;
    return std::visit(
        overloaded{
            [&](const Circle& k) { return as_point(u * k.radius); },
            [&](const Ellipse& k) {
                double n = std::hypot(k.a * u.dx, k.b * u.dy);
                return Point{k.a * k.a * u.dx / n, k.b * k.b * u.dy / n};
            },
            [&](const Superellipse& k) {
                double q = k.p / (k.p - 1.0);
                Vector w{k.a * u.dx, k.b * u.dy};
                double nq = superellipse_gauge(Superellipse{q, 1.0, 1.0}, w);
                double z1 = std::copysign(std::pow(std::abs(w.dx) / nq, q - 1.0), w.dx);
                double z2 = std::copysign(std::pow(std::abs(w.dy) / nq, q - 1.0), w.dy);
                return Point{k.a * z1, k.b * z2};
            },
            [&](const SupportSampled& k) {
                double t = std::atan2(u.dy, u.dx);
                SupportValue sv = eval_support(k.h, t);
                return as_point(u * sv.h + u.perp() * sv.dh);
            },
            [&](const ConvexPolygon& k) {
                const Point* best = &k.vertices.front();
                for (const Point& p : k.vertices) {
                    if (dot(p.as_vector(), u) > dot(best->as_vector(), u)) best = &p;
                }
                return *best;
            },
            [&](const Parabola& k) {
                double sigma = k.downward ? -1.0 : 1.0;
                if (!(sigma * u.dy < 0.0)) {
                    throw Error(ErrorKind::UnboundedUnsupported, "parabola support is infinite in this direction");
                }
                double x = u.dx / (2.0 * k.coef * std::abs(u.dy));
                return Point{x, sigma * k.coef * x * x};
            },
        },
        curve.shape());
}

Point boundary_point(const CurveSpec& curve, double t) {
    if (auto* par = std::get_if<Parabola>(&curve.shape())) {
        double sigma = par->downward ? -1.0 : 1.0;
        return {t, sigma * par->coef * t * t};
    }
    Vector u = unit(t);
    return basepoint(curve) + u / gauge_rel(curve, u);
}

BoundaryProjection boundary_project(const CurveSpec& curve, Point x, const TolerancePolicy& tol) {
    if (!is_finite(x)) throw Error(ErrorKind::DegenerateInput, "point must be finite");
    auto dist2 = [&](double t) { return (boundary_point(curve, t) - x).norm2(); };

    double lo = 0.0;
    double hi = kTwoPi;
    bool periodic = classify(curve).bounded;
    if (!periodic) {
        Point vertical = boundary_point(curve, x.x);
        double r = distance(vertical, x);
        lo = x.x - r;
        hi = x.x + r;
        if (r == 0.0) return {x.x, 0.0, vertical};
    }
    constexpr int kSamples = 720;
    const double step = (hi - lo) / kSamples;
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kSamples; ++i) {
        double v = dist2(lo + step * i);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double center = lo + step * best;
    std::uintmax_t iters = static_cast<std::uintmax_t>(tol.max_iter);
    auto [t, v] = boost::math::tools::brent_find_minima(dist2, center - step, center + step,
                                                        std::numeric_limits<double>::digits / 2, iters);
    if (iters >= static_cast<std::uintmax_t>(tol.max_iter)) {
        throw Error(ErrorKind::NoConvergence, "boundary projection did not converge");
    }
    if (v > best_val) {
        t = center;
        v = best_val;
    }
    // Brent on the squared distance stops near sqrt(eps) in t; polish on the
    // sign change of its derivative.
    auto slope = [&](double s) {
        const double h = 1e-6;
        return dot(boundary_point(curve, s) - x, boundary_point(curve, s + h) - boundary_point(curve, s - h));
    };
    const double w = 1e-6 * std::max(1.0, std::abs(t));
    if (slope(t - w) < 0.0 && slope(t + w) > 0.0) {
        std::uintmax_t it = static_cast<std::uintmax_t>(tol.max_iter);
        auto [a, b] = boost::math::tools::toms748_solve(slope, t - w, t + w, boost::math::tools::eps_tolerance<double>(),
                                                        it);
        double r = 0.5 * (a + b);
        if (double vr = dist2(r); vr < v) {
            t = r;
            v = vr;
        }
    }
    if (periodic) t = detail::wrap_angle(t);
    return {t, std::sqrt(v), boundary_point(curve, t)};
}

bool strictness_audit(const CurveSpec& curve, int samples, const TolerancePolicy& tol) {
    if (samples < 16) throw Error(ErrorKind::PreconditionFailed, "strictness audit needs at least 16 samples");
    const bool bounded = classify(curve).bounded;
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = bounded ? kTwoPi * i / samples : -4.0 + 8.0 * i / (samples - 1);
        pts.push_back(boundary_point(curve, t));
    }
    const Placement identity{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (std::abs(signed_residual(curve, identity, midpoint(pts[i], pts[j]))) <= tol.residual_tol) return false;
        }
    }
    return true;
}

double diameter(const CurveSpec& curve) {
    if (!classify(curve).bounded) return std::numeric_limits<double>::infinity();
    if (auto* poly = std::get_if<ConvexPolygon>(&curve.shape())) {
        double best = 0.0;
        for (const Point& a : poly->vertices)
            for (const Point& b : poly->vertices) best = std::max(best, distance(a, b));
        return best;
    }
    // The diameter of a convex body is its maximal width.
    auto width = [&](double t) { return -(support_function(curve, t) + support_function(curve, t + std::numbers::pi)); };
    constexpr int kSamples = 360;
    const double step = std::numbers::pi / kSamples;
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSamples; ++i) {
        double v = width(step * i);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    auto [t, v] = detail::minimize_1d(width, step * (best - 1), step * (best + 1), 128);
    return -std::min(v, best_val);
}

}  // namespace helly
