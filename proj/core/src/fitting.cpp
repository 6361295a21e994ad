#include "helly/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <tuple>

#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "numerics.hpp"

namespace helly {

namespace {

void require_finite(std::initializer_list<Point> pts) {
    for (const Point& p : pts) {
        if (!is_finite(p)) throw Error(ErrorKind::DegenerateInput, "points must be finite");
    }
}

void require_distinct(std::initializer_list<Point> pts, const TolerancePolicy& tol) {
    require_finite(pts);
    for (auto i = pts.begin(); i != pts.end(); ++i)
        for (auto j = std::next(i); j != pts.end(); ++j)
            if (distance(*i, *j) <= tol.cluster_tol) throw Error(ErrorKind::DegenerateInput, "points coincide within cluster_tol");
}

double cluster_scale(const CurveSpec& curve) {
    double d = diameter(curve);
    return std::isfinite(d) ? d : 1.0;
}

double placement_gap(const Placement& a, const Placement& b, double diam) {
    return (a.v - b.v).norm() + std::abs(a.lambda - b.lambda) * diam;
}

// ---- exact polygon arrangement ----------------------------------------------------

struct Segment {
    Point a;
    Point b;
};

struct Crossing {
    std::optional<Point> point;
    std::optional<Segment> overlap;
};

Crossing intersect_segments(const Segment& s1, const Segment& s2, const TolerancePolicy& tol) {
    const Vector r = s1.b - s1.a;
    const Vector s = s2.b - s2.a;
    const double lr = r.norm();
    const double ls = s.norm();
    const double scale = std::max({1.0, std::abs(s1.a.x), std::abs(s1.a.y), std::abs(s2.a.x), std::abs(s2.a.y)});
    const double eps = 1e-12;
    const double denom = cross(r, s);
    Crossing out;
    if (std::abs(denom) > tol.angle_tol * lr * ls) {
        const Vector ca = s2.a - s1.a;
        const double t = cross(ca, s) / denom;
        const double u = cross(ca, r) / denom;
        if (t >= -eps && t <= 1.0 + eps && u >= -eps && u <= 1.0 + eps) {
            out.point = s1.a + r * std::clamp(t, 0.0, 1.0);
        }
        return out;
    }
    // Parallel: only collinear overlaps matter.
    if (std::abs(cross(r, s2.a - s1.a)) / lr > eps * scale) return out;
    double t0 = dot(s2.a - s1.a, r) / (lr * lr);
    double t1 = dot(s2.b - s1.a, r) / (lr * lr);
    double lo = std::max(0.0, std::min(t0, t1));
    double hi = std::min(1.0, std::max(t0, t1));
    if (hi < lo - eps) return out;
    if ((hi - lo) * lr <= tol.cluster_tol) {
        out.point = s1.a + r * (0.5 * (lo + hi));
    } else {
        out.overlap = Segment{s1.a + r * lo, s1.a + r * hi};
    }
    return out;
}

// {v : x - v on the polygon boundary}
std::vector<Segment> placement_locus(const ConvexPolygon& poly, Point x) {
    std::vector<Segment> segs;
    const auto& vs = poly.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        segs.push_back({x - vs[i].as_vector(), x - vs[(i + 1) % vs.size()].as_vector()});
    }
    return segs;
}

double point_segment_distance(Point x, const Segment& s) {
    Vector d = s.b - s.a;
    double len2 = d.norm2();
    double t = len2 > 0.0 ? std::clamp(dot(x - s.a, d) / len2, 0.0, 1.0) : 0.0;
    return distance(x, s.a + d * t);
}

PlacementSegment to_continuum(const Segment& s) {
    Vector d = s.b - s.a;
    double len = d.norm();
    return {1.0, s.a.as_vector(), d / len, len};
}

Segment from_continuum(const PlacementSegment& c) {
    return {as_point(c.v0), as_point(c.v0 + c.direction * c.length)};
}

SolutionSet assemble(std::vector<Point> points, std::vector<Segment> segments, const TolerancePolicy& tol) {
    // Orient every segment canonically, drop duplicates and points on segments.
    for (Segment& s : segments) {
        if (s.b < s.a) std::swap(s.a, s.b);
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& x, const Segment& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    std::vector<Segment> unique_segments;
    for (const Segment& s : segments) {
        bool dup = std::any_of(unique_segments.begin(), unique_segments.end(), [&](const Segment& u) {
            return distance(u.a, s.a) <= tol.cluster_tol && distance(u.b, s.b) <= tol.cluster_tol;
        });
        if (!dup) unique_segments.push_back(s);
    }
    std::vector<Placement> placements;
    for (const Point& p : points) {
        bool on_segment = std::any_of(unique_segments.begin(), unique_segments.end(),
                                      [&](const Segment& s) { return point_segment_distance(p, s) <= tol.cluster_tol; });
        if (!on_segment) placements.push_back({1.0, p.as_vector()});
    }
    SolutionSet out;
    out.isolated = deduplicate(std::move(placements), 0.0, tol);
    for (const Segment& s : unique_segments) out.continua.push_back(to_continuum(s));
    return out;
}

SolutionSet polygon_pair(const ConvexPolygon& poly, Point p, Point q, const TolerancePolicy& tol) {
    auto lp = placement_locus(poly, p);
    auto lq = placement_locus(poly, q);
    std::vector<Point> points;
    std::vector<Segment> segments;
    for (const Segment& a : lp) {
        for (const Segment& b : lq) {
            Crossing c = intersect_segments(a, b, tol);
            if (c.point) points.push_back(*c.point);
            if (c.overlap) segments.push_back(*c.overlap);
        }
    }
    return assemble(std::move(points), std::move(segments), tol);
}

// ---- smooth bounded curves --------------------------------------------------------

SolutionSet smooth_pair(const CurveSpec& curve, Point p, Point q, const TolerancePolicy& tol) {
    const Vector d = q - p;
    auto f = [&](double t) { return gauge(curve, boundary_point(curve, t) + d) - 1.0; };
    detail::MarchOptions opt;
    opt.zero_tol = tol.residual_tol;
    opt.max_iter = tol.max_iter;
    std::vector<Placement> found;
    for (double t : detail::periodic_roots(f, opt)) {
        Placement pl{1.0, p - boundary_point(curve, t)};
        if (max_residual(curve, pl, {p, q}) <= tol.residual_tol) found.push_back(pl);
    }
    SolutionSet out;
    out.isolated = deduplicate(std::move(found), cluster_scale(curve), tol);
    return out;
}

SolutionSet parabola_pair(const Parabola& par, Point p, Point q) {
    const double sigma = par.downward ? -1.0 : 1.0;
    const double k = sigma * par.coef;
    SolutionSet out;
    const double dx = p.x - q.x;
    if (std::abs(dx) <= 1e-15 * std::max({1.0, std::abs(p.x), std::abs(q.x)})) return out;
    const double vx = 0.5 * (p.x + q.x) - (p.y - q.y) / (2.0 * k * dx);
    const double vy = p.y - k * (p.x - vx) * (p.x - vx);
    out.isolated.push_back({1.0, {vx, vy}});
    return out;
}

// ---- homothet through three points ------------------------------------------------

struct TripleSystem {
    const CurveSpec& curve;
    Point p, q, r;

    std::array<double, 3> gauges(Vector v) const {
        return {gauge(curve, p - v), gauge(curve, q - v), gauge(curve, r - v)};
    }
    double bisector(Vector v) const { return gauge(curve, p - v) - gauge(curve, q - v); }
    Vector bisector_grad(Vector v) const { return gauge_gradient(curve, q - v) - gauge_gradient(curve, p - v); }
    double second(Vector v) const { return gauge(curve, q - v) - gauge(curve, r - v); }

    // F(v) and its Jacobian.
    void eval(Vector v, double f[2], double jac[2][2]) const {
        double gp = gauge(curve, p - v);
        double gq = gauge(curve, q - v);
        double gr = gauge(curve, r - v);
        Vector dp = gauge_gradient(curve, p - v);
        Vector dq = gauge_gradient(curve, q - v);
        Vector dr = gauge_gradient(curve, r - v);
        f[0] = gp - gq;
        f[1] = gq - gr;
        jac[0][0] = dq.dx - dp.dx;
        jac[0][1] = dq.dy - dp.dy;
        jac[1][0] = dr.dx - dq.dx;
        jac[1][1] = dr.dy - dq.dy;
    }

    double relative_residual(Vector v) const {
        auto g = gauges(v);
        double lambda = (g[0] + g[1] + g[2]) / 3.0;
        if (!(lambda > 0.0)) return std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (double gi : g) worst = std::max(worst, std::abs(gi / lambda - 1.0));
        return worst;
    }

    /// Damped Newton on F(v) = 0.
    std::optional<Vector> newton(Vector v, int max_iter, double residual_tol) const {
        double f[2];
        double jac[2][2];
        eval(v, f, jac);
        double norm2 = f[0] * f[0] + f[1] * f[1];
        for (int it = 0; it < max_iter; ++it) {
            if (!is_finite(v)) return std::nullopt;
            double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
            if (!(std::abs(det) > 0.0) || !std::isfinite(det)) return std::nullopt;
            Vector step{-(jac[1][1] * f[0] - jac[0][1] * f[1]) / det, -(-jac[1][0] * f[0] + jac[0][0] * f[1]) / det};
            double alpha = 1.0;
            Vector next;
            double fn[2];
            double jn[2][2];
            double next_norm2 = 0.0;
            for (;;) {
                next = v + step * alpha;
                eval(next, fn, jn);
                next_norm2 = fn[0] * fn[0] + fn[1] * fn[1];
                if (next_norm2 < (1.0 - 1e-4 * alpha) * norm2 || alpha < 1e-10) break;
                alpha *= 0.5;
            }
            bool stalled = !(next_norm2 < norm2);
            if (!stalled) {
                v = next;
                f[0] = fn[0];
                f[1] = fn[1];
                std::copy(&jn[0][0], &jn[0][0] + 4, &jac[0][0]);
                norm2 = next_norm2;
            }
            double scale = 1.0 + v.norm();
            if (stalled || (step * alpha).norm() <= 1e-15 * scale || norm2 == 0.0) break;
        }
        // F stays bounded away from zero at infinity, where the relative
        // residual alone would accept huge homothets.
        // Far out every gauge difference rounds to zero, so runaways are cut off.
        const double reach = 1e6 * std::max({distance(p, q), distance(q, r), distance(p, r)});
        if ((v - (p - origin())).norm() > reach) return std::nullopt;
        if (std::sqrt(norm2) <= residual_tol && relative_residual(v) <= residual_tol) return v;
        return std::nullopt;
    }

    /// Marches the (p, q) bisector in both directions from its point on the
    /// segment pq and refines the first crossing of the (q, r) bisector.
    std::vector<Vector> trace(const TolerancePolicy& tol) const {
        const double gpq = gauge(curve, as_point(q - p));
        const double gqp = gauge(curve, as_point(p - q));
        const Point seed_pt = p + (q - p) * (gpq / (gpq + gqp));
        const Vector seed = seed_pt.as_vector();
        const double span = std::max({distance(p, q), distance(q, r), distance(p, r)});

        auto correct = [&](Vector v) -> std::optional<Vector> {
            for (int k = 0; k < 30; ++k) {
                double g = bisector(v);
                Vector grad = bisector_grad(v);
                double scale = gauge(curve, p - v) + 1e-300;
                if (std::abs(g) <= 1e-13 * scale) return v;
                double n2 = grad.norm2();
                if (!(n2 > 0.0)) return std::nullopt;
                v = v - grad * (g / n2);
            }
            return std::abs(bisector(v)) <= 1e-9 * gauge(curve, p - v) ? std::optional<Vector>(v) : std::nullopt;
        };

        std::vector<Vector> found;
        for (double dir : {1.0, -1.0}) {
            Vector v = seed;
            Vector grad0 = bisector_grad(v);
            if (!(grad0.norm2() > 0.0)) break;
            Vector prev_tan = grad0.perp() / grad0.norm() * dir;
            double s_prev = second(v);
            if (s_prev == 0.0) {
                found.push_back(v);
                break;
            }
            double h = 0.05 * span;
            for (int step = 0; step < 20000; ++step) {
                double travelled = (v - seed).norm();
                if (travelled > 1e7 * span || h < 1e-13 * span) break;
                Vector grad = bisector_grad(v);
                Vector tan = grad.perp() / grad.norm();
                if (dot(tan, prev_tan) < 0.0) tan = -tan;
                auto corrected = correct(v + tan * h);
                if (!corrected || (*corrected - v).norm() > 2.0 * h) {
                    h *= 0.5;
                    continue;
                }
                Vector next = *corrected;
                double s_next = second(next);
                if (s_prev * s_next <= 0.0) {
                    if (auto root = refine_crossing(v, next, s_prev, correct, tol)) found.push_back(*root);
                    break;
                }
                prev_tan = tan;
                v = next;
                s_prev = s_next;
                h = std::min(2.0 * h, 0.1 * std::max(span, (v - seed).norm()));
            }
            if (!found.empty()) break;
        }
        return found;
    }

    template <class Correct>
    std::optional<Vector> refine_crossing(Vector a, Vector b, double sa, Correct&& correct,
                                          const TolerancePolicy& tol) const {
        if (auto v = newton(a + (b - a) * 0.5, tol.max_iter, tol.residual_tol)) {
            if ((*v - a).norm() <= 4.0 * (b - a).norm()) return v;
        }
        // Bisection along the chord, projected back onto the (p, q) bisector.
        for (int it = 0; it < 200 && (b - a).norm() > 1e-14 * (1.0 + a.norm()); ++it) {
            auto mid = correct(a + (b - a) * 0.5);
            if (!mid) return std::nullopt;
            double sm = second(*mid);
            if (sa * sm <= 0.0) {
                b = *mid;
            } else {
                a = *mid;
                sa = sm;
            }
        }
        Vector guess = a + (b - a) * 0.5;
        if (auto v = newton(guess, tol.max_iter, tol.residual_tol)) return v;
        if (relative_residual(guess) <= tol.residual_tol) return guess;
        return std::nullopt;
    }
};

}  // namespace

// ---- public API -------------------------------------------------------------------

double max_residual(const CurveSpec& curve, const Placement& placement, const std::vector<Point>& points) {
    double worst = 0.0;
    for (const Point& x : points) worst = std::max(worst, std::abs(signed_residual(curve, placement, x)));
    return worst;
}

std::vector<Placement> deduplicate(std::vector<Placement> placements, double curve_diameter, const TolerancePolicy& tol) {
    std::sort(placements.begin(), placements.end(), [](const Placement& a, const Placement& b) {
        return std::tie(a.v.dx, a.v.dy, a.lambda) < std::tie(b.v.dx, b.v.dy, b.lambda);
    });
    std::vector<Placement> out;
    for (const Placement& pl : placements) {
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const Placement& o) { return placement_gap(o, pl, curve_diameter) <= tol.cluster_tol; });
        if (!dup) out.push_back(pl);
    }
    return out;
}

SolutionSet translate_through_two(const CurveSpec& curve, Point p, Point q, const TolerancePolicy& tol) {
    require_distinct({p, q}, tol);
    if (auto* par = std::get_if<Parabola>(&curve.shape())) return parabola_pair(*par, p, q);
    if (auto* poly = std::get_if<ConvexPolygon>(&curve.shape())) return polygon_pair(*poly, p, q, tol);
    return smooth_pair(curve, p, q, tol);
}

SolutionSet translate_through_three(const CurveSpec& curve, Point p, Point q, Point r, const TolerancePolicy& tol) {
    require_distinct({p, q, r}, tol);
    if (curve.is<ConvexPolygon>()) return polygon_restrict(curve, translate_through_two(curve, p, q, tol), r, tol);
    SolutionSet pair = translate_through_two(curve, p, q, tol);
    SolutionSet out;
    for (const Placement& pl : pair.isolated) {
        if (std::abs(signed_residual(curve, pl, r)) <= tol.residual_tol) out.isolated.push_back(pl);
    }
    return out;
}

HomothetFitReport homothet_through_three_report(const CurveSpec& curve, Point p, Point q, Point r,
                                                const TolerancePolicy& tol, const HomothetFitOptions& opt) {
    CurveClass cls = classify(curve);
    if (!cls.bounded || !cls.strictly_convex) {
        throw Error(ErrorKind::PreconditionFailed, "homothet fitting needs a strictly convex bounded curve");
    }
    require_distinct({p, q, r}, tol);
    if (orientation(p, q, r, tol) == Orientation::Collinear) {
        throw Error(ErrorKind::CollinearInput, "a bounded convex curve carries no three collinear points");
    }
    const TripleSystem sys{curve, p, q, r};
    const double diam = cluster_scale(curve);

    std::vector<Vector> converged = sys.trace(tol);

    std::mt19937_64 rng(opt.seed);
    const double xmin = std::min({p.x, q.x, r.x});
    const double xmax = std::max({p.x, q.x, r.x});
    const double ymin = std::min({p.y, q.y, r.y});
    const double ymax = std::max({p.y, q.y, r.y});
    std::uniform_real_distribution<double> ux(xmin, xmax);
    std::uniform_real_distribution<double> uy(ymin, ymax);
    for (int s = 0; s < opt.starts; ++s) {
        Vector start{ux(rng), uy(rng)};
        if (auto v = sys.newton(start, tol.max_iter, tol.residual_tol)) converged.push_back(*v);
    }

    HomothetFitReport report;
    report.converged = static_cast<int>(converged.size());
    if (converged.empty()) return report;

    auto to_placement = [&](Vector v) {
        auto g = sys.gauges(v);
        return Placement{(g[0] + g[1] + g[2]) / 3.0, v};
    };
    std::vector<Placement> sols;
    for (Vector v : converged) sols.push_back(to_placement(v));
    for (std::size_t i = 0; i < sols.size(); ++i) {
        for (std::size_t j = i + 1; j < sols.size(); ++j) {
            // Gaps scale with the homothet, so large fits are compared in their own units.
            double scale = std::max({1.0, sols[i].lambda, sols[j].lambda});
            report.cluster_diameter = std::max(report.cluster_diameter, placement_gap(sols[i], sols[j], diam) / scale);
        }
    }
    if (report.cluster_diameter > tol.cluster_tol) {
        throw Error(ErrorKind::TheoremViolation, "two distinct homothets carry the same three points");
    }
    const Placement& best = sols.front();
    if (max_residual(curve, best, {p, q, r}) <= tol.residual_tol) report.solutions.isolated.push_back(best);
    return report;
}

SolutionSet homothet_through_three(const CurveSpec& curve, Point p, Point q, Point r, const TolerancePolicy& tol,
                                   const HomothetFitOptions& opt) {
    return homothet_through_three_report(curve, p, q, r, tol, opt).solutions;
}

SolutionSet polygon_translates_of_triple(const CurveSpec& polygon, Point p, Point q, Point r, const TolerancePolicy& tol) {
    if (!polygon.is<ConvexPolygon>()) throw Error(ErrorKind::PreconditionFailed, "expected a convex polygon");
    require_distinct({p, q, r}, tol);
    if (orientation(p, q, r, tol) == Orientation::Collinear) {
        throw Error(ErrorKind::DegenerateInput, "triple is collinear");
    }
    return polygon_restrict(polygon, polygon_pair(polygon.as<ConvexPolygon>(), p, q, tol), r, tol);
}

SolutionSet polygon_restrict(const CurveSpec& polygon, const SolutionSet& set, Point x, const TolerancePolicy& tol) {
    if (!polygon.is<ConvexPolygon>()) throw Error(ErrorKind::PreconditionFailed, "expected a convex polygon");
    const auto& poly = polygon.as<ConvexPolygon>();
    std::vector<Point> points;
    std::vector<Segment> segments;
    for (const Placement& pl : set.isolated) {
        if (std::abs(signed_residual(polygon, pl, x)) <= tol.residual_tol) points.push_back(as_point(pl.v));
    }
    auto locus = placement_locus(poly, x);
    for (const PlacementSegment& c : set.continua) {
        Segment seg = from_continuum(c);
        for (const Segment& l : locus) {
            Crossing hit = intersect_segments(seg, l, tol);
            if (hit.point) points.push_back(*hit.point);
            if (hit.overlap) segments.push_back(*hit.overlap);
        }
    }
    return assemble(std::move(points), std::move(segments), tol);
}

std::vector<Vector> translation_vectors_into(const SolutionSet& set) {
    std::vector<Vector> out;
    for (const Placement& pl : set.isolated) {
        if (pl.lambda != 1.0) throw Error(ErrorKind::MixedRatios, "translation vectors need translate placements");
        out.push_back(-pl.v);
    }
    std::sort(out.begin(), out.end(), [](Vector a, Vector b) { return std::tie(a.dx, a.dy) < std::tie(b.dx, b.dy); });
    return out;
}

}  // namespace helly
