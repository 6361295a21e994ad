#include "helly/covering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "helly/intersections.hpp"
#include "numerics.hpp"

namespace helly {

namespace {

using detail::kTwoPi;

std::vector<Point> unique_points(const std::vector<Point>& points, const TolerancePolicy& tol) {
    if (points.empty()) throw Error(ErrorKind::PreconditionFailed, "point set is empty");
    std::vector<Point> out;
    for (const Point& p : points) {
        if (!is_finite(p)) throw Error(ErrorKind::DegenerateInput, "points must be finite");
        bool dup = std::any_of(out.begin(), out.end(), [&](const Point& o) { return distance(o, p) <= tol.cluster_tol; });
        if (!dup) out.push_back(p);
    }
    return out;
}

std::pair<std::size_t, std::size_t> farthest_pair(const std::vector<Point>& pts) {
    std::pair<std::size_t, std::size_t> best{0, 1};
    double best_d = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d = distance(pts[i], pts[j]);
            if (d > best_d) {
                best_d = d;
                best = {i, j};
            }
        }
    }
    return best;
}

bool carries_all(const CurveSpec& curve, const Placement& pl, const std::vector<Point>& pts, const TolerancePolicy& tol) {
    return max_residual(curve, pl, pts) <= tol.residual_tol;
}

Placement slide_through(const CurveSpec& curve, Point p) { return {1.0, p - boundary_point(curve, 0.0)}; }

std::vector<Point> scaled(const std::vector<Point>& pts, double lambda) {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const Point& p : pts) out.push_back({p.x / lambda, p.y / lambda});
    return out;
}

// Ratio search for point sets without a non-collinear triple: the feasible
// ratios form a ray [lambda*, inf), so double until feasible, then bisect.
std::optional<Placement> homothet_by_ratio_search(const CurveSpec& curve, const std::vector<Point>& pts,
                                                  const TolerancePolicy& tol) {
    auto attempt = [&](double lambda) -> std::optional<Placement> {
        TolerancePolicy t = tol;
        t.cluster_tol = tol.cluster_tol / lambda;
        auto pl = cover_translate(curve, scaled(pts, lambda), t);
        if (!pl) return std::nullopt;
        Placement out{lambda, pl->v * lambda};
        if (!carries_all(curve, out, pts, tol)) return std::nullopt;
        return out;
    };
    if (auto pl = attempt(1.0)) return pl;
    double lo = 1.0;
    double hi = 2.0;
    std::optional<Placement> best;
    for (int k = 0; k < 64 && !best; ++k, lo = hi, hi *= 2.0) best = attempt(hi);
    if (!best) return std::nullopt;
    for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (auto pl = attempt(mid)) {
            hi = mid;
            best = pl;
        } else {
            lo = mid;
        }
    }
    return best;
}

}  // namespace

std::string_view to_string(FitMode mode) { return mode == FitMode::Translate ? "translate" : "homothet"; }

FitMode fit_mode_from_string(std::string_view name) {
    if (name == "translate") return FitMode::Translate;
    if (name == "homothet") return FitMode::Homothet;
    throw Error(ErrorKind::MalformedInput, "mode must be translate or homothet");
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::optional<Placement> cover_translate(const CurveSpec& curve, const std::vector<Point>& points,
                                         const TolerancePolicy& tol) {
    const auto pts = unique_points(points, tol);
    if (pts.size() == 1) return slide_through(curve, pts.front());
    auto [i, j] = farthest_pair(pts);
    SolutionSet set = translate_through_two(curve, pts[i], pts[j], tol);
    if (curve.is<ConvexPolygon>()) {
        for (std::size_t k = 0; k < pts.size() && !set.empty(); ++k) {
            if (k != i && k != j) set = polygon_restrict(curve, set, pts[k], tol);
        }
        if (!set.isolated.empty()) return set.isolated.front();
        if (!set.continua.empty()) return set.continua.front().at(0.0);
        return std::nullopt;
    }
    for (const Placement& pl : set.isolated) {
        if (carries_all(curve, pl, pts, tol)) return pl;
    }
    return std::nullopt;
}

std::optional<Placement> cover_homothet(const CurveSpec& curve, const std::vector<Point>& points,
                                        const TolerancePolicy& tol, const HomothetFitOptions& opt) {
    CurveClass cls = classify(curve);
    if (!cls.bounded || !cls.strictly_convex) {
        throw Error(ErrorKind::PreconditionFailed, "homothet covering needs a strictly convex bounded curve");
    }
    const auto pts = unique_points(points, tol);
    if (pts.size() == 1) return slide_through(curve, pts.front());

    auto [i, j] = farthest_pair(pts);
    std::size_t k = pts.size();
    double best_area = -1.0;
    for (std::size_t c = 0; c < pts.size(); ++c) {
        if (c == i || c == j) continue;
        double area = std::abs(cross(pts[j] - pts[i], pts[c] - pts[i]));
        if (area > best_area) {
            best_area = area;
            k = c;
        }
    }
    if (k == pts.size()) return homothet_by_ratio_search(curve, pts, tol);
    // A line meets a strictly convex curve at most twice.
    if (orientation(pts[i], pts[j], pts[k], tol) == Orientation::Collinear) return std::nullopt;
    SolutionSet fit = homothet_through_three(curve, pts[i], pts[j], pts[k], tol, opt);
    for (const Placement& pl : fit.isolated) {
        if (carries_all(curve, pl, pts, tol)) return pl;
    }
    return std::nullopt;
}

std::optional<Placement> cover(const CurveSpec& curve, const std::vector<Point>& points, FitMode mode,
                               const TolerancePolicy& tol) {
    return mode == FitMode::Translate ? cover_translate(curve, points, tol) : cover_homothet(curve, points, tol);
}

double coverage_residual_floor(const CurveSpec& curve, const std::vector<Point>& points, FitMode mode, int starts,
                               std::uint64_t seed) {
    if (points.empty()) throw Error(ErrorKind::PreconditionFailed, "point set is empty");
    const bool bounded = classify(curve).bounded;
    double curve_size = bounded ? diameter(curve) : 1.0;
    double set_size = 0.0;
    for (const Point& a : points)
        for (const Point& b : points) set_size = std::max(set_size, distance(a, b));

    auto worst = [&](const Placement& pl) {
        double w = max_residual(curve, pl, points);
        return std::isfinite(w) ? w : std::numeric_limits<double>::max();
    };
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::uniform_real_distribution<double> abscissa(-2.0, 2.0);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    std::uniform_real_distribution<double> log_ratio(std::log(1.0 / 3.0), std::log(3.0));
    const double ratio_center = bounded && set_size > 0.0 ? std::max(set_size / curve_size, 1e-3) : 1.0;

    double floor = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        Point anchor = points[pick(rng)];
        Point on_curve = boundary_point(curve, bounded ? angle(rng) : abscissa(rng));
        if (mode == FitMode::Translate) {
            Vector v0 = anchor - on_curve;
            auto f = [&](const std::array<double, 2>& x) { return worst({1.0, {x[0], x[1]}}); };
            auto [x, val] = detail::nelder_mead<2>(f, {v0.dx, v0.dy}, 0.05 * std::max(1.0, curve_size), 600);
            floor = std::min(floor, val);
        } else {
            double lambda = ratio_center * std::exp(log_ratio(rng));
            Vector v0 = anchor - on_curve.as_vector() * lambda - origin();
            auto f = [&](const std::array<double, 3>& x) { return worst({std::exp(x[2]), {x[0], x[1]}}); };
            auto [x, val] = detail::nelder_mead<3>(f, {v0.dx, v0.dy, std::log(lambda)}, 0.05 * lambda * curve_size, 900);
            floor = std::min(floor, val);
        }
    }
    return floor;
}

std::optional<OrderWitness> certify_order_witness(const CurveSpec& curve, const std::vector<Point>& points, int m,
                                                  FitMode mode, const TolerancePolicy& tol, std::uint64_t seed) {
    if (m < 2 || points.size() != static_cast<std::size_t>(m) + 1) {
        throw Error(ErrorKind::PreconditionFailed, "a witness for order m needs exactly m+1 points");
    }
    OrderWitness w;
    w.points = points;
    w.m = m;
    w.mode = mode;
    try {
        for (const auto& subset : index_subsets(points.size(), static_cast<std::size_t>(m))) {
            std::vector<Point> sub;
            for (std::size_t idx : subset) sub.push_back(points[idx]);
            auto pl = cover(curve, sub, mode, tol);
            if (!pl) return std::nullopt;
            w.subset_placements.push_back({subset, *pl});
        }
        if (cover(curve, points, mode, tol)) return std::nullopt;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::TheoremViolation) throw;
        return std::nullopt;
    }
    constexpr int kStarts = 100;
    w.noncover_evidence.starts = kStarts;
    w.noncover_evidence.residual_floor = coverage_residual_floor(curve, points, mode, kStarts, seed);
    // A floor at tolerance level means the minimizer found a cover the fit missed.
    if (w.noncover_evidence.residual_floor <= 10.0 * tol.residual_tol) return std::nullopt;
    return w;
}

std::optional<OrderWitness> order_witness_search(const CurveSpec& curve, int m, FitMode mode, int trials,
                                                 std::uint64_t seed, const TolerancePolicy& tol) {
    if (m < 2 || trials < 1) throw Error(ErrorKind::PreconditionFailed, "need m >= 2 and trials >= 1");
    const CurveClass cls = classify(curve);
    const std::size_t count = static_cast<std::size_t>(m) + 1;
    const double radius = cls.bounded ? 0.5 * diameter(curve) : 1.0;
    const Point center = cls.bounded ? basepoint(curve) : Point{0.0, 1.0};

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };

    // Candidate generators; bounded curves cycle through all four, the
    // parabola through the last three.
    auto random_cloud = [&] {
        std::vector<Point> pts;
        double r = radius * uniform(0.1, 0.9);
        while (pts.size() < count) {
            double t = uniform(0.0, kTwoPi);
            double s = r * std::sqrt(unit(rng));
            pts.push_back(center + Vector{std::cos(t), std::sin(t)} * s);
        }
        return pts;
    };
    auto collinear = [&] {
        std::vector<Point> pts;
        double t = uniform(0.0, std::numbers::pi);
        if (!cls.bounded) t = uniform(-1.2, 1.2);  // keep abscissae distinct on the parabola
        Vector dir{std::cos(t), std::sin(t)};
        Point base = center + Vector{uniform(-0.2, 0.2), uniform(-0.2, 0.2)} * radius;
        double s = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            pts.push_back(base + dir * s);
            s += radius * uniform(0.1, 0.5);
        }
        return pts;
    };
    auto on_curve_plus_one = [&] {
        std::vector<Point> pts;
        double lambda = mode == FitMode::Homothet ? std::exp(uniform(-0.5, 0.5)) : 1.0;
        Placement pl{lambda, Vector{uniform(-0.3, 0.3), uniform(-0.3, 0.3)} * radius};
        while (pts.size() + 1 < count) {
            double t = cls.bounded ? uniform(0.0, kTwoPi) : uniform(-2.0, 2.0);
            pts.push_back(pl.apply(boundary_point(curve, t)));
        }
        pts.push_back(center + Vector{uniform(-0.5, 0.5), uniform(-0.5, 0.5)} * radius);
        return pts;
    };
    // Vertices and centre of an affine hexagon grown from a random boundary
    // point u: w lies on C and on C + u. Inscribed whenever C is centrally symmetric.
    auto hexagon_subset = [&]() -> std::vector<Point> {
        double t = uniform(0.0, kTwoPi);
        Point u = boundary_point(curve, t);
        Vector uv = u - center;
        std::vector<Point> w_candidates;
        try {
            w_candidates = curve_pair_intersections({curve, {}}, {curve, {1.0, uv}}, tol);
        } catch (const Error&) {
            return {};
        }
        if (w_candidates.empty()) return {};
        Point w = w_candidates.front();
        for (const Point& c : w_candidates)
            if (cross(uv, c - center) > 0.0) w = c;
        Vector wv = w - center;
        std::vector<Point> hex{center + uv, center + wv, center + (wv - uv), center - uv, center - wv,
                               center + (uv - wv)};
        if (count == 4) return {hex[0], hex[2], hex[4], center};
        std::vector<Point> pool = hex;
        pool.push_back(center);
        std::shuffle(pool.begin(), pool.end(), rng);
        if (pool.size() < count) return {};
        pool.resize(count);
        return pool;
    };

    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Point> candidate;
        int strategy = cls.bounded ? trial % 4 : 1 + trial % 3;
        switch (strategy) {
            case 0: candidate = hexagon_subset(); break;
            case 1: candidate = collinear(); break;
            case 2: candidate = random_cloud(); break;
            default: candidate = on_curve_plus_one(); break;
        }
        if (candidate.size() != count) continue;
        if (auto w = certify_order_witness(curve, candidate, m, mode, tol, seed + static_cast<std::uint64_t>(trial))) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace helly
