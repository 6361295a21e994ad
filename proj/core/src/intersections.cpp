#include "helly/intersections.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "numerics.hpp"

namespace helly {

namespace {

bool same_placement(const PlacedCurve& a, const PlacedCurve& b, const TolerancePolicy& tol) {
    if (!(a.base == b.base)) return false;
    double diam = diameter(a.base);
    if (!std::isfinite(diam)) diam = 1.0;
    return (a.placement.v - b.placement.v).norm() + std::abs(a.placement.lambda - b.placement.lambda) * diam <=
           tol.cluster_tol;
}

std::vector<Point> cluster_points(std::vector<Point> pts, const TolerancePolicy& tol) {
    std::sort(pts.begin(), pts.end());
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool dup = std::any_of(out.begin(), out.end(), [&](const Point& o) { return distance(o, p) <= tol.cluster_tol; });
        if (!dup) out.push_back(p);
    }
    return out;
}

// y = v.y + alpha * (x - v.x)^2 for a placed parabola.
double parabola_alpha(const PlacedCurve& c) {
    const auto& par = c.base.as<Parabola>();
    return (par.downward ? -par.coef : par.coef) / c.placement.lambda;
}

std::vector<Point> parabola_pair(const PlacedCurve& a, const PlacedCurve& b) {
    const double aa = parabola_alpha(a);
    const double ab = parabola_alpha(b);
    const double xa = a.placement.v.dx;
    const double xb = b.placement.v.dx;
    const double ya = a.placement.v.dy;
    const double yb = b.placement.v.dy;
    const double qa = aa - ab;
    const double qb = -2.0 * (aa * xa - ab * xb);
    const double qc = aa * xa * xa - ab * xb * xb + ya - yb;
    std::vector<double> xs;
    const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc), 1e-300});
    if (std::abs(qa) <= 1e-14 * scale) {
        if (std::abs(qb) <= 1e-14 * scale) {
            if (std::abs(qc) <= 1e-14 * scale) throw Error(ErrorKind::IdenticalPlacement, "parabolas coincide");
            return {};
        }
        xs.push_back(-qc / qb);
    } else {
        double disc = qb * qb - 4.0 * qa * qc;
        if (disc < 0.0) return {};
        double sq = std::sqrt(disc);
        // Numerically stable pair of roots.
        double qq = -0.5 * (qb + std::copysign(sq, qb));
        if (qq != 0.0) {
            xs.push_back(qq / qa);
            xs.push_back(qc / qq);
        } else {
            xs.push_back(0.0);
        }
    }
    std::vector<Point> out;
    for (double x : xs) out.push_back({x, ya + aa * (x - xa) * (x - xa)});
    return out;
}

std::vector<Point> march_pair(const PlacedCurve& marched, const PlacedCurve& other, const TolerancePolicy& tol) {
    auto point_at = [&](double t) { return marched.placement.apply(boundary_point(marched.base, t)); };
    auto f = [&](double t) { return signed_residual(other.base, other.placement, point_at(t)); };
    detail::MarchOptions opt;
    opt.zero_tol = tol.residual_tol;
    opt.max_iter = tol.max_iter;
    std::vector<Point> pts;
    for (double t : detail::periodic_roots(f, opt)) pts.push_back(point_at(t));
    return pts;
}

}  // namespace

std::vector<Point> curve_pair_intersections(const PlacedCurve& a, const PlacedCurve& b, const TolerancePolicy& tol) {
    if (same_placement(a, b, tol)) throw Error(ErrorKind::IdenticalPlacement, "the two curves coincide");
    const bool a_bounded = classify(a.base).bounded;
    const bool b_bounded = classify(b.base).bounded;
    std::vector<Point> pts;
    if (!a_bounded && !b_bounded) {
        pts = parabola_pair(a, b);
    } else if (a_bounded) {
        pts = march_pair(a, b, tol);
    } else {
        pts = march_pair(b, a, tol);
    }
    pts = cluster_points(std::move(pts), tol);
    if (pts.size() > 2 && a.base == b.base && classify(a.base).strictly_convex) {
        throw Error(ErrorKind::TheoremViolation, "two distinct homothets of a strictly convex curve meet in " +
                                                     std::to_string(pts.size()) + " points");
    }
    return pts;
}

IntersectionCache::IntersectionCache(const FamilySpec& family, const TolerancePolicy& tol) : family_(family), tol_(tol) {
    if (family_.placements.empty()) throw Error(ErrorKind::PreconditionFailed, "family has no members");
    if (!classify(family_.base).strictly_convex) {
        throw Error(ErrorKind::PreconditionFailed, "candidate filtering needs a strictly convex base");
    }
    const std::size_t n = family_.size();
    canonical_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        canonical_[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
            if (canonical_[j] == j && same_placement(family_.member(i), family_.member(j), tol_)) {
                canonical_[i] = j;
                break;
            }
        }
    }
}

const std::vector<Point>& IntersectionCache::pair(std::size_t i, std::size_t j) {
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = pairs_.find(key);
    if (it == pairs_.end()) {
        it = pairs_.emplace(key, curve_pair_intersections(family_.member(key.first), family_.member(key.second), tol_)).first;
    }
    return it->second;
}

CommonPointResult IntersectionCache::common_point(const std::vector<std::size_t>& members) {
    if (members.empty()) throw Error(ErrorKind::PreconditionFailed, "empty sub-family");
    std::vector<std::size_t> distinct;
    for (std::size_t m : members) {
        std::size_t c = canonical_.at(m);
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
    }

    CommonPointResult result;
    auto residuals_at = [&](Point x) {
        std::vector<double> res;
        for (std::size_t m : members) res.push_back(signed_residual(family_.base, family_.placements[m], x));
        return res;
    };

    if (distinct.size() == 1) {
        const Placement& pl = family_.placements[distinct.front()];
        Point x = pl.apply(boundary_point(family_.base, 0.0));
        result.point = x;
        result.residuals = residuals_at(x);
        result.candidates = {{x}, {distinct.front(), distinct.front()}};
        return result;
    }

    result.candidates.source = {distinct[0], distinct[1]};
    result.candidates.points = pair(distinct[0], distinct[1]);
    std::vector<Point> alive = result.candidates.points;
    if (alive.empty()) {
        result.rejected_by = distinct[1];
        return result;
    }
    for (std::size_t k = 2; k < distinct.size(); ++k) {
        const Placement& pl = family_.placements[distinct[k]];
        std::erase_if(alive, [&](const Point& x) {
            return std::abs(signed_residual(family_.base, pl, x)) > tol_.residual_tol;
        });
        if (alive.empty()) {
            result.rejected_by = distinct[k];
            return result;
        }
    }
    result.point = alive.front();
    result.residuals = residuals_at(alive.front());
    return result;
}

CommonPointResult family_common_point(const FamilySpec& family, const TolerancePolicy& tol) {
    IntersectionCache cache(family, tol);
    std::vector<std::size_t> all(family.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return cache.common_point(all);
}

}  // namespace helly
