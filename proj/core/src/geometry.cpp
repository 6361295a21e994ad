#include "helly/geometry.hpp"

#include <array>
#include <cmath>

#include "helly/errors.hpp"

namespace helly {

void TolerancePolicy::validate() const {
    if (!(residual_tol > 0.0) || !(cluster_tol > 0.0) || !(angle_tol > 0.0) || max_iter < 1) {
        throw Error(ErrorKind::PreconditionFailed, "tolerances must be positive and max_iter >= 1");
    }
}

Orientation orientation(Point p, Point q, Point r, const TolerancePolicy& tol) {
    double area = cross(q - p, r - p);
    if (std::abs(area) <= tol.residual_tol) return Orientation::Collinear;
    return area > 0.0 ? Orientation::Left : Orientation::Right;
}

bool parallel(Vector u, Vector w, const TolerancePolicy& tol) {
    double nu = u.norm();
    double nw = w.norm();
    if (nu <= tol.residual_tol || nw <= tol.residual_tol) {
        throw Error(ErrorKind::ZeroVector, "parallel() needs two nonzero vectors");
    }
    return std::abs(cross(u, w)) <= tol.angle_tol * nu * nw;
}

namespace {

void require_distinct(std::initializer_list<Point> pts, const TolerancePolicy& tol) {
    for (auto i = pts.begin(); i != pts.end(); ++i) {
        for (auto j = std::next(i); j != pts.end(); ++j) {
            if (distance(*i, *j) <= tol.cluster_tol) {
                throw Error(ErrorKind::DegenerateInput, "points coincide within cluster_tol");
            }
        }
    }
}

}  // namespace

bool lemma_collin_translate(Point x, Point y, Point z, Vector v, const TolerancePolicy& tol) {
    require_distinct({x, y, z}, tol);
    if (v.norm() <= tol.residual_tol) throw Error(ErrorKind::DegenerateInput, "translation vector is zero");
    const std::array<Vector, 4> vs{x - y, x - z, y - z, v};
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (parallel(vs[i], vs[j], tol)) return true;
        }
    }
    return false;
}

bool lemma_collin_homothety(Point x, Point y, Point z, const TolerancePolicy& tol) {
    require_distinct({x, y, z}, tol);
    const Point o = origin();
    return orientation(x, y, o, tol) == Orientation::Collinear || orientation(x, z, o, tol) == Orientation::Collinear ||
           orientation(y, z, o, tol) == Orientation::Collinear || orientation(x, y, z, tol) == Orientation::Collinear;
}

}  // namespace helly
