#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "helly/helly.hpp"
#include "helly/intersections.hpp"
#include "helly/oracles.hpp"

using namespace helly;

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

PlacedCurve unit_at(double x, double y, double lambda = 1.0) { return {circle(1), {lambda, {x, y}}}; }

FamilySpec unit_circles(const std::vector<Point>& centers) {
    FamilySpec f{circle(1), {}, {}};
    for (const Point& c : centers) f.placements.push_back({1.0, c.as_vector()});
    return f;
}

}  // namespace

TEST(CurvePairIntersections, TwoUnitCircles) {
    auto pts = curve_pair_intersections(unit_at(0, 0), unit_at(1, 0));
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_NEAR(distance(pts[0], {0.5, -kHalfRoot3}), 0.0, 1e-9);
    EXPECT_NEAR(distance(pts[1], {0.5, kHalfRoot3}), 0.0, 1e-9);
    auto oracle = oracles::circle_pair_points({0, 0}, 1, {1, 0}, 1);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(distance(pts[i], oracle[i]), 0.0, 1e-9);
}

TEST(CurvePairIntersections, DisjointCircles) { EXPECT_TRUE(curve_pair_intersections(unit_at(0, 0), unit_at(3, 0)).empty()); }

TEST(CurvePairIntersections, InternalTangencyIsOnePoint) {
    auto pts = curve_pair_intersections(unit_at(0, 0), unit_at(1, 0, 2.0));
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_NEAR(distance(pts[0], {-1, 0}), 0.0, 1e-6);
}

TEST(CurvePairIntersections, ExternalTangencyIsOnePoint) {
    auto pts = curve_pair_intersections(unit_at(0, 0), unit_at(2, 0));
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_NEAR(distance(pts[0], {1, 0}), 0.0, 1e-6);
}

TEST(CurvePairIntersections, IdenticalPlacementThrows) {
    try {
        curve_pair_intersections(unit_at(0.5, 0.5), unit_at(0.5, 0.5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IdenticalPlacement);
    }
}

TEST(CurvePairIntersections, ParabolaPairs) {
    PlacedCurve a{parabola(1), {}};
    PlacedCurve b{parabola(1), {1.0, {1, 0}}};
    auto pts = curve_pair_intersections(a, b);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_NEAR(distance(pts[0], {0.5, 0.25}), 0.0, 1e-12);
    PlacedCurve c{parabola(1), {2.0, {0, 1}}};
    EXPECT_EQ(curve_pair_intersections(a, c).size(), 2u);
}

TEST(CurvePairIntersections, CircleAndParabola) {
    PlacedCurve par{parabola(1), {}};
    auto pts = curve_pair_intersections(unit_at(0, 1), par);
    // x^2 + (x^2 - 1)^2 = 1 gives x = 0 and x = +-1.
    ASSERT_EQ(pts.size(), 3u);
}

TEST(CurvePairIntersections, AtMostTwoAndSymmetricOnEllipse) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> logl(std::log(0.5), std::log(2.0));
    std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0, 1);
    const CurveSpec e = ellipse(2, 1);
    for (int i = 0; i < 500; ++i) {
        auto disc = [&] {
            double r = 2.0 * std::sqrt(unit(rng)), a = ang(rng);
            return Vector{r * std::cos(a), r * std::sin(a)};
        };
        PlacedCurve a{e, {std::exp(logl(rng)), disc()}};
        PlacedCurve b{e, {std::exp(logl(rng)), disc()}};
        auto ab = curve_pair_intersections(a, b);
        auto ba = curve_pair_intersections(b, a);
        ASSERT_LE(ab.size(), 2u);
        ASSERT_EQ(ab.size(), ba.size());
        for (std::size_t k = 0; k < ab.size(); ++k) {
            EXPECT_LE(distance(ab[k], ba[k]), 1e-6);
            EXPECT_LE(std::abs(signed_residual(e, a.placement, ab[k])), 1e-9);
            EXPECT_LE(std::abs(signed_residual(e, b.placement, ab[k])), 1e-9);
        }
    }
}

TEST(FamilyCommonPoint, ThreeCirclesThroughOrigin) {
    auto r = family_common_point(unit_circles({{1, 0}, {-0.5, kHalfRoot3}, {-0.5, -kHalfRoot3}}));
    ASSERT_TRUE(r.point.has_value());
    EXPECT_NEAR(distance(*r.point, {0, 0}), 0.0, 1e-9);
    ASSERT_EQ(r.residuals.size(), 3u);
    for (double res : r.residuals) EXPECT_LE(std::abs(res), 1e-9);
}

TEST(FamilyCommonPoint, DisjointFirstPairRejects) {
    auto r = family_common_point(unit_circles({{0, 0}, {3, 0}, {1, 1}}));
    EXPECT_FALSE(r.point.has_value());
    ASSERT_TRUE(r.rejected_by.has_value());
    EXPECT_EQ(*r.rejected_by, 1u);
    EXPECT_TRUE(r.candidates.points.empty());
}

TEST(FamilyCommonPoint, RejectingMemberIsReported) {
    auto r = family_common_point(unit_circles({{0, 0}, {1, 0}, {0.5, 5}}));
    EXPECT_FALSE(r.point.has_value());
    EXPECT_EQ(r.rejected_by, 2u);
    EXPECT_EQ(r.candidates.points.size(), 2u);
}

TEST(FamilyCommonPoint, SingleMember) {
    auto r = family_common_point(unit_circles({{2, 3}}));
    ASSERT_TRUE(r.point.has_value());
    EXPECT_LE(std::abs(r.residuals.at(0)), 1e-12);
}

TEST(FamilyCommonPoint, DuplicateMembersAreCollapsed) {
    auto r = family_common_point(unit_circles({{0, 0}, {0, 0}, {1, 0}}));
    ASSERT_TRUE(r.point.has_value());
    EXPECT_EQ(r.residuals.size(), 3u);
}

TEST(FamilyCommonPoint, NeedsStrictlyConvexBase) {
    FamilySpec f{convex_polygon({{0, 0}, {1, 0}, {0, 1}}), {{}, {1.0, {0.5, 0}}}, {}};
    EXPECT_THROW(family_common_point(f), Error);
}

TEST(FamilyCommonPoint, AgreesWithDenseGridOracle) {
    // Grid step 1e-3 over the box every common point must lie in, then local polish.
    std::mt19937_64 rng(32);
    const CurveSpec c = circle(1);
    int with_point = 0;
    for (int i = 0; i < 300; ++i) {
        RandomFamilyOptions opt{static_cast<std::size_t>(2 + i % 4), false, (i % 2) ? 0.02 : 0.0};
        FamilySpec fam = random_family(c, opt, rng);
        std::vector<Point> centers;
        oracles::Box box{{-1e9, -1e9}, {1e9, 1e9}};
        for (const Placement& p : fam.placements) {
            Point v = origin() + p.v;
            centers.push_back(v);
            box.lo = {std::max(box.lo.x, v.x - 1.001), std::max(box.lo.y, v.y - 1.001)};
            box.hi = {std::min(box.hi.x, v.x + 1.001), std::min(box.hi.y, v.y + 1.001)};
        }
        bool kernel = family_common_point(fam).point.has_value();
        bool oracle = box.lo.x <= box.hi.x && box.lo.y <= box.hi.y &&
                      oracles::grid_cover_search(c, centers, box, 1e-3).placement.has_value();
        EXPECT_EQ(kernel, oracle) << "family " << i;
        with_point += kernel;
    }
    EXPECT_GT(with_point, 100);
    EXPECT_LT(with_point, 300);
}
