#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helly/constructions.hpp"
#include "helly/covering.hpp"
#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "helly/fitting.hpp"
#include "helly/oracles.hpp"

using namespace helly;

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

std::vector<Point> pick(const std::vector<Point>& s, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    for (std::size_t i : idx) out.push_back(s[i]);
    return out;
}

// Exact relations c +- u, c +- w, c +- (w - u) around the cycle.
void expect_affine_regular(const HexagonWitness& h, double tol) {
    const Vector u = h.vertices[0] - h.center, w = h.vertices[1] - h.center;
    const std::array<Vector, 6> expected{u, w, w - u, -u, -w, u - w};
    for (std::size_t i = 0; i < 6; ++i) EXPECT_LE((h.vertices[i] - (h.center + expected[i])).norm(), tol) << i;
}

void expect_sound_witness(const CurveSpec& c, const OrderWitness& w) {
    ASSERT_EQ(w.points.size(), 4u);
    EXPECT_EQ(w.m, 3);
    for (const auto& idx : index_subsets(4, 3)) EXPECT_TRUE(cover_translate(c, pick(w.points, idx)).has_value());
    EXPECT_FALSE(cover_translate(c, w.points).has_value());
    EXPECT_EQ(w.subset_placements.size(), 4u);
    for (const auto& sp : w.subset_placements) EXPECT_LE(max_residual(c, sp.placement, pick(w.points, sp.subset)), 1e-9);
    EXPECT_GT(w.noncover_evidence.residual_floor, 1e-6);
}

}  // namespace

TEST(Hexagon, CircleIsRegular) {
    auto h = inscribe_affine_regular_hexagon(circle(1));
    EXPECT_NEAR((h.center - origin()).norm(), 0.0, 1e-12);
    for (int k = 0; k < 6; ++k) {
        Point want{std::cos(k * std::numbers::pi / 3), std::sin(k * std::numbers::pi / 3)};
        EXPECT_NEAR(distance(h.vertices[k], want), 0.0, 1e-9) << k;
    }
    EXPECT_LE(h.residual, 1e-9);
    EXPECT_EQ(h.affine_defect, 0.0);
}

TEST(Hexagon, EllipseIsAffineImage) {
    auto h = inscribe_affine_regular_hexagon(ellipse(2, 1));
    EXPECT_NEAR((h.center - origin()).norm(), 0.0, 1e-12);
    for (int k = 0; k < 6; ++k) {
        Point want{2 * std::cos(k * std::numbers::pi / 3), std::sin(k * std::numbers::pi / 3)};
        EXPECT_NEAR(distance(h.vertices[k], want), 0.0, 1e-8) << k;
    }
}

TEST(Hexagon, BuiltInBoundedVariants) {
    for (const CurveSpec& c : {circle(2.5), ellipse(1, 3), superellipse(4, 1, 1), superellipse(1.5, 2, 1),
                               support_sampled_from(ellipse(2, 1), 256)}) {
        auto h = inscribe_affine_regular_hexagon(c);
        EXPECT_LE(h.residual, 1e-8);
        for (const Point& x : h.vertices) EXPECT_LE(std::abs(signed_residual(c, {}, x)), 1e-8);
        expect_affine_regular(h, 1e-12);
        for (int i = 0; i < 3; ++i) {
            Point mid = midpoint(h.vertices[i], h.vertices[i + 3]);
            EXPECT_LE(distance(mid, h.center), 1e-12);
        }
    }
}

TEST(Hexagon, NonSymmetricSupportCurve) {
    std::vector<double> hs(256);
    for (std::size_t k = 0; k < hs.size(); ++k) {
        double t = 2 * std::numbers::pi * k / hs.size();
        hs[k] = 1 + 0.08 * std::cos(3 * t) + 0.04 * std::sin(2 * t) + 0.03 * std::cos(t);
    }
    const CurveSpec c = support_sampled(hs);
    auto h = inscribe_affine_regular_hexagon(c);
    EXPECT_LE(h.residual, 1e-8);
    for (const Point& x : h.vertices) EXPECT_LE(std::abs(signed_residual(c, {}, x)), 1e-8);
    expect_affine_regular(h, 1e-12);
}

TEST(Hexagon, UnboundedCurveIsRejected) { EXPECT_THROW(inscribe_affine_regular_hexagon(parabola(1)), Error); }

TEST(FourPointWitness, Circle) {
    auto w = four_point_witness(circle(1));
    const std::vector<Point> want{{1, 0}, {-0.5, kHalfRoot3}, {-0.5, -kHalfRoot3}, {0, 0}};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(distance(w.points[i], want[i]), 0.0, 1e-9);
    expect_sound_witness(circle(1), w);
}

TEST(FourPointWitness, EllipseIsAffineImageOfCircle) {
    auto w = four_point_witness(ellipse(2, 1));
    expect_sound_witness(ellipse(2, 1), w);
    auto base = four_point_witness(circle(1));
    std::vector<Point> back;
    for (std::size_t i = 0; i < 4; ++i) {
        Point q{w.points[i].x / 2, w.points[i].y};
        EXPECT_NEAR(distance(q, base.points[i]), 0.0, 1e-7);
        back.push_back(q);
    }
    ASSERT_TRUE(certify_order_witness(circle(1), back, 3, FitMode::Translate).has_value());
}

TEST(FourPointWitness, OtherStrictlyConvexCurves) {
    for (const CurveSpec& c : {superellipse(4, 1, 1), superellipse(3, 2, 1), circle(0.5)}) {
        expect_sound_witness(c, four_point_witness(c));
    }
}

TEST(FourPointWitness, GridOracleFindsNoTranslate) {
    auto w = four_point_witness(superellipse(4, 1, 1));
    auto r = oracles::grid_cover_search(superellipse(4, 1, 1), w.points, {{-2, -2}, {2, 2}}, 1e-2);
    EXPECT_FALSE(r.placement.has_value());
    EXPECT_GT(r.residual_floor, 1e-2);
}

TEST(FourPointWitness, PreconditionFailures) {
    EXPECT_THROW(four_point_witness(parabola(1)), Error);
    EXPECT_THROW(four_point_witness(convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), Error);
}

TEST(UnboundedWitness, UnitParabola) {
    auto w = unbounded_collinear_witness(parabola(1));
    ASSERT_EQ(w.points.size(), 3u);
    EXPECT_EQ(w.m, 2);
    EXPECT_EQ(w.points[0], (Point{0, 0}));
    EXPECT_EQ(w.points[1], (Point{1, 0}));
    EXPECT_EQ(w.points[2], (Point{2, 0}));
    ASSERT_EQ(w.subset_placements.size(), 3u);
    auto v_of = [&](std::vector<std::size_t> s) {
        for (const auto& sp : w.subset_placements)
            if (sp.subset == s) return sp.placement.v;
        ADD_FAILURE() << "missing subset";
        return Vector{};
    };
    Vector v12 = v_of({0, 1}), v13 = v_of({0, 2}), v23 = v_of({1, 2});
    EXPECT_NEAR(v12.dx, 0.5, 1e-12);
    EXPECT_NEAR(v12.dy, -0.25, 1e-12);
    EXPECT_NEAR(v23.dx, 1.5, 1e-12);
    EXPECT_NEAR(v23.dy, -0.25, 1e-12);
    EXPECT_NEAR(v13.dx, 1.0, 1e-12);
    EXPECT_NEAR(v13.dy, -1.0, 1e-12);
    for (const auto& sp : w.subset_placements) EXPECT_GT(max_residual(parabola(1), sp.placement, w.points), 1e-3);
    EXPECT_FALSE(cover_translate(parabola(1), w.points));
}

TEST(UnboundedWitness, ScaledParabola) {
    auto w = unbounded_collinear_witness(parabola(2));
    const auto& sp = w.subset_placements.front();
    ASSERT_EQ(sp.subset, (std::vector<std::size_t>{0, 1}));
    EXPECT_NEAR(sp.placement.v.dx, 0.5, 1e-12);
    EXPECT_NEAR(sp.placement.v.dy, -0.5, 1e-12);
    auto scan = oracles::parabola_pair_scan(2, {0, 0}, {1, 0});
    ASSERT_EQ(scan.size(), 1u);
    EXPECT_NEAR(scan[0].dx, 0.5, 1e-9);
    EXPECT_NEAR(scan[0].dy, -0.5, 1e-9);
}

TEST(UnboundedWitness, NeedsParabola) { EXPECT_THROW(unbounded_collinear_witness(circle(1)), Error); }

TEST(TriangleConfiguration, ThreePlacements) {
    auto cfg = triangle_three_placements();
    EXPECT_EQ(cfg.triangle, convex_polygon({{0, 0}, {2, 0}, {0, 2}}));
    EXPECT_EQ(cfg.placements.isolated.size(), 3u);
    EXPECT_TRUE(cfg.placements.continua.empty());
    std::vector<Point> triple(cfg.triple.begin(), cfg.triple.end());
    for (const Placement& p : cfg.placements.isolated) EXPECT_EQ(max_residual(cfg.triangle, p, triple), 0.0);
    auto v = translation_vectors_into(cfg.placements);
    std::sort(v.begin(), v.end(), [](Vector a, Vector b) { return a.dx != b.dx ? a.dx < b.dx : a.dy < b.dy; });
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], (Vector{0, 0}));
    EXPECT_EQ(v[1], (Vector{0, 1}));
    EXPECT_EQ(v[2], (Vector{1, 0}));
    auto oracle = oracles::polygon_arrangement_placements({{0, 0}, {2, 0}, {0, 2}}, triple[0], triple[1], triple[2]);
    EXPECT_EQ(oracle.isolated.size(), 3u);
}

TEST(TriangleConfiguration, PerturbedTripleChangesCount) {
    auto set = translate_through_three(convex_polygon({{0, 0}, {2, 0}, {0, 2}}), {0, 0}, {1, 0}, {0.1, 1});
    EXPECT_NE(set.isolated.size() + set.continua.size(), 3u);
}
