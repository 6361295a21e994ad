#include <gtest/gtest.h>

#include "helly/constructions.hpp"
#include "helly/covering.hpp"
#include "helly/curves.hpp"
#include "helly/errors.hpp"
#include "helly/fitting.hpp"
#include "helly/helly.hpp"
#include "helly_tools/io.hpp"
#include "helly_tools/svg.hpp"

using namespace helly;

namespace {

// Serialize, print, reparse: the text layer is part of the round trip.
io::json reparse(const io::json& j) { return io::json::parse(j.dump()); }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidCurve;
}

}  // namespace

TEST(JsonRoundTrip, Curves) {
    for (const CurveSpec& c : {circle(1.5), ellipse(2, 1), superellipse(3.5, 1, 2), support_sampled_from(circle(1), 64),
                               convex_polygon({{0, 0}, {2, 0}, {0, 2}}), parabola(2), parabola(1, true)}) {
        EXPECT_EQ(io::curve_from_json(reparse(io::to_json(c))), c);
    }
    EXPECT_EQ(io::to_json(circle(1)), (io::json{{"kind", "circle"}, {"radius", 1.0}}));
}

TEST(JsonRoundTrip, SolutionSets) {
    auto s = translate_through_two(circle(1), {0, 0}, {1, 0});
    EXPECT_EQ(io::solution_set_from_json(reparse(io::to_json(s))), s);
    auto square = translate_through_three(convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {0, 0}, {0.5, 0}, {0.25, 1});
    ASSERT_FALSE(square.continua.empty());
    EXPECT_EQ(io::solution_set_from_json(reparse(io::to_json(square))), square);
}

TEST(JsonRoundTrip, Families) {
    FamilySpec f{ellipse(2, 1), {{1.0, {0, 0}}, {1.0, {0.1, 0.3}}}, {"a", "b"}};
    EXPECT_EQ(io::family_from_json(reparse(io::to_json(f))), f);
    f.labels.clear();
    EXPECT_EQ(io::family_from_json(reparse(io::to_json(f))), f);
}

TEST(JsonRoundTrip, Witnesses) {
    auto h = inscribe_affine_regular_hexagon(superellipse(4, 1, 1));
    EXPECT_EQ(io::hexagon_from_json(reparse(io::to_json(h))), h);
    auto w = four_point_witness(ellipse(2, 1));
    EXPECT_EQ(io::witness_from_json(reparse(io::to_json(w))), w);
}

TEST(JsonRoundTrip, HellyReports) {
    FamilySpec f{circle(1), {{1.0, {1, 0}}, {1.0, {-0.5, 0.8660254037844386}}, {1.0, {-0.5, -0.8660254037844386}}, {}},
                 {}};
    for (std::size_t k : {2u, 3u, 4u}) {
        auto r = helly_check(f, k);
        auto back = io::helly_report_from_json(reparse(io::to_json(r)));
        EXPECT_EQ(back.k, r.k);
        EXPECT_EQ(back.subsets_checked, r.subsets_checked);
        EXPECT_EQ(back.all_k_wise, r.all_k_wise);
        EXPECT_EQ(back.first_failing_subset, r.first_failing_subset);
        EXPECT_EQ(back.global_point, r.global_point);
        EXPECT_EQ(back.all_but_one_point, r.all_but_one_point);
        EXPECT_EQ(back.theorem_predicts_global, r.theorem_predicts_global);
        EXPECT_EQ(back.consistent, r.consistent);
    }
}

TEST(JsonInput, PointsInBothShapes) {
    auto bare = io::points_from_json(io::json::parse("[[0,0],[1,2.5]]"));
    auto wrapped = io::points_from_json(io::json::parse(R"({"points": [[0,0],[1,2.5]]})"));
    ASSERT_EQ(bare.size(), 2u);
    EXPECT_EQ(bare, wrapped);
    EXPECT_EQ(bare[1], (Point{1, 2.5}));
}

TEST(JsonInput, MalformedDocuments) {
    using io::json;
    EXPECT_EQ(kind_of([] { io::curve_from_json(json::parse(R"({"radius": 1})")); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::curve_from_json(json::parse(R"({"kind": "blob"})")); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::curve_from_json(json::parse(R"({"kind": "circle", "radius": "one"})")); }),
              ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::curve_from_json(json::parse(R"({"kind": "support", "n": 3, "h": [1,1]})")); }),
              ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::point_from_json(json::parse("[1]")); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::placement_from_json(json::parse(R"({"lambda": -1, "v": [0,0]})")); }),
              ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::family_from_json(json::parse(R"({"base": {"kind":"circle","radius":1}, "placements": []})")); }),
              ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([] { io::read_json_file("/nonexistent/curve.json"); }), ErrorKind::MalformedInput);
}

TEST(JsonInput, IllegalCurveParameters) {
    EXPECT_EQ(kind_of([] { io::curve_from_json(io::json::parse(R"({"kind": "circle", "radius": -1})")); }),
              ErrorKind::InvalidCurve);
    EXPECT_EQ(kind_of([] { io::curve_from_json(io::json::parse(R"({"kind": "superellipse", "p": 0.5, "a": 1, "b": 1})")); }),
              ErrorKind::InvalidCurve);
}

TEST(Svg, DrawsCurvesAndMarkers) {
    svg::Drawing d;
    d.add_curve(circle(1), {});
    d.add_curve(parabola(1), {1.0, {0.5, -1}});
    d.add_marker({0, 0}, "c");
    std::string s = d.str();
    EXPECT_NE(s.find("<svg"), std::string::npos);
    EXPECT_NE(s.find("<polygon"), std::string::npos);
    EXPECT_NE(s.find("<polyline"), std::string::npos);
    EXPECT_NE(s.find(">c</text>"), std::string::npos);
    EXPECT_EQ(s, d.str());
}
