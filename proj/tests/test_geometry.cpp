#include <gtest/gtest.h>

#include <random>

#include "helly/errors.hpp"
#include "helly/geometry.hpp"

using namespace helly;

TEST(Orientation, UnitTriangleIsLeft) { EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), Orientation::Left); }

TEST(Orientation, PointsOnALineAreCollinear) { EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 0}), Orientation::Collinear); }

TEST(Orientation, ReflectedTriangleIsRight) { EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), Orientation::Right); }

TEST(Orientation, AreaBelowToleranceIsCollinear) {
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 1e-10}), Orientation::Collinear);
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 1e-8}), Orientation::Left);
}

TEST(Orientation, SwappingTwoArgumentsFlipsTheSign) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
        if (std::abs(cross(q - p, r - p)) <= 1e-9) continue;
        Orientation a = orientation(p, q, r);
        Orientation b = orientation(q, p, r);
        ASSERT_NE(a, Orientation::Collinear);
        EXPECT_NE(a, b);
        EXPECT_NE(b, Orientation::Collinear);
    }
}

TEST(Parallel, Examples) {
    EXPECT_TRUE(parallel({1, 0}, {3, 0}));
    EXPECT_FALSE(parallel({1, 0}, {0, 1}));
    EXPECT_TRUE(parallel({1, 1}, {-2, -2}));
}

TEST(Parallel, ZeroVectorThrows) {
    try {
        parallel({0, 0}, {1, 0});
        FAIL() << "expected ZeroVector";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
    }
}

TEST(Parallel, SymmetricAndScaleInvariant) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-3, 3);
    std::uniform_real_distribution<double> s(0.1, 10);
    for (int i = 0; i < 1000; ++i) {
        Vector a{u(rng), u(rng)}, b{u(rng), u(rng)};
        if (i % 3 == 0) b = a * -2.5;
        bool ab = parallel(a, b);
        EXPECT_EQ(ab, parallel(b, a));
        EXPECT_EQ(ab, parallel(a * s(rng), b * s(rng)));
    }
}

TEST(LemmaCollinTranslate, Examples) {
    EXPECT_TRUE(lemma_collin_translate({0, 0}, {1, 0}, {2, 1}, {3, 0}));
    EXPECT_FALSE(lemma_collin_translate({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    EXPECT_TRUE(lemma_collin_translate({0, 0}, {2, 0}, {1, 1}, {1, -1}));
}

TEST(LemmaCollinTranslate, CoincidentPointsAreDegenerate) {
    try {
        lemma_collin_translate({0, 0}, {0, 0}, {1, 1}, {1, 0});
        FAIL() << "expected DegenerateInput";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
    }
}

TEST(LemmaCollinHomothety, Examples) {
    EXPECT_TRUE(lemma_collin_homothety({1, 0}, {2, 0}, {0, 1}));
    EXPECT_FALSE(lemma_collin_homothety({1, 0}, {0, 1}, {1, 1}));
    EXPECT_TRUE(lemma_collin_homothety({1, 1}, {2, 2}, {5, 0}));
}

TEST(LemmaCollinHomothety, CoincidentPointsAreDegenerate) {
    EXPECT_THROW(lemma_collin_homothety({1, 0}, {1, 0}, {0, 1}), Error);
}

TEST(TolerancePolicy, DefaultsAndValidation) {
    TolerancePolicy tol;
    EXPECT_EQ(tol.residual_tol, 1e-9);
    EXPECT_EQ(tol.cluster_tol, 1e-6);
    EXPECT_EQ(tol.angle_tol, 1e-9);
    EXPECT_EQ(tol.max_iter, 128);
    EXPECT_NO_THROW(tol.validate());
    tol.max_iter = 0;
    EXPECT_THROW(tol.validate(), Error);
    tol = {};
    tol.residual_tol = 0.0;
    EXPECT_THROW(tol.validate(), Error);
}

TEST(PointVector, Arithmetic) {
    Point p{1, 2};
    Vector v{3, -1};
    EXPECT_EQ(p + v, (Point{4, 1}));
    EXPECT_EQ((Point{4, 1}) - p, v);
    EXPECT_DOUBLE_EQ(cross({1, 0}, {0, 1}), 1.0);
    EXPECT_DOUBLE_EQ(dot({1, 2}, {3, 4}), 11.0);
}
