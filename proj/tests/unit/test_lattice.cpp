#include "polyinv/error.hpp"
#include "polyinv/lattice.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace polyinv;

namespace {

LatticePolytope hull2(std::initializer_list<LatticePoint> pts) { return LatticePolytope::hull(pts, 2); }

}  // namespace

TEST(Hull, SquareWithDuplicateAndInteriorPoints) {
    auto p = hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
    EXPECT_EQ(p.vertices().size(), 4u);
    EXPECT_EQ(p.affine_dim(), 2);
    auto q = LatticePolytope::hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}}, 2);
    EXPECT_EQ(q.vertices().size(), 4u);
}

TEST(Hull, UnitFourSimplex) {
    auto p = LatticePolytope::hull({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4);
    EXPECT_EQ(p.affine_dim(), 4);
    EXPECT_EQ(p.vertices().size(), 5u);
    EXPECT_EQ(p, unit_simplex(4));
}

TEST(Hull, VerticesAreSorted) {
    auto p = hull2({{1, 1}, {0, 0}, {1, 0}, {0, 1}});
    EXPECT_TRUE(std::is_sorted(p.vertices().begin(), p.vertices().end()));
}

TEST(Hull, LowerDimensionalInputs) {
    auto seg = LatticePolytope::hull({{0, 0, 0}, {1, 1, 1}, {3, 3, 3}, {2, 2, 2}}, 3);
    EXPECT_EQ(seg.affine_dim(), 1);
    EXPECT_EQ(seg.vertices().size(), 2u);
    auto pt = LatticePolytope::hull({{5, -1}, {5, -1}}, 2);
    EXPECT_EQ(pt.affine_dim(), 0);
    auto empty = LatticePolytope::hull({}, 3);
    EXPECT_TRUE(empty.empty());
    EXPECT_EQ(empty.affine_dim(), -1);
    auto tri3 = LatticePolytope::hull({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3);
    EXPECT_EQ(tri3.affine_dim(), 2);
    EXPECT_EQ(tri3.vertices().size(), 4u);
}

TEST(Hull, DimensionMismatchIsInputError) {
    EXPECT_THROW(LatticePolytope::hull({{0, 0}, {1, 0, 0}}, 2), InputError);
}

TEST(Hull, RandomPointsMatchBruteForceVertexTest) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        auto pts = oracle::random_points(rng, 3, 30, -5, 5);
        auto p = LatticePolytope::hull(pts, 3);
        EXPECT_EQ(p.vertices(), oracle::extreme_points(pts)) << "trial " << trial;
    }
}

TEST(Volume, Basics) {
    for (std::size_t d = 1; d <= 5; ++d) {
        EXPECT_EQ(normalized_volume(unit_simplex(d)), 1) << d;
    }
    EXPECT_EQ(normalized_volume(dilate(unit_simplex(4), 2)), 16);
    EXPECT_EQ(normalized_volume(hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})), 2);
    EXPECT_EQ(normalized_volume(LatticePolytope::hull({{0, 0}, {3, 3}}, 2)), 0);
    EXPECT_THROW(normalized_volume(LatticePolytope(2)), DomainError);
}

TEST(Volume, CubeAndCrossPolytope) {
    std::vector<LatticePoint> cube, cross;
    for (int m = 0; m < 8; ++m) {
        cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
    }
    for (std::size_t i = 0; i < 3; ++i) {
        cross.push_back(LatticePoint::unit(3, i));
        cross.push_back(Integer(-1) * LatticePoint::unit(3, i));
    }
    EXPECT_EQ(normalized_volume(LatticePolytope::hull(cube, 3)), 6);
    EXPECT_EQ(normalized_volume(LatticePolytope::hull(cross, 3)), 8);
}

TEST(Volume, MatchesShoelaceInThePlane) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto pts = oracle::random_points(rng, 2, 3 + trial % 6, -6, 6);
        auto p = LatticePolytope::hull(pts, 2);
        if (!p.full_dimensional()) {
            continue;
        }
        EXPECT_EQ(normalized_volume(p), oracle::shoelace_twice_area(pts));
    }
}

TEST(Minkowski, Basics) {
    auto a = hull2({{0, 0}, {1, 0}});
    auto b = hull2({{0, 0}, {0, 1}});
    EXPECT_EQ(minkowski_sum(a, b), hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    auto tri = hull2({{0, 0}, {2, 0}, {0, 3}});
    EXPECT_EQ(minkowski_sum(tri, LatticePolytope::point({4, -1})), translate(tri, {4, -1}));
    EXPECT_THROW(minkowski_sum(tri, LatticePolytope(2)), DomainError);
    EXPECT_THROW(minkowski_sum(tri, unit_simplex(3)), InputError);
}

TEST(Minkowski, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto pa = oracle::random_points(rng, 2, 4, -4, 4);
        auto pb = oracle::random_points(rng, 2, 4, -4, 4);
        auto sum = minkowski_sum(LatticePolytope::hull(pa, 2), LatticePolytope::hull(pb, 2));
        EXPECT_EQ(sum.vertices(), oracle::naive_minkowski(pa, pb));
    }
}

TEST(Dilate, ZeroAndNegative) {
    auto tri = hull2({{1, 1}, {2, 1}, {1, 3}});
    EXPECT_EQ(dilate(tri, 0), LatticePolytope::point({0, 0}));
    EXPECT_EQ(dilate(tri, 3).vertices().size(), 3u);
    EXPECT_THROW(dilate(tri, -1), InputError);
}

TEST(Dilate, DistributesOverSums) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        auto P = LatticePolytope::hull(oracle::random_points(rng, 3, 5, -2, 2), 3);
        for (long a = 0; a <= 2; ++a) {
            EXPECT_EQ(dilate(P, a + 2), minkowski_sum(dilate(P, a), dilate(P, 2)));
        }
    }
}

TEST(Face, SupportingFaces) {
    auto sq = hull2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ(face(sq, {1, 0}), hull2({{0, 0}, {0, 1}}));
    EXPECT_EQ(face(sq, {-1, -1}), LatticePolytope::point({1, 1}));
    EXPECT_EQ(face(unit_simplex(4), {1, 1, 1, 1}), LatticePolytope::point({0, 0, 0, 0}));
    EXPECT_EQ(face(sq, {0, 0}), sq);
    EXPECT_THROW(face(sq, {1, 0, 0}), InputError);
}

TEST(Facets, NormalsSupportTheirVertices) {
    auto cube_pts = std::vector<LatticePoint>{};
    for (int m = 0; m < 8; ++m) {
        cube_pts.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
    }
    auto cube = LatticePolytope::hull(cube_pts, 3);
    auto fs = facets(cube);
    EXPECT_EQ(fs.size(), 6u);
    for (const auto& f : fs) {
        EXPECT_EQ(f.vertex_indices.size(), 4u);
        for (const auto& v : cube.vertices()) {
            EXPECT_GE(f.offset + dot(f.normal, v), 0);
        }
    }
}

TEST(OriginInterior, Examples) {
    EXPECT_TRUE(contains_origin_interior(hull2({{1, 0}, {-1, 1}, {-1, -1}})));
    EXPECT_FALSE(contains_origin_interior(hull2({{1, 0}, {2, 0}})));
    EXPECT_FALSE(contains_origin_interior(hull2({{0, 0}, {1, 0}, {0, 1}})));
}

TEST(OriginInterior, AgreesWithLpOracle) {
    std::mt19937_64 rng(5);
    int positives = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto pts = oracle::random_points(rng, 3, 4 + trial % 5, -3, 3);
        auto p = LatticePolytope::hull(pts, 3);
        const bool expected = oracle::origin_strictly_interior(pts, 3);
        positives += expected ? 1 : 0;
        EXPECT_EQ(contains_origin_interior(p), expected) << "trial " << trial;
    }
    EXPECT_GT(positives, 0);
}
