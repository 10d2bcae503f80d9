#include "polyinv/chi.hpp"
#include "polyinv/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polyinv;

namespace {

const std::vector<std::string> kVars{"a", "b", "c", "d"};

PolySystem sl2_system(std::size_t n) {
    return PolySystem(4, {parse("a^2+b^2+c^2+d^2-1", kVars), dense_polynomial(4, n, true, -1)}, kVars);
}

}  // namespace

TEST(Series, GeometricFraction) {
    auto g = ChiSeries::geometric_fraction(1, 4, 0);
    EXPECT_EQ(g.coefficient({1}), 1);
    EXPECT_EQ(g.coefficient({2}), -1);
    EXPECT_EQ(g.coefficient({3}), 1);
    EXPECT_EQ(g.coefficient({4}), -1);
    EXPECT_EQ(g.coefficient({0}), 0);
    auto x = ChiSeries::symbol(1, 4, 0);
    EXPECT_EQ(x.inverse_one_plus() * (ChiSeries::one(1, 4) + x), ChiSeries::one(1, 4));
}

TEST(Series, TruncationDropsHighDegrees) {
    auto x = ChiSeries::symbol(2, 2, 0);
    auto y = ChiSeries::symbol(2, 2, 1);
    auto p = x * x * y;
    EXPECT_TRUE(p.coefficients().empty());
    EXPECT_EQ((x * y).coefficient({1, 1}), 1);
}

TEST(Evaluate, Examples) {
    const auto D = unit_simplex(4);
    ChiSeries s(1, 4);
    s.add_term({4}, 1);
    auto P = dilate(D, 3);
    EXPECT_EQ(evaluate_series(s, {P}), normalized_volume(P));

    for (long n = 1; n <= 4; ++n) {
        ChiSeries t(2, 4);
        t.add_term({1, 3}, 1);
        EXPECT_EQ(evaluate_series(t, {dilate(D, 2), dilate(D, n)}), Rational(2 * n * n * n));
    }

    ChiSeries low(1, 4);
    low.add_term({2}, 7);
    EXPECT_EQ(evaluate_series(low, {D}), 0);
}

TEST(ChiTorus, Examples) {
    const auto D4 = unit_simplex(4);
    const auto D3 = unit_simplex(3);
    for (long m = 1; m <= 5; ++m) {
        EXPECT_EQ(chi_torus_ci({dilate(D4, 2), dilate(D4, m)}), 2 * m * m * m + 4 * m * m + 8 * m);
        EXPECT_EQ(chi_torus_ci({dilate(D3, 2), dilate(D3, m)}), -2 * m * m - 4 * m);
    }
    for (long d = 1; d <= 5; ++d) {
        EXPECT_EQ(chi_torus_ci({LatticePolytope::hull({{0}, {d}}, 1)}), d);
    }
}

TEST(ChiTorus, HypersurfaceSign) {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int i = 0; i < 4; ++i) {
            auto P = oracle::random_full_polytope(rng, n, 3, 2);
            const Integer v = normalized_volume(P);
            EXPECT_EQ(chi_torus_ci({P}), n % 2 == 1 ? v : Integer(-v));
        }
    }
}

TEST(ChiTorus, Errors) {
    EXPECT_THROW(chi_torus_ci({}), InputError);
    EXPECT_THROW(chi_torus_ci({unit_simplex(1), unit_simplex(1)}), DomainError);
}

TEST(ChiAffine, Sl2Section) {
    for (long n = 1; n <= 3; ++n) {
        const auto chi = chi_affine_ci(sl2_system(n));
        EXPECT_EQ(chi.total, 2 * n * n * n - 4 * n * n + 4 * n) << n;
        ASSERT_EQ(chi.strata.size(), 16u);
        for (const auto& s : chi.strata) {
            switch (s.zero_set.size()) {
                case 0: EXPECT_EQ(s.chi, 2 * n * n * n + 4 * n * n + 8 * n); break;
                case 1: EXPECT_EQ(s.chi, -2 * n * n - 4 * n); break;
                case 2: EXPECT_EQ(s.chi, 2 * n); break;
                default: EXPECT_EQ(s.chi, 0); EXPECT_FALSE(s.reason.empty());
            }
        }
    }
}

TEST(ChiAffine, StrataLabels) {
    const auto chi = chi_affine_ci(sl2_system(1));
    EXPECT_EQ(chi.strata.front().label, "Z_{}");
    bool found = false;
    for (const auto& s : chi.strata) {
        found = found || s.label == "Z_{ab}";
    }
    EXPECT_TRUE(found);
}

TEST(ChiAffine, Line) {
    PolySystem line(2, {parse("x + y - 1", {"x", "y"})}, {"x", "y"});
    const auto chi = chi_affine_ci(line);
    EXPECT_EQ(chi.total, 1);
    ASSERT_EQ(chi.strata.size(), 4u);
    EXPECT_EQ(chi.strata[0].chi, -1);
    EXPECT_EQ(chi.strata[1].chi, 1);
    EXPECT_EQ(chi.strata[2].chi, 1);
    EXPECT_EQ(chi.strata[3].chi, 0);
    EXPECT_EQ(chi.strata[3].reason, "nonzero constant equation");
}

TEST(ChiAffine, Univariate) {
    for (std::size_t m = 1; m <= 6; ++m) {
        PolySystem s(1, {dense_polynomial(1, m, false, 1)});
        EXPECT_EQ(chi_affine_ci(s).total, m);
    }
}

TEST(ChiAffine, Conic) {
    PolySystem s(2, {dense_polynomial(2, 2, false, 1)});
    EXPECT_EQ(chi_affine_ci(s).total, 0);
}

TEST(ChiAffine, Errors) {
    EXPECT_THROW(chi_affine_ci(PolySystem(1, {parse("x1^-1 + 1")})), DomainError);
    EXPECT_THROW(chi_affine_ci(PolySystem(2, {parse("x1*x2 + x1")})), GenericityError);
    EXPECT_THROW(chi_affine_ci(PolySystem(1, {})), InputError);
}
