#include "polyinv/error.hpp"
#include "polyinv/laurent.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polyinv;

TEST(Parse, IndexedVariables) {
    auto p = parse("3*x1^2*x2^-1 - 2 + x2^3");
    ASSERT_EQ(p.num_vars(), 2u);
    EXPECT_EQ(p.terms().size(), 3u);
    EXPECT_EQ(p.coefficient({2, -1}), 3);
    EXPECT_EQ(p.coefficient({0, 0}), -2);
    EXPECT_EQ(p.coefficient({0, 3}), 1);
}

TEST(Parse, Cancellation) {
    auto p = parse("x1 - x1");
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(render(p), "0");
}

TEST(Parse, NamedVariables) {
    auto p = parse("a*d - b*c - 1", {"a", "b", "c", "d"});
    EXPECT_EQ(p.terms().size(), 3u);
    EXPECT_EQ(p.coefficient({1, 0, 0, 1}), 1);
    EXPECT_EQ(p.coefficient({0, 1, 1, 0}), -1);
    EXPECT_EQ(p.coefficient({0, 0, 0, 0}), -1);
}

TEST(Parse, RationalCoefficientsAndRepeatedFactors) {
    auto p = parse("3/4*x*x*y^-2 + 1/2*x^2*y^-2 + 0*x", {"x", "y"});
    EXPECT_EQ(p.coefficient({2, -2}), Rational(5, 4));
    EXPECT_EQ(p.terms().size(), 1u);
}

TEST(Parse, MinVarsPadsTheRing) {
    auto p = parse("x2", {}, 4);
    EXPECT_EQ(p.num_vars(), 4u);
    EXPECT_EQ(p.coefficient({0, 1, 0, 0}), 1);
}

TEST(Parse, ErrorsCarryPositions) {
    EXPECT_THROW(parse("x1 +* x2"), ParseError);
    EXPECT_THROW(parse("z", {"x", "y"}), ParseError);
    EXPECT_THROW(parse("x0"), ParseError);
    EXPECT_THROW(parse("x1^"), ParseError);
    try {
        parse("x + y +", {"x", "y"});
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_GE(e.column(), 7u);
    }
}

TEST(Render, CanonicalForm) {
    EXPECT_EQ(render(parse("a*d - b*c - 1", {"a", "b", "c", "d"}), {"a", "b", "c", "d"}), "a*d - b*c - 1");
    EXPECT_EQ(render(parse("-x1^-2 + 1/3")), "1/3 - x1^-2");
}

TEST(Render, RoundTripRandom) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 4;
        auto p = oracle::random_laurent(rng, n, 1 + i % 6, -5, 5);
        EXPECT_EQ(parse(render(p), {}, n), p) << render(p);
    }
}

TEST(Newton, Polytopes) {
    auto seg = newton_polytope(parse("x^-1 + x^2", {"x"}));
    EXPECT_EQ(seg, LatticePolytope::hull({{-1}, {2}}, 1));
    auto pt = newton_polytope(parse("5*x1^3*x2"));
    EXPECT_EQ(pt.affine_dim(), 0);
    EXPECT_TRUE(newton_polytope(LaurentPolynomial(3)).empty());
    for (std::size_t n = 1; n <= 3; ++n) {
        auto p = dense_polynomial(4, n, true, -1);
        EXPECT_EQ(newton_polytope(p), dilate(unit_simplex(4), n));
    }
}

TEST(ShiftPartials, Examples) {
    auto d1 = support_shift_partials(parse("x^2", {"x"}));
    ASSERT_EQ(d1.size(), 1u);
    EXPECT_EQ(d1[0], LatticePolytope::point({1}));
    auto d2 = support_shift_partials(parse("x^-1 + x^2", {"x"}));
    EXPECT_EQ(d2[0], LatticePolytope::hull({{-2}, {1}}, 1));
}

TEST(ShiftPartials, InteriorOriginKeepsVolume) {
    auto p = parse("x*y + 2*x^-1*y - x^-1*y^-1 + 5*x*y^-1 + x^2*y", {"x", "y"});
    const Integer vol = normalized_volume(newton_polytope(p));
    for (const auto& q : support_shift_partials(p)) {
        // No exponent is zero, so differentiation kills no term and each
        // partial's support is a translate of the original.
        EXPECT_EQ(normalized_volume(q), vol);
    }
}

TEST(Restrict, Examples) {
    PolySystem line(2, {parse("x + y - 1", {"x", "y"})}, {"x", "y"});
    auto r = restrict_to_stratum(line, {0});
    EXPECT_EQ(r.num_vars(), 1u);
    EXPECT_EQ(render(r[0], r.names()), "y - 1");

    const std::vector<std::string> v{"a", "b", "c", "d"};
    PolySystem sphere(4, {parse("a^2+b^2+c^2+d^2-1", v)}, v);
    auto s = restrict_to_stratum(sphere, {0, 1, 2});
    EXPECT_EQ(render(s[0], s.names()), "d^2 - 1");

    PolySystem sl2(4, {parse("a*d - b*c - 1", v)}, v);
    auto t = restrict_to_stratum(sl2, {0});
    EXPECT_EQ(t.names(), (std::vector<std::string>{"b", "c", "d"}));
    EXPECT_EQ(render(t[0], t.names()), "-b*c - 1");
}

TEST(Restrict, NegativeExponentIsDomainError) {
    PolySystem s(2, {parse("x^-1 + y", {"x", "y"})}, {"x", "y"});
    EXPECT_THROW(restrict_to_stratum(s, {0}), DomainError);
    EXPECT_NO_THROW(restrict_to_stratum(s, {1}));
    EXPECT_THROW(restrict_to_stratum(s, {2}), InputError);
}

TEST(System, Validation) {
    EXPECT_THROW(PolySystem(2, {parse("x1")}), InputError);
    EXPECT_THROW(PolySystem(1, {parse("x1")}, {"a", "b"}), InputError);
    PolySystem s(2, {parse("x1 + x2")});
    EXPECT_EQ(s.names(), indexed_names(2));
}
