#include "polyinv/chern.hpp"
#include "polyinv/chi.hpp"
#include "polyinv/error.hpp"

#include <gtest/gtest.h>

using namespace polyinv;

namespace {

IntersectionData quadric_surface() {
    IntersectionData q;
    q.n = 2;
    q.deg_top = 2;
    q.chern = {1, 2, 2};
    q.d = 1;
    return q;
}

}  // namespace

TEST(Ring, InverseAndEvaluation) {
    auto h = RingElement::generator(3);
    auto one = RingElement::one(3);
    EXPECT_EQ(h.inverse_one_plus() * (one + h), one);
    auto cube = h * h * h;
    EXPECT_EQ(cube.evaluate(5), 5);
    EXPECT_EQ((h * h * h * h).coefficients(), RingElement(3).coefficients());
    EXPECT_THROW(one.inverse_one_plus(), DomainError);
}

TEST(Chern, TotalChernOfProjectiveSpace) {
    auto c = total_chern(projective_space(3, 1));
    EXPECT_EQ(c.coefficients(), (std::vector<Rational>{1, 4, 6, 4}));
    EXPECT_EQ(chi_manifold(projective_space(3, 1)), 4);
}

TEST(Chern, DivisorClass) {
    auto line = chern_of_divisor(projective_space(2, 1));
    EXPECT_EQ(line.evaluate(1), 2);
    EXPECT_EQ(chern_of_divisor(projective_space(3, 2)).evaluate(1), 4);
}

TEST(Chern, ChiDivisorPlaneCurves) {
    for (long d = 1; d <= 6; ++d) {
        auto data = projective_space(2, d);
        EXPECT_EQ(chi_divisor(data), 3 * d - d * d) << d;
        EXPECT_EQ(chi_divisor(data), chi_divisor_sum(data));
    }
}

TEST(Chern, ChiDivisorOther) {
    EXPECT_EQ(chi_divisor(projective_space(3, 2)), 4);
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(chi_divisor(projective_space(n, 1)), n);
    }
    EXPECT_EQ(chi_divisor(projective_space(1, 3)), 3);
}

TEST(Chern, TwoDivisors) {
    for (long d = 1; d <= 4; ++d) {
        EXPECT_EQ(chi_two_divisors(projective_space(2, 1), d, d), d * d);
    }
    EXPECT_EQ(chi_two_divisors(projective_space(3, 1), 1, 1), 2);
    EXPECT_EQ(chi_two_divisors(projective_space(3, 1), 2, 1), 2);
    EXPECT_THROW(chi_two_divisors(projective_space(1, 1), 1, 1), InputError);
    EXPECT_THROW(chi_two_divisors(projective_space(2, 1), 0, 1), InputError);
}

TEST(Chern, AffineDivisor) {
    for (std::size_t n = 2; n <= 5; ++n) {
        EXPECT_EQ(chi_affine_divisor(projective_space(n, 1)), 1);
    }
    for (std::size_t d = 1; d <= 4; ++d) {
        PolySystem curve(2, {dense_polynomial(2, d, false, 1)});
        EXPECT_EQ(chi_affine_divisor(projective_space(2, static_cast<long>(d))), chi_affine_ci(curve).total) << d;
    }
    EXPECT_THROW(chi_affine_divisor(projective_space(1, 1)), InputError);
}

TEST(Chern, Mu) {
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(mu_from_chern(projective_space(n, 1)), 0);
    }
    EXPECT_EQ(mu_from_chern(quadric_surface()), 2);
    EXPECT_THROW(mu_from_chern(quadric_surface(), 5), InputError);
}

TEST(Chern, HyperplaneAtInfinityClass) {
    for (long d = 1; d <= 4; ++d) {
        // Generic degree-d polynomial on C^2 has (d - 1)^2 critical points.
        EXPECT_EQ(mu_from_chern(projective_space(2, d)), (d - 1) * (d - 1));
        const auto same = projective_space(2, d, d);
        EXPECT_EQ(chi_affine_divisor(same), chi_divisor(same) - chi_two_divisors(same, d, d));
        EXPECT_EQ(mu_from_chern(same),
                  chi_manifold(same) - 2 * chi_divisor(same) + chi_two_divisors(same, d, d));
    }
    EXPECT_EQ(chi_affine_divisor(projective_space(2, 2, 2)), -2);
}

TEST(Chern, Validation) {
    IntersectionData bad = projective_space(2, 1);
    bad.chern = {1, 3};
    EXPECT_THROW(validate(bad), InputError);
    bad = projective_space(2, 1);
    bad.chern[0] = 2;
    EXPECT_THROW(validate(bad), InputError);
    bad = projective_space(2, 1);
    bad.d = 0;
    EXPECT_THROW(validate(bad), InputError);
    bad = projective_space(2, 1);
    bad.chern[2] = Rational(1, 2);
    EXPECT_THROW(validate(bad), InputError);
}
