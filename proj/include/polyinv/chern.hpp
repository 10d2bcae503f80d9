#ifndef POLYINV_CHERN_HPP
#define POLYINV_CHERN_HPP

#include "polyinv/types.hpp"

#include <cstddef>
#include <vector>

namespace polyinv {

/**
 * A projective manifold M of dimension n whose Chern classes are multiples of
 * powers of one divisor class h: c_i(M) = chern[i] h^i, with h^n = deg_top.
 * D = d h is the section divisor and H_inf = h_inf h the hyperplane at infinity.
 */
struct IntersectionData {
    std::size_t n = 0;
    Integer deg_top = 1;
    std::vector<Rational> chern;
    Integer d = 1;
    Integer h_inf = 1;
};

/// Throws InputError on malformed data (see IntersectionData).
void validate(const IntersectionData& data);

/// Element of Q[h] / (h^{n+1}).
class RingElement {
public:
    explicit RingElement(std::size_t n);

    static RingElement one(std::size_t n);
    /// k h
    static RingElement generator(std::size_t n, const Rational& k = 1);
    static RingElement from_coefficients(std::vector<Rational> coeffs);

    std::size_t dimension() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    /// (1 + x)^{-1}; x must have zero constant term.
    RingElement inverse_one_plus() const;
    /// Top coefficient times deg_top.
    Rational evaluate(const Integer& deg_top) const;

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Rational& k, const RingElement& a);
    friend bool operator==(const RingElement& a, const RingElement& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// Total Chern class of M.
RingElement total_chern(const IntersectionData& data);

/// c(TM) D (1 + D)^{-1}; its top part is the Euler class of D.
RingElement chern_of_divisor(const IntersectionData& data);

/// chern[n] * deg_top.
Integer chi_manifold(const IntersectionData& data);

/// chi(D) from the top part of chern_of_divisor, checked against the explicit alternating sum.
Integer chi_divisor(const IntersectionData& data);

/// chi(D) as sum_{i=0}^{n-1} (-1)^{n-i-1} c_i(M) D^{n-i}.
Integer chi_divisor_sum(const IntersectionData& data);

/// chi(D1 . D2) for D1 = d1 h, D2 = d2 h; requires n >= 2.
Integer chi_two_divisors(const IntersectionData& data, const Integer& d1, const Integer& d2);

/// chi(D) - chi(D . H_inf): the affine part of D.
Integer chi_affine_divisor(const IntersectionData& data);

/**
 * Critical points of a generic linear function on the affine part of M:
 * (-1)^n (chi(M) - chi(H_inf) - chi(D) + chi(D . H_inf)).
 * `chi_M` must equal chi_manifold(data).
 */
Integer mu_from_chern(const IntersectionData& data, const Integer& chi_M);
Integer mu_from_chern(const IntersectionData& data);

/// Projective space data: chern[i] = binom(n+1, i), deg_top 1.
IntersectionData projective_space(std::size_t n, const Integer& d, const Integer& h_inf = 1);

}  // namespace polyinv

#endif
