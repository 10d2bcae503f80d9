#ifndef POLYINV_LAURENT_HPP
#define POLYINV_LAURENT_HPP

#include "polyinv/lattice.hpp"
#include "polyinv/types.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polyinv {

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponent = std::vector<std::int64_t>;

/**
 * Laurent polynomial sum c_a x^a with exact rational coefficients.
 * Zero coefficients are never stored, so the term map is canonical.
 */
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static LaurentPolynomial constant(std::size_t num_vars, const Rational& c);
    static LaurentPolynomial monomial(const Exponent& exponent, const Rational& c = 1);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Nonzero constant (only the zero exponent present).
    bool is_nonzero_constant() const;
    /// Adds c x^exponent, dropping the term if it cancels.
    void add_term(const Exponent& exponent, const Rational& c);
    Rational coefficient(const Exponent& exponent) const;

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t num_vars_;
    TermMap terms_;
};

/// Polynomials sharing one set of variables; `names` label the variables for I/O.
class PolySystem {
public:
    PolySystem() = default;
    PolySystem(std::size_t num_vars, std::vector<LaurentPolynomial> polys, std::vector<std::string> names = {});

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t size() const noexcept { return polys_.size(); }
    const std::vector<LaurentPolynomial>& polys() const noexcept { return polys_; }
    const LaurentPolynomial& operator[](std::size_t i) const { return polys_.at(i); }
    /// Variable names; defaults to x1..xn.
    const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const PolySystem& a, const PolySystem& b) {
        return a.num_vars_ == b.num_vars_ && a.polys_ == b.polys_;
    }

private:
    std::size_t num_vars_ = 0;
    std::vector<LaurentPolynomial> polys_;
    std::vector<std::string> names_;
};

/// x1, ..., xn.
std::vector<std::string> indexed_names(std::size_t num_vars);

/**
 * Parses the polynomial grammar:
 *
 *     poly   := [sign] term (sign term)*
 *     term   := factor ('*' factor)*
 *     factor := integer ['/' integer] | name ['^' exponent]
 *     exponent := [sign] integer | '(' [sign] integer ')'
 *
 * Whitespace is ignored. With an empty `names` list, variables must be
 * spelled x1, x2, ... and the variable count is the largest index seen
 * (or `min_vars` if larger). Throws ParseError with a 1-based line/column.
 */
LaurentPolynomial parse(std::string_view text, const std::vector<std::string>& names = {}, std::size_t min_vars = 0);

/// Canonical text form; parse(render(p, names), names) == p.
std::string render(const LaurentPolynomial& p, const std::vector<std::string>& names = {});

/// Hull of the exponents; the zero polynomial maps to the empty polytope.
LatticePolytope newton_polytope(const LaurentPolynomial& p);

/// Formal partial derivative in variable `index`.
LaurentPolynomial derivative(const LaurentPolynomial& p, std::size_t index);

/// Newton polytopes of the n partial derivatives of p.
std::vector<LatticePolytope> support_shift_partials(const LaurentPolynomial& p);

/**
 * Sets the variables of `zero_set` to zero: terms with a positive exponent on
 * one of them vanish, the others are projected onto the remaining variables.
 * Throws DomainError if some term has a negative exponent on a zeroed variable.
 */
PolySystem restrict_to_stratum(const PolySystem& system, const std::vector<std::size_t>& zero_set);

/**
 * Polynomial with every monomial of total degree `degree` (homogeneous) or
 * of degree <= `degree`, each with coefficient 1, plus `constant` if nonzero.
 * Stands in for a generic polynomial wherever only the support matters.
 */
LaurentPolynomial dense_polynomial(std::size_t num_vars, std::size_t degree, bool homogeneous,
                                   const Rational& constant = 0);

}  // namespace polyinv

#endif
