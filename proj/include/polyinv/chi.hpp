#ifndef POLYINV_CHI_HPP
#define POLYINV_CHI_HPP

#include "polyinv/laurent.hpp"
#include "polyinv/lattice.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace polyinv {

/**
 * Formal power series in k commuting symbols with rational coefficients,
 * truncated above total degree n. Symbol i stands for the i-th polytope
 * when the series is evaluated.
 */
class ChiSeries {
public:
    using Monomial = std::vector<unsigned>;

    ChiSeries(std::size_t num_symbols, std::size_t truncation);

    static ChiSeries one(std::size_t num_symbols, std::size_t truncation);
    static ChiSeries symbol(std::size_t num_symbols, std::size_t truncation, std::size_t index);
    /// x_i (1 + x_i)^{-1} = x_i - x_i^2 + x_i^3 - ...
    static ChiSeries geometric_fraction(std::size_t num_symbols, std::size_t truncation, std::size_t index);

    std::size_t num_symbols() const noexcept { return num_symbols_; }
    std::size_t truncation() const noexcept { return truncation_; }
    const std::map<Monomial, Rational>& coefficients() const noexcept { return coefficients_; }
    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    /// (1 + s)^{-1}; requires a zero constant term.
    ChiSeries inverse_one_plus() const;
    /// Terms of total degree exactly `degree`.
    ChiSeries homogeneous_part(std::size_t degree) const;

    friend ChiSeries operator+(const ChiSeries& a, const ChiSeries& b);
    friend ChiSeries operator-(const ChiSeries& a, const ChiSeries& b);
    friend ChiSeries operator*(const ChiSeries& a, const ChiSeries& b);
    friend ChiSeries operator*(const Rational& k, const ChiSeries& a);
    friend bool operator==(const ChiSeries& a, const ChiSeries& b) {
        return a.num_symbols_ == b.num_symbols_ && a.truncation_ == b.truncation_ &&
               a.coefficients_ == b.coefficients_;
    }

private:
    std::size_t num_symbols_;
    std::size_t truncation_;
    std::map<Monomial, Rational> coefficients_;
};

/**
 * Replaces each degree-n monomial x_1^{e_1}...x_k^{e_k} by the normalized mixed
 * volume with polytope i repeated e_i times; other degrees contribute nothing.
 * n is the common ambient dimension of `polys`.
 */
Rational evaluate_series(const ChiSeries& s, const std::vector<LatticePolytope>& polys);

/// Euler characteristic of a generic complete intersection in the torus with the given Newton polytopes.
Integer chi_torus_ci(const std::vector<LatticePolytope>& polys);

/// Contribution of one coordinate stratum to chi_affine_ci.
struct StratumChi {
    std::vector<std::size_t> zero_set;
    std::string label;
    Integer chi;
    /// Empty when the torus formula applied; otherwise why the stratum is generically empty.
    std::string reason;
};

struct AffineChi {
    Integer total;
    std::vector<StratumChi> strata;
};

/**
 * Euler characteristic of a generic complete intersection in affine space,
 * summed over the coordinate strata. Polynomials must have nonnegative exponents.
 * Throws DomainError on negative exponents and GenericityError when a
 * restriction is identically zero.
 */
AffineChi chi_affine_ci(const PolySystem& system);

}  // namespace polyinv

#endif
