#ifndef POLYINV_CRIT_HPP
#define POLYINV_CRIT_HPP

#include "polyinv/laurent.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace polyinv {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

struct CritOptions {
    /// Relative residual a reported point must meet.
    double tolerance = 1e-8;
    /// Two roots closer than this (relative) count as one cluster.
    double cluster_separation = 1e-6;
    /// Magnitude below which a coordinate counts as zero.
    double zero_cutoff = 1e-10;
    /// Resampling attempts after the first draw.
    int max_retries = 5;
    std::uint64_t seed = 0;
};

struct CritReport {
    std::size_t count = 0;
    /// One entry per solution; matrices are flattened row-major.
    std::vector<std::vector<Complex>> points;
    /// Lagrange multipliers, when the problem has them.
    std::vector<Complex> multipliers;
    double max_residual = 0.0;
    /// Number of coefficient draws used (1 when no resampling was needed).
    int attempts = 1;
    bool passed = false;
};

/**
 * Critical points of x -> f.x on the quadric x_1^2 + ... + x_n^2 = c.
 * GenericityError when Q(f/2) vanishes (relative to |f|^2) or f is zero.
 */
CritReport quadric_crit(const ComplexVector& f, Complex c, const CritOptions& options = {});

/**
 * Critical points of M -> tr(F M) on det M = c.
 * GenericityError when F is numerically singular.
 */
CritReport det_crit(const ComplexMatrix& F, Complex c, const CritOptions& options = {});

/**
 * Critical points in C* of a generic Laurent polynomial with the given support:
 * roots of x F'(x) with seeded random complex coefficients. The support must
 * have 0 strictly between its minimum and maximum.
 */
CritReport univariate_crit_count(const std::vector<std::int64_t>& support, const CritOptions& options = {});

/// Roots in C* of a generic Laurent polynomial with the given support (at least two exponents).
CritReport univariate_root_count(const std::vector<std::int64_t>& support, const CritOptions& options = {});

/**
 * Common roots in (C*)^2 of two generic Laurent polynomials with the supports
 * of `system` (its coefficients are ignored). Eliminates y with an exact
 * Sylvester resultant, then lifts and polishes each root. Both supports
 * must be two-dimensional.
 */
CritReport bivariate_root_count(const PolySystem& system, const CritOptions& options = {});

/// Roots of sum coeffs[k] x^k via companion-matrix eigenvalues; trailing zero coefficients are trimmed.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

}  // namespace polyinv

#endif
