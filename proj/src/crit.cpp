#include "polyinv/crit.hpp"

#include "hull_engine.hpp"
#include "polyinv/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace polyinv {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (!finite(m.derived().data()[i])) {
            throw InputError(std::string(what) + " has a non-finite entry");
        }
    }
}

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
    Complex v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        v = v * x + *it;
    }
    return v;
}

Complex horner_derivative(const std::vector<Complex>& coeffs, Complex x) {
    Complex v = 0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        v = v * x + static_cast<double>(k) * coeffs[k];
    }
    return v;
}

/// |p(x)| divided by sum |c_k| |x|^k.
double relative_residual(const std::vector<Complex>& coeffs, Complex x) {
    double scale = 0.0, power = 1.0;
    for (const auto& c : coeffs) {
        scale += std::abs(c) * power;
        power *= std::abs(x);
    }
    return scale == 0.0 ? 0.0 : std::abs(horner(coeffs, x)) / scale;
}

bool clustered(Complex a, Complex b, double separation) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) < separation * scale;
}

bool has_cluster(const std::vector<Complex>& roots, double separation) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (clustered(roots[i], roots[j], separation)) {
                return true;
            }
        }
    }
    return false;
}

Complex standard_normal(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    std::size_t degree = coeffs.size();
    while (degree > 0 && coeffs[degree - 1] == Complex(0)) {
        --degree;
    }
    if (degree <= 1) {
        return {};
    }
    --degree;
    const std::vector<Complex> p(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(degree + 1));
    ComplexMatrix companion = ComplexMatrix::Zero(static_cast<Eigen::Index>(degree), static_cast<Eigen::Index>(degree));
    for (std::size_t i = 1; i < degree; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    }
    for (std::size_t i = 0; i < degree; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(degree - 1)) = -p[i] / p[degree];
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw GenericityError("companion eigenvalue iteration did not converge");
    }
    std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + degree);
    // A few guarded Newton steps sharpen roots the eigensolver left loose.
    for (auto& r : roots) {
        for (int step = 0; step < 3; ++step) {
            const Complex d = horner_derivative(p, r);
            if (d == Complex(0)) {
                break;
            }
            const Complex candidate = r - horner(p, r) / d;
            if (!finite(candidate) || std::abs(horner(p, candidate)) >= std::abs(horner(p, r))) {
                break;
            }
            r = candidate;
        }
    }
    return roots;
}

CritReport quadric_crit(const ComplexVector& f, Complex c, const CritOptions& options) {
    const Eigen::Index n = f.size();
    if (n < 2) {
        throw InputError("quadric critical points need n >= 2");
    }
    require_finite(f, "functional");
    if (!finite(c) || c == Complex(0)) {
        throw InputError("quadric level c must be finite and nonzero");
    }
    const ComplexVector half = f / 2.0;
    const Complex q = half.transpose() * half;
    const double scale = half.squaredNorm();
    if (scale == 0.0 || std::abs(q) <= 1e-12 * scale) {
        throw GenericityError("degenerate functional: Q(f/2) vanishes, resample f");
    }
    CritReport report;
    const Complex root = std::sqrt(q / c);
    for (const Complex lambda : {root, -root}) {
        const ComplexVector x = f / (2.0 * lambda);
        const Complex qx = x.transpose() * x;
        const double constraint = std::abs(qx - c) / std::abs(c);
        const double colinear = (f - 2.0 * lambda * x).norm() / f.norm();
        report.max_residual = std::max({report.max_residual, constraint, colinear});
        report.points.emplace_back(x.data(), x.data() + n);
        report.multipliers.push_back(lambda);
    }
    report.count = report.points.size();
    report.passed = report.max_residual < options.tolerance;
    return report;
}

CritReport det_crit(const ComplexMatrix& F, Complex c, const CritOptions& options) {
    const Eigen::Index n = F.rows();
    if (n < 1 || F.cols() != n) {
        throw InputError("det critical points need a nonempty square matrix");
    }
    require_finite(F, "functional matrix");
    if (!finite(c) || c == Complex(0)) {
        throw InputError("determinant level c must be finite and nonzero");
    }
    const Eigen::PartialPivLU<ComplexMatrix> lu(F);
    const Complex det = lu.determinant();
    double hadamard = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        hadamard *= F.col(j).norm();
    }
    if (hadamard == 0.0 || std::abs(det) <= 1e-12 * hadamard) {
        throw GenericityError("degenerate functional: F is singular, resample F");
    }
    const ComplexMatrix F_inv = lu.inverse();
    const Complex r = det / std::pow(c, static_cast<double>(n - 1));
    const double modulus = std::pow(std::abs(r), 1.0 / static_cast<double>(n));
    CritReport report;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double angle = (std::arg(r) + 2.0 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(n);
        const Complex lambda = std::polar(modulus, angle);
        const ComplexMatrix M = lambda * c * F_inv;
        const Eigen::PartialPivLU<ComplexMatrix> lu_m(M);
        const Complex det_m = lu_m.determinant();
        const double constraint = std::abs(det_m - c) / std::abs(c);
        const double colinear = (F - lambda * det_m * lu_m.inverse()).norm() / F.norm();
        report.max_residual = std::max({report.max_residual, constraint, colinear});
        std::vector<Complex> flat;
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                flat.push_back(M(i, j));
            }
        }
        report.points.push_back(std::move(flat));
        report.multipliers.push_back(lambda);
    }
    report.count = report.points.size();
    report.passed = report.max_residual < options.tolerance;
    return report;
}

namespace {

std::vector<std::int64_t> sorted_support(std::vector<std::int64_t> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

/**
 * Shared driver: draws coefficients c_w, maps them through `transform`
 * (returning the Laurent terms whose roots are counted) and counts roots in C*.
 */
template <typename Transform>
CritReport laurent_root_report(const std::vector<std::int64_t>& support, const CritOptions& options,
                               Transform transform) {
    std::mt19937_64 rng(options.seed);
    for (int attempt = 1; attempt <= options.max_retries + 1; ++attempt) {
        std::map<std::int64_t, Complex> drawn;
        for (auto w : support) {
            drawn[w] = standard_normal(rng);
        }
        const std::map<std::int64_t, Complex> terms = transform(drawn);
        if (terms.size() < 2) {
            CritReport report;
            report.attempts = attempt;
            report.passed = true;
            return report;
        }
        const std::int64_t lo = terms.begin()->first;
        std::vector<Complex> coeffs(static_cast<std::size_t>(terms.rbegin()->first - lo + 1), Complex(0));
        for (const auto& [w, c] : terms) {
            coeffs[static_cast<std::size_t>(w - lo)] = c;
        }
        std::vector<Complex> roots;
        for (const auto& r : polynomial_roots(coeffs)) {
            if (std::abs(r) > options.zero_cutoff) {
                roots.push_back(r);
            }
        }
        if (has_cluster(roots, options.cluster_separation)) {
            continue;
        }
        CritReport report;
        report.attempts = attempt;
        for (const auto& r : roots) {
            report.max_residual = std::max(report.max_residual, relative_residual(coeffs, r));
            report.points.push_back({r});
        }
        report.count = report.points.size();
        report.passed = report.max_residual < options.tolerance;
        return report;
    }
    throw GenericityError("root clusters persisted after " + std::to_string(options.max_retries) + " resamplings");
}

}  // namespace

CritReport univariate_root_count(const std::vector<std::int64_t>& support, const CritOptions& options) {
    const auto s = sorted_support(support);
    if (s.size() < 2) {
        throw InputError("univariate root count needs at least two distinct exponents");
    }
    return laurent_root_report(s, options, [](const std::map<std::int64_t, Complex>& c) { return c; });
}

CritReport univariate_crit_count(const std::vector<std::int64_t>& support, const CritOptions& options) {
    const auto s = sorted_support(support);
    if (s.size() < 2) {
        throw InputError("univariate critical count needs at least two distinct exponents");
    }
    if (!(s.front() < 0 && s.back() > 0)) {
        throw DomainError("0 must lie strictly inside [min, max] of the support");
    }
    // x F'(x) = sum w c_w x^w
    return laurent_root_report(s, options, [](const std::map<std::int64_t, Complex>& c) {
        std::map<std::int64_t, Complex> out;
        for (const auto& [w, coeff] : c) {
            if (w != 0) {
                out[w] = static_cast<double>(w) * coeff;
            }
        }
        return out;
    });
}

// ---------------------------------------------------------------------------
// Bivariate oracle

namespace {

/// Polynomial in x and y with nonnegative exponents and integer coefficients.
using BiPoly = std::map<std::pair<int, int>, Integer>;

/// Univariate integer polynomial, index = power of x.
using UniPoly = std::vector<Integer>;

struct Shifted {
    std::vector<std::pair<int, int>> support;
    int deg_x = 0;
    int deg_y = 0;
};

Shifted cleared_support(const LaurentPolynomial& p) {
    if (p.num_vars() != 2) {
        throw InputError("bivariate root count needs polynomials in two variables");
    }
    if (p.is_zero()) {
        throw InputError("bivariate root count of the zero polynomial");
    }
    std::int64_t min_x = INT64_MAX, min_y = INT64_MAX;
    for (const auto& [e, c] : p.terms()) {
        min_x = std::min(min_x, e[0]);
        min_y = std::min(min_y, e[1]);
    }
    Shifted s;
    for (const auto& [e, c] : p.terms()) {
        const std::int64_t ex = e[0] - min_x, ey = e[1] - min_y;
        if (ex > 64 || ey > 64) {
            throw InputError("bivariate root count supports larger than 64 in some direction are not supported");
        }
        s.support.emplace_back(static_cast<int>(ex), static_cast<int>(ey));
        s.deg_x = std::max(s.deg_x, static_cast<int>(ex));
        s.deg_y = std::max(s.deg_y, static_cast<int>(ey));
    }
    if (newton_polytope(p).affine_dim() != 2) {
        throw DomainError("bivariate root count needs two-dimensional supports");
    }
    return s;
}

BiPoly draw(const Shifted& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-100, 100);
    BiPoly p;
    for (const auto& e : s.support) {
        int c = 0;
        while (c == 0) {
            c = dist(rng);
        }
        p[e] = c;
    }
    return p;
}

/// Coefficients of y^j as polynomials in x.
std::vector<UniPoly> by_y_degree(const BiPoly& p, int deg_x, int deg_y) {
    std::vector<UniPoly> out(static_cast<std::size_t>(deg_y + 1), UniPoly(static_cast<std::size_t>(deg_x + 1), 0));
    for (const auto& [e, c] : p) {
        out[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] = c;
    }
    return out;
}

Integer eval(const UniPoly& p, const Integer& x) {
    Integer v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        v = v * x + *it;
    }
    return v;
}

/// Res_y(f, g) as an exact polynomial in x: Sylvester determinants at D+1 nodes, then interpolation.
UniPoly resultant_y(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g, int bound) {
    const std::size_t p = f.size() - 1, q = g.size() - 1, size = p + q;
    std::vector<Rational> values;
    for (int node = 0; node <= bound; ++node) {
        const Integer x = node;
        std::vector<IntVector> rows(size, IntVector(size, 0));
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t k = 0; k <= p; ++k) {
                rows[i][i + k] = eval(f[p - k], x);
            }
        }
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t k = 0; k <= q; ++k) {
                rows[q + i][i + k] = eval(g[q - k], x);
            }
        }
        values.emplace_back(detail::determinant(std::move(rows)));
    }
    // Newton divided differences on nodes 0..bound.
    std::vector<Rational> dd = values;
    for (int level = 1; level <= bound; ++level) {
        for (int i = bound; i >= level; --i) {
            dd[static_cast<std::size_t>(i)] =
                (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) / Rational(level);
        }
    }
    std::vector<Rational> poly{dd[static_cast<std::size_t>(bound)]};
    for (int k = bound - 1; k >= 0; --k) {
        // poly = poly * (x - k) + dd[k]
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * k;
        }
        next[0] += dd[static_cast<std::size_t>(k)];
        poly = std::move(next);
    }
    UniPoly out;
    for (const auto& c : poly) {
        if (boost::multiprecision::denominator(c) != 1) {
            throw Error("internal: non-integral resultant coefficient");
        }
        out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

struct NumericBiPoly {
    std::vector<std::pair<std::pair<int, int>, double>> terms;

    explicit NumericBiPoly(const BiPoly& p) {
        for (const auto& [e, c] : p) {
            terms.emplace_back(e, c.convert_to<double>());
        }
    }
    Complex operator()(Complex x, Complex y) const {
        Complex v = 0;
        for (const auto& [e, c] : terms) {
            v += c * std::pow(x, e.first) * std::pow(y, e.second);
        }
        return v;
    }
    Complex dx(Complex x, Complex y) const {
        Complex v = 0;
        for (const auto& [e, c] : terms) {
            if (e.first > 0) {
                v += c * static_cast<double>(e.first) * std::pow(x, e.first - 1) * std::pow(y, e.second);
            }
        }
        return v;
    }
    Complex dy(Complex x, Complex y) const {
        Complex v = 0;
        for (const auto& [e, c] : terms) {
            if (e.second > 0) {
                v += c * static_cast<double>(e.second) * std::pow(x, e.first) * std::pow(y, e.second - 1);
            }
        }
        return v;
    }
    double relative(Complex x, Complex y) const {
        double scale = 0;
        for (const auto& [e, c] : terms) {
            scale += std::abs(c) * std::pow(std::abs(x), e.first) * std::pow(std::abs(y), e.second);
        }
        return scale == 0 ? 0 : std::abs((*this)(x, y)) / scale;
    }
    /// Coefficients in y at fixed x.
    std::vector<Complex> at_x(Complex x, int deg_y) const {
        std::vector<Complex> out(static_cast<std::size_t>(deg_y + 1), Complex(0));
        for (const auto& [e, c] : terms) {
            out[static_cast<std::size_t>(e.second)] += c * std::pow(x, e.first);
        }
        return out;
    }
};

/// Newton iteration on the 2x2 system; returns false when it fails to settle.
bool polish(const NumericBiPoly& f, const NumericBiPoly& g, Complex& x, Complex& y) {
    for (int it = 0; it < 60; ++it) {
        const Complex fv = f(x, y), gv = g(x, y);
        const Complex a = f.dx(x, y), b = f.dy(x, y), c = g.dx(x, y), d = g.dy(x, y);
        const Complex det = a * d - b * c;
        if (det == Complex(0) || !finite(det)) {
            return false;
        }
        const Complex sx = (d * fv - b * gv) / det;
        const Complex sy = (a * gv - c * fv) / det;
        x -= sx;
        y -= sy;
        if (!finite(x) || !finite(y)) {
            return false;
        }
        if (std::abs(sx) <= 1e-15 * std::max(1.0, std::abs(x)) && std::abs(sy) <= 1e-15 * std::max(1.0, std::abs(y))) {
            break;
        }
    }
    return true;
}

}  // namespace

CritReport bivariate_root_count(const PolySystem& system, const CritOptions& options) {
    if (system.num_vars() != 2 || system.size() != 2) {
        throw InputError("bivariate root count needs two polynomials in two variables");
    }
    const Shifted sf = cleared_support(system[0]);
    const Shifted sg = cleared_support(system[1]);
    const int bound = sf.deg_y * sg.deg_x + sg.deg_y * sf.deg_x;

    std::mt19937_64 rng(options.seed);
    for (int attempt = 1; attempt <= options.max_retries + 1; ++attempt) {
        const BiPoly f = draw(sf, rng);
        const BiPoly g = draw(sg, rng);
        UniPoly res = resultant_y(by_y_degree(f, sf.deg_x, sf.deg_y), by_y_degree(g, sg.deg_x, sg.deg_y), bound);
        while (!res.empty() && res.back() == 0) {
            res.pop_back();
        }
        if (res.empty()) {
            continue;  // common factor
        }
        // Drop the exact factor x^k; its roots lie outside the torus.
        std::size_t low = 0;
        while (res[low] == 0) {
            ++low;
        }
        res.erase(res.begin(), res.begin() + static_cast<std::ptrdiff_t>(low));
        Integer biggest = 0;
        for (const auto& c : res) {
            biggest = std::max(biggest, Integer(abs(c)));
        }
        std::vector<Complex> coeffs;
        for (const auto& c : res) {
            coeffs.emplace_back(Rational(c, biggest).convert_to<double>());
        }

        const NumericBiPoly nf(f), ng(g);
        std::vector<std::pair<Complex, Complex>> solutions;
        double worst = 0.0;
        bool consistent = true;
        for (const Complex x0 : polynomial_roots(coeffs)) {
            if (std::abs(x0) <= options.zero_cutoff) {
                continue;
            }
            bool lifted = false;
            std::vector<Complex> in_y = nf.at_x(x0, sf.deg_y);
            double top = 0;
            for (const auto& c : in_y) {
                top = std::max(top, std::abs(c));
            }
            while (!in_y.empty() && std::abs(in_y.back()) <= 1e-12 * top) {
                in_y.pop_back();
            }
            for (Complex y0 : polynomial_roots(in_y)) {
                if (std::abs(y0) <= options.zero_cutoff || ng.relative(x0, y0) > 1e-4) {
                    continue;
                }
                Complex x = x0, y = y0;
                if (!polish(nf, ng, x, y) || std::abs(x) <= options.zero_cutoff ||
                    std::abs(y) <= options.zero_cutoff) {
                    continue;
                }
                const double r = std::max(nf.relative(x, y), ng.relative(x, y));
                if (r >= options.tolerance) {
                    continue;
                }
                lifted = true;
                const bool seen = std::any_of(solutions.begin(), solutions.end(), [&](const auto& s) {
                    return clustered(s.first, x, options.cluster_separation) &&
                           clustered(s.second, y, options.cluster_separation);
                });
                if (!seen) {
                    solutions.emplace_back(x, y);
                    worst = std::max(worst, r);
                }
            }
            consistent = consistent && lifted;
        }
        if (!consistent) {
            continue;
        }
        CritReport report;
        report.attempts = attempt;
        report.max_residual = worst;
        for (const auto& [x, y] : solutions) {
            report.points.push_back({x, y});
        }
        report.count = report.points.size();
        report.passed = report.max_residual < options.tolerance;
        return report;
    }
    throw GenericityError("bivariate elimination stayed degenerate after " + std::to_string(options.max_retries) +
                          " resamplings");
}

}  // namespace polyinv
