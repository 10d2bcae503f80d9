#ifndef POLYINV_TESTS_ORACLES_HPP
#define POLYINV_TESTS_ORACLES_HPP

// Independent reference computations used by the tests. Nothing here calls
// into the hull engine; the polytope checks are plain exact linear programs.

#include "polyinv/lattice.hpp"
#include "polyinv/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using polyinv::Integer;
using polyinv::LatticePoint;
using polyinv::LatticePolytope;
using polyinv::Rational;
using Matrix = std::vector<std::vector<Rational>>;

// Decides whether A x = b has a solution with x >= 0. Phase one of the
// simplex method with artificial variables and Bland's rule, all in exact
// rationals.
inline bool feasible_nonnegative(Matrix A, std::vector<Rational> b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& a : A[i]) {
                a = -a;
            }
            b[i] = -b[i];
        }
    }
    // Tableau columns: n originals, m artificials, then the right-hand side.
    const std::size_t cols = n + m;
    Matrix T(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T[i][j] = A[i][j];
        }
        T[i][n + i] = 1;
        T[i][cols] = b[i];
        basis[i] = n + i;
    }
    // Objective: minimize the sum of artificials, stored as reduced costs.
    std::vector<Rational> cost(cols + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= cols; ++j) {
            if (j < n || j == cols) {
                cost[j] -= T[i][j];
            }
        }
    }
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) {
            break;
        }
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] > 0) {
                Rational ratio = T[i][cols] / T[i][enter];
                if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        if (leave == m) {
            break;  // unbounded cannot happen for a phase-one objective
        }
        const Rational pivot = T[leave][enter];
        for (auto& v : T[leave]) {
            v /= pivot;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i != leave && T[i][enter] != 0) {
                const Rational f = T[i][enter];
                for (std::size_t j = 0; j <= cols; ++j) {
                    T[i][j] -= f * T[leave][j];
                }
            }
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j <= cols; ++j) {
                cost[j] -= f * T[leave][j];
            }
        }
        basis[leave] = enter;
    }
    return cost[cols] == 0;
}

inline Rational q(const Integer& v) { return Rational(v); }

// Is `p` a convex combination of `others`?
inline bool in_hull(const LatticePoint& p, const std::vector<LatticePoint>& others) {
    if (others.empty()) {
        return false;
    }
    const std::size_t d = p.dim();
    Matrix A(d + 1, std::vector<Rational>(others.size()));
    std::vector<Rational> b(d + 1);
    for (std::size_t j = 0; j < others.size(); ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            A[i][j] = q(others[j][i]);
        }
        A[d][j] = 1;
    }
    for (std::size_t i = 0; i < d; ++i) {
        b[i] = q(p[i]);
    }
    b[d] = 1;
    return feasible_nonnegative(A, b);
}

// Extreme points of a finite set: points that are not in the hull of the rest.
inline std::vector<LatticePoint> extreme_points(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<LatticePoint> rest;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i) {
                rest.push_back(pts[j]);
            }
        }
        if (!in_hull(pts[i], rest)) {
            out.push_back(pts[i]);
        }
    }
    return out;
}

inline std::size_t rank(Matrix M) {
    std::size_t r = 0;
    const std::size_t cols = M.empty() ? 0 : M[0].size();
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t piv = r;
        while (piv < M.size() && M[piv][c] == 0) {
            ++piv;
        }
        if (piv == M.size()) {
            continue;
        }
        std::swap(M[piv], M[r]);
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i != r && M[i][c] != 0) {
                const Rational f = M[i][c] / M[r][c];
                for (std::size_t j = c; j < cols; ++j) {
                    M[i][j] -= f * M[r][j];
                }
            }
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_of_points(const std::vector<LatticePoint>& pts) {
    Matrix M;
    for (const auto& p : pts) {
        std::vector<Rational> row;
        for (const auto& c : p.coords()) {
            row.push_back(q(c));
        }
        M.push_back(row);
    }
    return rank(M);
}

// Origin strictly inside conv(w) in R^dim: the w span R^dim and some
// combination with every coefficient at least one sums to zero. Writing
// lambda = 1 + mu with mu >= 0 gives a standard-form feasibility problem.
inline bool origin_strictly_interior(const std::vector<LatticePoint>& w, std::size_t dim) {
    if (w.empty() || rank_of_points(w) < dim) {
        return false;
    }
    Matrix A(dim, std::vector<Rational>(w.size()));
    std::vector<Rational> b(dim, Rational(0));
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            A[i][j] = q(w[j][i]);
            b[i] -= q(w[j][i]);
        }
    }
    return feasible_nonnegative(A, b);
}

// Twice the area of a convex polygon given by its extreme points.
inline Integer shoelace_twice_area(std::vector<LatticePoint> pts) {
    if (pts.size() < 3) {
        return 0;
    }
    std::sort(pts.begin(), pts.end());
    // Andrew's monotone chain.
    auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
        return Integer((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
    };
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) {
            --k;
        }
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    Integer s = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const auto& a = hull[i];
        const auto& b = hull[(i + 1) % hull.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s < 0 ? Integer(-s) : s;
}

// All pairwise sums, then extreme points.
inline std::vector<LatticePoint> naive_minkowski(const std::vector<LatticePoint>& a,
                                                 const std::vector<LatticePoint>& b) {
    std::vector<LatticePoint> sums;
    for (const auto& p : a) {
        for (const auto& r : b) {
            sums.push_back(p + r);
        }
    }
    return extreme_points(sums);
}

inline std::vector<LatticePoint> random_points(std::mt19937_64& rng, std::size_t dim, std::size_t count, long lo,
                                               long hi) {
    std::uniform_int_distribution<long> coord(lo, hi);
    std::vector<LatticePoint> out;
    for (std::size_t k = 0; k < count; ++k) {
        polyinv::IntVector c;
        for (std::size_t i = 0; i < dim; ++i) {
            c.push_back(coord(rng));
        }
        out.emplace_back(c);
    }
    return out;
}

// A random full-dimensional lattice polytope: the unit simplex shifted and
// padded with random points so the hull never collapses.
inline LatticePolytope random_full_polytope(std::mt19937_64& rng, std::size_t dim, std::size_t extra, long range) {
    auto pts = random_points(rng, dim, extra, -range, range);
    const auto base = random_points(rng, dim, 1, -range, range)[0];
    pts.push_back(base);
    for (std::size_t i = 0; i < dim; ++i) {
        pts.push_back(base + LatticePoint::unit(dim, i));
    }
    return LatticePolytope::hull(pts, dim);
}

inline polyinv::LaurentPolynomial random_laurent(std::mt19937_64& rng, std::size_t nvars, std::size_t terms,
                                                 long lo, long hi) {
    std::uniform_int_distribution<long> e(lo, hi);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    polyinv::LaurentPolynomial p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        polyinv::Exponent ex;
        for (std::size_t i = 0; i < nvars; ++i) {
            ex.push_back(e(rng));
        }
        long n = num(rng);
        if (n == 0) {
            n = 1;
        }
        p.add_term(ex, Rational(n, den(rng)));
    }
    return p;
}

}  // namespace oracle

#endif
