#include "hull_engine.hpp"

#include "polyinv/error.hpp"

#include <algorithm>
#include <utility>

namespace polyinv::detail {

namespace mp = boost::multiprecision;

Integer dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void make_primitive(IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0) {
            g = (g == 0) ? Integer(mp::abs(x)) : Integer(mp::gcd(g, x));
            if (g == 1) {
                return;
            }
        }
    }
    if (g > 1) {
        for (auto& x : v) {
            x /= g;
        }
    }
}

namespace {

// Reduces `row` against an echelon basis; returns the pivot column of the
// remainder or -1 if it vanished.
long reduce_against(IntVector& row, const std::vector<std::pair<IntVector, std::size_t>>& echelon) {
    for (const auto& [basis_row, pivot] : echelon) {
        if (row[pivot] == 0) {
            continue;
        }
        Integer scale_row = basis_row[pivot];
        Integer scale_basis = row[pivot];
        for (std::size_t c = 0; c < row.size(); ++c) {
            row[c] = row[c] * scale_row - basis_row[c] * scale_basis;
        }
        make_primitive(row);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0) {
            return static_cast<long>(c);
        }
    }
    return -1;
}

// Columns of B^{-1}, scaled to primitive integer vectors.
std::vector<IntVector> inverse_columns(const std::vector<IntVector>& basis) {
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Rational(basis[i][j]);
        }
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            throw Error("internal: singular initial basis in hull computation");
        }
        std::swap(m[piv], m[col]);
        const Rational inv = 1 / m[col][col];
        for (auto& x : m[col]) {
            x *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) {
                continue;
            }
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    std::vector<IntVector> columns(n, IntVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        Integer lcm = 1;
        for (std::size_t i = 0; i < n; ++i) {
            lcm = mp::lcm(lcm, Integer(mp::denominator(m[i][n + j])));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Rational scaled = m[i][n + j] * lcm;
            columns[j][i] = mp::numerator(scaled);
        }
        make_primitive(columns[j]);
    }
    return columns;
}

struct Ray {
    IntVector normal;
    boost::dynamic_bitset<> zero;
};

}  // namespace

AffineFrame affine_frame(const std::vector<IntVector>& points) {
    AffineFrame frame;
    if (points.empty()) {
        return frame;
    }
    frame.rank = 0;
    std::vector<std::pair<IntVector, std::size_t>> echelon;
    const std::size_t d = points.front().size();
    for (std::size_t i = 1; i < points.size() && echelon.size() < d; ++i) {
        IntVector diff(d);
        for (std::size_t c = 0; c < d; ++c) {
            diff[c] = points[i][c] - points[0][c];
        }
        const long pivot = reduce_against(diff, echelon);
        if (pivot >= 0) {
            echelon.emplace_back(std::move(diff), static_cast<std::size_t>(pivot));
        }
    }
    frame.rank = static_cast<int>(echelon.size());
    for (const auto& entry : echelon) {
        frame.pivots.push_back(entry.second);
    }
    std::sort(frame.pivots.begin(), frame.pivots.end());
    return frame;
}

std::vector<IntVector> project(const std::vector<IntVector>& points, const std::vector<std::size_t>& coords) {
    std::vector<IntVector> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        IntVector q;
        q.reserve(coords.size());
        for (std::size_t c : coords) {
            q.push_back(p[c]);
        }
        out.push_back(std::move(q));
    }
    return out;
}

HullData full_dim_hull(const std::vector<IntVector>& points) {
    const std::size_t count = points.size();
    const std::size_t r = points.front().size();
    const std::size_t width = r + 1;

    std::vector<IntVector> rows(count, IntVector(width));
    for (std::size_t i = 0; i < count; ++i) {
        rows[i][0] = 1;
        std::copy(points[i].begin(), points[i].end(), rows[i].begin() + 1);
    }

    // Initial simplex: the first r+1 affinely independent points.
    std::vector<std::pair<IntVector, std::size_t>> echelon;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < count && basis.size() < width; ++i) {
        IntVector reduced = rows[i];
        const long pivot = reduce_against(reduced, echelon);
        if (pivot >= 0) {
            echelon.emplace_back(std::move(reduced), static_cast<std::size_t>(pivot));
            basis.push_back(i);
        }
    }
    if (basis.size() != width) {
        throw Error("internal: points do not span the ambient space");
    }

    std::vector<IntVector> basis_rows;
    for (std::size_t i : basis) {
        basis_rows.push_back(rows[i]);
    }
    std::vector<Ray> rays;
    auto columns = inverse_columns(basis_rows);
    for (std::size_t j = 0; j < width; ++j) {
        Ray ray{std::move(columns[j]), boost::dynamic_bitset<>(count)};
        for (std::size_t k = 0; k < width; ++k) {
            if (k != j) {
                ray.zero.set(basis[k]);
            }
        }
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(count, false);
    for (std::size_t i : basis) {
        in_basis[i] = true;
    }

    const std::size_t min_common = r - 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (in_basis[i]) {
            continue;
        }
        std::vector<Integer> slack(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            slack[k] = dot(rows[i], rays[k].normal);
            if (slack[k] > 0) {
                pos.push_back(k);
            } else if (slack[k] < 0) {
                neg.push_back(k);
            } else {
                rays[k].zero.set(i);
            }
        }
        if (neg.empty()) {
            continue;
        }

        std::vector<Ray> created;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                boost::dynamic_bitset<> common = rays[p].zero & rays[n].zero;
                if (common.count() < min_common) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t != p && t != n && common.is_subset_of(rays[t].zero)) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                IntVector normal(width);
                for (std::size_t c = 0; c < width; ++c) {
                    normal[c] = slack[p] * rays[n].normal[c] - slack[n] * rays[p].normal[c];
                }
                make_primitive(normal);
                common.set(i);
                created.push_back(Ray{std::move(normal), std::move(common)});
            }
        }

        std::vector<Ray> kept;
        kept.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (slack[k] >= 0) {
                kept.push_back(std::move(rays[k]));
            }
        }
        for (auto& ray : created) {
            kept.push_back(std::move(ray));
        }
        rays = std::move(kept);
    }

    HullData out;
    for (auto& ray : rays) {
        out.facets.push_back(std::move(ray.normal));
        out.incidence.push_back(std::move(ray.zero));
    }
    // A point is a vertex iff it is the only point on every facet through it.
    for (std::size_t i = 0; i < count; ++i) {
        boost::dynamic_bitset<> meet(count);
        meet.set();
        bool on_some = false;
        for (const auto& inc : out.incidence) {
            if (inc.test(i)) {
                meet &= inc;
                on_some = true;
            }
        }
        if (on_some && meet.count() == 1) {
            out.vertices.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> vertex_indices(const std::vector<IntVector>& points) {
    if (points.empty()) {
        return {};
    }
    const AffineFrame frame = affine_frame(points);
    if (frame.rank == 0) {
        return {0};
    }
    if (frame.rank == 1) {
        const std::size_t c = frame.pivots.front();
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < points.size(); ++i) {
            if (points[i][c] < points[lo][c]) {
                lo = i;
            }
            if (points[i][c] > points[hi][c]) {
                hi = i;
            }
        }
        return lo < hi ? std::vector<std::size_t>{lo, hi} : std::vector<std::size_t>{hi, lo};
    }
    return full_dim_hull(project(points, frame.pivots)).vertices;
}

Integer determinant(std::vector<IntVector> m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace polyinv::detail
