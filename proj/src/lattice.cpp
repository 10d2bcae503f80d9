#include "polyinv/lattice.hpp"

#include "hull_engine.hpp"
#include "polyinv/error.hpp"

#include <algorithm>

namespace polyinv {

namespace mp = boost::multiprecision;

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) {
        coords_.emplace_back(c);
    }
}

LatticePoint LatticePoint::zero(std::size_t dim) { return LatticePoint(IntVector(dim)); }

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t index) {
    IntVector v(dim);
    v.at(index) = 1;
    return LatticePoint(std::move(v));
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) {
        throw InputError("lattice point dimension mismatch");
    }
    IntVector v(a.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a.coords_[i] + b.coords_[i];
    }
    return LatticePoint(std::move(v));
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) {
        throw InputError("lattice point dimension mismatch");
    }
    IntVector v(a.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a.coords_[i] - b.coords_[i];
    }
    return LatticePoint(std::move(v));
}

LatticePoint operator*(const Integer& k, const LatticePoint& a) {
    IntVector v(a.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = k * a.coords_[i];
    }
    return LatticePoint(std::move(v));
}

bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

Integer dot(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) {
        throw InputError("covector dimension mismatch");
    }
    return detail::dot(a.coords(), b.coords());
}

LatticePolytope LatticePolytope::hull(const std::vector<LatticePoint>& points, std::size_t ambient_dim) {
    LatticePolytope out(ambient_dim);
    if (points.empty()) {
        return out;
    }
    for (const auto& p : points) {
        if (p.dim() != ambient_dim) {
            throw InputError("point of dimension " + std::to_string(p.dim()) + " in a polytope of dimension " +
                             std::to_string(ambient_dim));
        }
    }
    std::vector<LatticePoint> distinct = points;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<IntVector> raw;
    raw.reserve(distinct.size());
    for (const auto& p : distinct) {
        raw.push_back(p.coords());
    }
    out.affine_dim_ = detail::affine_frame(raw).rank;
    for (std::size_t i : detail::vertex_indices(raw)) {
        out.vertices_.push_back(distinct[i]);
    }
    return out;
}

LatticePolytope LatticePolytope::point(const LatticePoint& p) { return hull({p}, p.dim()); }

std::vector<Facet> facets(const LatticePolytope& p) {
    if (!p.full_dimensional()) {
        throw DomainError("facets requested for a polytope that is not full-dimensional");
    }
    std::vector<IntVector> raw;
    for (const auto& v : p.vertices()) {
        raw.push_back(v.coords());
    }
    const detail::HullData data = detail::full_dim_hull(raw);
    std::vector<Facet> out;
    for (std::size_t f = 0; f < data.facets.size(); ++f) {
        Facet facet;
        facet.offset = data.facets[f][0];
        facet.normal = LatticePoint(IntVector(data.facets[f].begin() + 1, data.facets[f].end()));
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (data.incidence[f].test(i)) {
                facet.vertex_indices.push_back(i);
            }
        }
        out.push_back(std::move(facet));
    }
    return out;
}

namespace {

using Simplex = std::vector<IntVector>;

// Pulling triangulation of conv(points): all points distinct, in original coordinates.
void pull_triangulate(const std::vector<IntVector>& points, std::vector<Simplex>& out) {
    const detail::AffineFrame frame = detail::affine_frame(points);
    if (frame.rank == 0) {
        out.push_back({points.front()});
        return;
    }
    if (frame.rank == 1) {
        const auto idx = detail::vertex_indices(points);
        out.push_back({points[idx[0]], points[idx[1]]});
        return;
    }
    const detail::HullData data = detail::full_dim_hull(detail::project(points, frame.pivots));
    const std::size_t apex = data.vertices.front();
    for (std::size_t f = 0; f < data.facets.size(); ++f) {
        const auto& incidence = data.incidence[f];
        if (incidence.test(apex)) {
            continue;
        }
        std::vector<IntVector> facet_points;
        for (std::size_t v : data.vertices) {
            if (incidence.test(v)) {
                facet_points.push_back(points[v]);
            }
        }
        std::vector<Simplex> sub;
        pull_triangulate(facet_points, sub);
        for (auto& s : sub) {
            s.push_back(points[apex]);
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

Integer normalized_volume(const LatticePolytope& p) {
    if (p.empty()) {
        throw DomainError("normalized volume of the empty polytope");
    }
    if (!p.full_dimensional()) {
        return 0;
    }
    const std::size_t d = p.ambient_dim();
    std::vector<IntVector> raw;
    for (const auto& v : p.vertices()) {
        raw.push_back(v.coords());
    }
    std::vector<Simplex> simplices;
    pull_triangulate(raw, simplices);
    Integer total = 0;
    for (const auto& s : simplices) {
        std::vector<IntVector> edges(d, IntVector(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t c = 0; c < d; ++c) {
                edges[i][c] = s[i + 1][c] - s[0][c];
            }
        }
        total += mp::abs(detail::determinant(std::move(edges)));
    }
    return total;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) {
        throw InputError("Minkowski sum of polytopes in different dimensions");
    }
    if (p.empty() || q.empty()) {
        throw DomainError("Minkowski sum with the empty polytope");
    }
    std::vector<LatticePoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            sums.push_back(a + b);
        }
    }
    return LatticePolytope::hull(sums, p.ambient_dim());
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& k) {
    if (k < 0) {
        throw InputError("dilation factor must be nonnegative");
    }
    if (p.empty()) {
        throw DomainError("dilation of the empty polytope");
    }
    std::vector<LatticePoint> scaled;
    for (const auto& v : p.vertices()) {
        scaled.push_back(k * v);
    }
    return LatticePolytope::hull(scaled, p.ambient_dim());
}

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& t) {
    if (p.empty()) {
        return p;
    }
    std::vector<LatticePoint> moved;
    for (const auto& v : p.vertices()) {
        moved.push_back(v + t);
    }
    return LatticePolytope::hull(moved, p.ambient_dim());
}

LatticePolytope face(const LatticePolytope& p, const LatticePoint& xi) {
    if (xi.dim() != p.ambient_dim()) {
        throw InputError("covector dimension does not match the polytope");
    }
    if (p.empty()) {
        throw DomainError("face of the empty polytope");
    }
    std::vector<LatticePoint> minimizers;
    Integer best;
    for (const auto& v : p.vertices()) {
        Integer value = dot(xi, v);
        if (minimizers.empty() || value < best) {
            best = value;
            minimizers.assign(1, v);
        } else if (value == best) {
            minimizers.push_back(v);
        }
    }
    return LatticePolytope::hull(minimizers, p.ambient_dim());
}

bool contains_origin_interior(const LatticePolytope& p) {
    if (!p.full_dimensional()) {
        return false;
    }
    if (p.ambient_dim() == 0) {
        return true;
    }
    if (p.ambient_dim() == 1) {
        return p.vertices().front()[0] < 0 && p.vertices().back()[0] > 0;
    }
    for (const auto& f : facets(p)) {
        if (f.offset <= 0) {
            return false;
        }
    }
    return true;
}

LatticePolytope unit_simplex(std::size_t d) {
    std::vector<LatticePoint> pts{LatticePoint::zero(d)};
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(LatticePoint::unit(d, i));
    }
    return LatticePolytope::hull(pts, d);
}

}  // namespace polyinv
