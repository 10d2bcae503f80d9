#ifndef POLYINV_LATTICE_HPP
#define POLYINV_LATTICE_HPP

#include "polyinv/types.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace polyinv {

/**
 * A point of Z^d. Also used for covectors (face selection) since the
 * standard pairing identifies the two.
 */
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(IntVector coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<long> coords);

    /// Origin of Z^dim.
    static LatticePoint zero(std::size_t dim);
    /// Standard basis vector e_index of Z^dim.
    static LatticePoint unit(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    const IntVector& coords() const noexcept { return coords_; }

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
    friend LatticePoint operator*(const Integer& k, const LatticePoint& a);
    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
    /// Lexicographic order.
    friend bool operator<(const LatticePoint& a, const LatticePoint& b);

private:
    IntVector coords_;
};

Integer dot(const LatticePoint& a, const LatticePoint& b);

/**
 * Convex hull of finitely many points of Z^d, stored by its vertices.
 *
 * The vertex list is minimal and sorted lexicographically, so two polytopes
 * compare equal iff they are the same set. The empty polytope is a regular
 * value with affine_dim() == -1.
 */
class LatticePolytope {
public:
    /// Empty polytope in Z^ambient_dim.
    explicit LatticePolytope(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

    /// Vertex-minimal hull of `points`. Throws InputError on dimension mismatch.
    static LatticePolytope hull(const std::vector<LatticePoint>& points, std::size_t ambient_dim);
    static LatticePolytope point(const LatticePoint& p);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    int affine_dim() const noexcept { return affine_dim_; }
    bool empty() const noexcept { return vertices_.empty(); }
    bool full_dimensional() const noexcept { return affine_dim_ == static_cast<int>(ambient_dim_) && !empty(); }
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

private:
    std::size_t ambient_dim_ = 0;
    int affine_dim_ = -1;
    std::vector<LatticePoint> vertices_;
};

/**
 * Facet inequality offset + <normal, x> >= 0 of a full-dimensional
 * polytope, with primitive integer coefficients.
 */
struct Facet {
    Integer offset;
    LatticePoint normal;
    std::vector<std::size_t> vertex_indices;
};

/// Facets of a full-dimensional polytope. Throws DomainError otherwise.
std::vector<Facet> facets(const LatticePolytope& p);

/// d! * Vol_d(P), 0 for lower-dimensional P. Throws DomainError on the empty polytope.
Integer normalized_volume(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope dilate(const LatticePolytope& p, const Integer& k);
LatticePolytope translate(const LatticePolytope& p, const LatticePoint& t);

/// Face of `p` on which <xi, .> attains its minimum. face(p, 0) == p.
LatticePolytope face(const LatticePolytope& p, const LatticePoint& xi);

/// True iff p is full-dimensional and the origin satisfies every facet inequality strictly.
bool contains_origin_interior(const LatticePolytope& p);

/// Unit simplex conv(0, e_1, ..., e_d).
LatticePolytope unit_simplex(std::size_t d);

}  // namespace polyinv

#endif
