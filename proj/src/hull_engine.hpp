#ifndef POLYINV_SRC_HULL_ENGINE_HPP
#define POLYINV_SRC_HULL_ENGINE_HPP

// Exact convex-hull machinery shared by the lattice-geometry sources.

#include "polyinv/types.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace polyinv::detail {

/// Affine rank of a nonempty point set and coordinates on which the projection is injective.
struct AffineFrame {
    int rank = -1;
    std::vector<std::size_t> pivots;
};

AffineFrame affine_frame(const std::vector<IntVector>& points);

/// Restricts every point to the given coordinates.
std::vector<IntVector> project(const std::vector<IntVector>& points, const std::vector<std::size_t>& coords);

struct HullData {
    /// (a0, a1..ar) with a0 + a.q >= 0 on the hull, primitive.
    std::vector<IntVector> facets;
    /// incidence[f][i] set iff point i lies on facet f.
    std::vector<boost::dynamic_bitset<>> incidence;
    /// Indices of input points that are vertices, ascending.
    std::vector<std::size_t> vertices;
};

/**
 * Facets and vertices of conv(points) by the double description method.
 * Points must be distinct, live in Z^r and affinely span R^r with r >= 1.
 */
HullData full_dim_hull(const std::vector<IntVector>& points);

/// Vertex indices of conv(points) for distinct points of any affine rank.
std::vector<std::size_t> vertex_indices(const std::vector<IntVector>& points);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Integer determinant(std::vector<IntVector> rows);

/// Divides a vector by the gcd of its entries (no-op on the zero vector).
void make_primitive(IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace polyinv::detail

#endif
