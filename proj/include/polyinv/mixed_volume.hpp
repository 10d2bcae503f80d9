#ifndef POLYINV_MIXED_VOLUME_HPP
#define POLYINV_MIXED_VOLUME_HPP

#include "polyinv/lattice.hpp"

#include <vector>

namespace polyinv {

class PolySystem;

/// d nonempty polytopes in Z^d.
using PolytopeTuple = std::vector<LatticePolytope>;

/**
 * Normalized mixed volume d! * V(K_1, ..., K_d).
 *
 * Computed by inclusion-exclusion over the 2^d - 1 Minkowski subset sums:
 *   d! V = (1/d!) * sum_S (-1)^(d-|S|) normalized_volume(sum_{i in S} K_i).
 * Each subset sum reuses the sum of the subset without its lowest member.
 * Throws InputError if the tuple length differs from the ambient dimension
 * or some entry is empty.
 */
Integer mixed_volume_normalized(const PolytopeTuple& tuple);

/// Generic number of roots in the torus of a square Laurent system.
Integer bkk_count(const PolySystem& system);

}  // namespace polyinv

#endif
