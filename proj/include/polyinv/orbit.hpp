#ifndef POLYINV_ORBIT_HPP
#define POLYINV_ORBIT_HPP

#include "polyinv/lattice.hpp"
#include "polyinv/types.hpp"

#include <string>
#include <vector>

namespace polyinv {

/// Weights of a diagonal torus representation: N characters of (C*)^rank.
struct WeightSet {
    std::size_t rank = 0;
    std::vector<LatticePoint> weights;
};

/// Throws InputError unless every weight has length `rank` and there is at least one.
void validate(const WeightSet& w);

/// Degree of a generic orbit closure: normalized volume of the weight hull.
/// DomainError when the hull is not full-dimensional.
Integer torus_orbit_degree(const WeightSet& w);

/**
 * Generic number of critical points of F = sum c_w x^w on the torus, computed
 * as the mixed volume of the Newton polytopes of dF/dx_1, ..., dF/dx_n.
 * Requires the origin in the interior of the weight hull (DomainError otherwise).
 */
Integer torus_crit_count(const WeightSet& w);

/// Whether the torus orbit map is a closed embedding: origin interior to the weight hull.
bool is_closed_orbit_embedding(const WeightSet& w);

/// chi(X) + (-1)^(dim_X + 1) * degree. Requires dim_X >= 1 and degree >= 1.
Integer section_chi(const Integer& chi_X, long dim_X, const Integer& degree);

/// Euler characteristic of a connected reductive group; always zero.
Integer chi_reductive_group();

/**
 * chi(G/H) for a closed reductive subgroup H: |W_G| / |W_H| when the ranks
 * agree, 0 when rank H < rank G.
 */
Integer chi_homogeneous(unsigned rank_G, unsigned rank_H, const Integer& weyl_G, const Integer& weyl_H);

struct CatalogParams {
    long n = 0;
    long m = 0;
};

/// One row of the spherical-module tables evaluated at concrete parameters.
struct CatalogEntry {
    int id = 0;
    std::string group_label;
    std::string isotropy_label;
    CatalogParams params;
    Integer module_dim;
    Integer orbit_codim;
    /// Degrees of a generating set of invariants; empty when unknown.
    std::vector<Integer> invariant_degrees;
    bool closed_generic_orbits = false;
    /// Generic isotropy has no unipotent radical.
    bool reductive_isotropy = false;
    /// chi of a generic orbit; zero when the isotropy type is not tabulated.
    Integer orbit_chi;
    bool orbit_chi_known = false;
};

/// All ids, 0..37.
std::vector<int> catalog_ids();
/// Smallest admissible parameters for an entry.
CatalogParams catalog_default_params(int id);
/// InputError on an unknown id or inadmissible parameters.
CatalogEntry catalog_lookup(int id, const CatalogParams& params);
/// Convenience overload using catalog_default_params.
CatalogEntry catalog_lookup(int id);

/**
 * Euler characteristic of a generic hyperplane section of a generic orbit.
 * Accepts entries with closed generic orbits (or reductive generic isotropy)
 * and exactly one known invariant; throws InputError otherwise.
 */
Integer catalog_section_chi(int id, const CatalogParams& params);

}  // namespace polyinv

#endif
