#ifndef POLYINV_SRC_JSON_IO_HPP
#define POLYINV_SRC_JSON_IO_HPP

// JSON encodings shared by the C API. Field order is fixed so that output is
// byte-for-byte reproducible.

#include "polyinv/chern.hpp"
#include "polyinv/chi.hpp"
#include "polyinv/crit.hpp"
#include "polyinv/lattice.hpp"
#include "polyinv/laurent.hpp"
#include "polyinv/orbit.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace polyinv::json_io {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into InputError.
Json parse_text(std::string_view text);

/**
 * Accepts {"points": [[...], ...], "dim"?: d} or {"simplex": d, "scale"?: k}.
 * A bare array of points is accepted as well.
 */
LatticePolytope polytope_from_json(const Json& j);
/// {"dim": d, "affine_dim": k, "vertices": [[...], ...]}
Json polytope_to_json(const LatticePolytope& p);

/// {"polytopes": [...]} or a bare array of polytope objects.
std::vector<LatticePolytope> polytope_list_from_json(const Json& j);

/// {"nvars": n, "terms": [{"exp": [...], "num": "...", "den": "..."}, ...]}
Json polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

/**
 * {"vars"?: [...], "nvars"?: n, "polys": [entry, ...]} where each entry is a
 * polynomial string, a term object as produced by polynomial_to_json, or
 * {"dense": {"degree": k | "param", "homogeneous"?: bool, "constant"?: c}}.
 * "param" is replaced by `param`, which must then be supplied.
 */
PolySystem system_from_json(const Json& j, std::optional<long> param = std::nullopt);
Json system_to_json(const PolySystem& s);

/// {"rank": n, "weights": [[...], ...]}; rank defaults to the weight length.
WeightSet weights_from_json(const Json& j);

/// {"n", "deg_top", "chern": [...], "d", "h_inf"?}; rationals may be strings "p/q".
IntersectionData intersection_from_json(const Json& j);
Json intersection_to_json(const IntersectionData& data);

Json affine_chi_to_json(const AffineChi& chi);
Json catalog_entry_to_json(const CatalogEntry& e);
Json crit_report_to_json(const CritReport& r);

/// Integer written as a JSON number when it fits in 53 bits, else as a decimal string.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Complex complex_from_json(const Json& j);

}  // namespace polyinv::json_io

#endif
