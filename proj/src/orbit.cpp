#include "polyinv/orbit.hpp"

#include "polyinv/error.hpp"
#include "polyinv/laurent.hpp"
#include "polyinv/mixed_volume.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace polyinv {

void validate(const WeightSet& w) {
    if (w.weights.empty()) {
        throw InputError("weight set is empty");
    }
    for (const auto& x : w.weights) {
        if (x.dim() != w.rank) {
            throw InputError("weight of length " + std::to_string(x.dim()) + " in a rank-" +
                             std::to_string(w.rank) + " weight set");
        }
    }
}

namespace {

LatticePolytope weight_hull(const WeightSet& w) {
    validate(w);
    return LatticePolytope::hull(w.weights, w.rank);
}

}  // namespace

Integer torus_orbit_degree(const WeightSet& w) {
    const LatticePolytope p = weight_hull(w);
    if (!p.full_dimensional()) {
        throw DomainError("weight hull has dimension " + std::to_string(p.affine_dim()) + " < " +
                          std::to_string(w.rank) + "; the orbit degree is undefined");
    }
    return normalized_volume(p);
}

Integer torus_crit_count(const WeightSet& w) {
    const LatticePolytope p = weight_hull(w);
    if (!contains_origin_interior(p)) {
        throw DomainError("origin is not interior to the weight hull; translate the weights first");
    }
    LaurentPolynomial f(w.rank);
    for (const auto& x : w.weights) {
        Exponent e(w.rank);
        for (std::size_t i = 0; i < w.rank; ++i) {
            e[i] = static_cast<std::int64_t>(x[i]);
        }
        if (f.coefficient(e) == 0) {
            f.add_term(e, 1);
        }
    }
    const Integer count = mixed_volume_normalized(support_shift_partials(f));
    if (count != normalized_volume(p)) {
        throw Error("internal: critical point count " + to_string(count) + " differs from orbit degree " +
                    to_string(normalized_volume(p)));
    }
    return count;
}

bool is_closed_orbit_embedding(const WeightSet& w) { return contains_origin_interior(weight_hull(w)); }

Integer section_chi(const Integer& chi_X, long dim_X, const Integer& degree) {
    if (dim_X < 1) {
        throw InputError("section Euler characteristic needs a positive-dimensional variety");
    }
    if (degree < 1) {
        throw InputError("degree must be positive");
    }
    return dim_X % 2 == 1 ? Integer(chi_X + degree) : Integer(chi_X - degree);
}

Integer chi_reductive_group() {
    // Holds for every positive-dimensional complex reductive group.
    return 0;
}

Integer chi_homogeneous(unsigned rank_G, unsigned rank_H, const Integer& weyl_G, const Integer& weyl_H) {
    if (rank_H > rank_G) {
        throw InputError("subgroup rank exceeds group rank");
    }
    if (weyl_G < 1 || weyl_H < 1) {
        throw InputError("Weyl group orders must be positive");
    }
    if (rank_H < rank_G) {
        return 0;
    }
    if (weyl_G % weyl_H != 0) {
        throw InputError("Weyl group order " + to_string(weyl_H) + " does not divide " + to_string(weyl_G));
    }
    return weyl_G / weyl_H;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

enum class Kind { A, B, C, D, G2, F4, E6, Torus };

struct Factor {
    Kind kind;
    long k;
};

unsigned factor_rank(const Factor& f) {
    switch (f.kind) {
        case Kind::G2: return 2;
        case Kind::F4: return 4;
        case Kind::E6: return 6;
        default: return f.k > 0 ? static_cast<unsigned>(f.k) : 0;
    }
}

Integer factorial(long k) {
    Integer r = 1;
    for (long i = 2; i <= k; ++i) {
        r *= i;
    }
    return r;
}

Integer factor_weyl(const Factor& f) {
    if (f.k <= 0 && f.kind != Kind::G2 && f.kind != Kind::F4 && f.kind != Kind::E6) {
        return 1;
    }
    switch (f.kind) {
        case Kind::A: return factorial(f.k + 1);
        case Kind::B:
        case Kind::C: return (Integer(1) << f.k) * factorial(f.k);
        case Kind::D: return (Integer(1) << (f.k - 1)) * factorial(f.k);
        case Kind::G2: return 12;
        case Kind::F4: return 1152;
        case Kind::E6: return 51840;
        case Kind::Torus: return 1;
    }
    return 1;
}

using Factors = std::vector<Factor>;
using DimFn = std::function<Integer(long n, long m)>;
using FactorFn = std::function<Factors(long n, long m)>;
using DegreeFn = std::function<std::vector<Integer>(long n, long m)>;
using ValidFn = std::function<bool(long n, long m)>;

struct Row {
    int id;
    const char* group_label;
    const char* isotropy_label;
    DimFn module_dim;
    long orbit_codim;
    FactorFn group;
    /// Empty function for entries without a tabulated isotropy type.
    FactorFn isotropy;
    bool reductive_isotropy;
    DegreeFn degrees;
    ValidFn valid;
    CatalogParams defaults;
};

Factor A(long k) { return {Kind::A, k}; }
Factor B(long k) { return {Kind::B, k}; }
Factor C(long k) { return {Kind::C, k}; }
Factor D(long k) { return {Kind::D, k}; }
Factor T(long k) { return {Kind::Torus, k}; }

DimFn fixed(long v) {
    return [v](long, long) { return Integer(v); };
}
FactorFn fixed_factors(Factors f) {
    return [f](long, long) { return f; };
}
DegreeFn degrees(std::vector<long> d) {
    return [d](long, long) { return std::vector<Integer>(d.begin(), d.end()); };
}
DegreeFn unknown_degrees() {
    return [](long, long) { return std::vector<Integer>{}; };
}
ValidFn n_at_least(long lo) {
    return [lo](long n, long) { return n >= lo; };
}
ValidFn any_params() {
    return [](long, long) { return true; };
}

const std::vector<Row>& rows() {
    static const std::vector<Row> table = [] {
        std::vector<Row> t;
        const auto N = [](long n, long) { return Integer(n); };
        // Simple groups acting irreducibly.
        t.push_back({0, "{e}", "0", fixed(1), 1, fixed_factors({}), fixed_factors({}), true, degrees({1}),
                     any_params(), {0, 0}});
        t.push_back({1, "SL(n)", "A_{n-2}+R_{n-1}", N, 0,
                     [](long n, long) { return Factors{A(n - 1)}; },
                     [](long n, long) { return Factors{A(n - 2)}; }, false, unknown_degrees(), n_at_least(1),
                     {1, 0}});
        t.push_back({2, "Lambda^2 SL(2n)", "C_n", [](long n, long) { return Integer(2 * n * n - n); }, 1,
                     [](long n, long) { return Factors{A(2 * n - 1)}; },
                     [](long n, long) { return Factors{C(n)}; }, true,
                     [](long n, long) { return std::vector<Integer>{n}; }, n_at_least(1), {1, 0}});
        t.push_back({3, "Lambda^2 SL(2n+1)", "C_n+R_{2n}", [](long n, long) { return Integer(2 * n * n + n); }, 0,
                     [](long n, long) { return Factors{A(2 * n)}; },
                     [](long n, long) { return Factors{C(n)}; }, false, unknown_degrees(), n_at_least(1), {1, 0}});
        t.push_back({4, "S^2 SL(2n)", "D_n", [](long n, long) { return Integer(2 * n * n + n); }, 1,
                     [](long n, long) { return Factors{A(2 * n - 1)}; },
                     [](long n, long) { return Factors{D(n)}; }, true,
                     [](long n, long) { return std::vector<Integer>{2 * n}; }, n_at_least(1), {1, 0}});
        t.push_back({5, "S^2 SL(2n+1)", "B_n", [](long n, long) { return Integer(2 * n * n + 3 * n + 1); }, 1,
                     [](long n, long) { return Factors{A(2 * n)}; },
                     [](long n, long) { return Factors{B(n)}; }, true,
                     [](long n, long) { return std::vector<Integer>{2 * n + 1}; }, n_at_least(1), {1, 0}});
        t.push_back({6, "SO(2n)", "B_{n-1}", [](long n, long) { return Integer(2 * n); }, 1,
                     [](long n, long) { return Factors{D(n)}; },
                     [](long n, long) { return Factors{B(n - 1)}; }, true, degrees({2}), n_at_least(1), {1, 0}});
        t.push_back({7, "SO(2n+1)", "D_n", [](long n, long) { return Integer(2 * n + 1); }, 1,
                     [](long n, long) { return Factors{B(n)}; },
                     [](long n, long) { return Factors{D(n)}; }, true, degrees({2}), n_at_least(1), {1, 0}});
        t.push_back({8, "Spin(7)", "G_2", fixed(8), 1, fixed_factors({B(3)}), fixed_factors({{Kind::G2, 2}}), true,
                     degrees({2}), any_params(), {0, 0}});
        t.push_back({9, "Spin(9)", "B_3", fixed(16), 1, fixed_factors({B(4)}), fixed_factors({B(3)}), true,
                     degrees({2}), any_params(), {0, 0}});
        t.push_back({10, "Spin(10)", "B_3+R_8", fixed(16), 0, fixed_factors({D(5)}), fixed_factors({B(3)}), false,
                     unknown_degrees(), any_params(), {0, 0}});
        t.push_back({11, "Sp(2n)", "C_{n-1}+R_{2n-1}", [](long n, long) { return Integer(2 * n); }, 0,
                     [](long n, long) { return Factors{C(n)}; },
                     [](long n, long) { return Factors{C(n - 1)}; }, false, unknown_degrees(), n_at_least(1),
                     {1, 0}});
        t.push_back({12, "G_2", "A_2", fixed(7), 1, fixed_factors({{Kind::G2, 2}}), fixed_factors({A(2)}), true,
                     degrees({2}), any_params(), {0, 0}});
        t.push_back({13, "E_6", "F_4", fixed(27), 1, fixed_factors({{Kind::E6, 6}}), fixed_factors({{Kind::F4, 4}}),
                     true, degrees({3}), any_params(), {0, 0}});
        // Non-simple groups acting irreducibly.
        t.push_back({14, "SL(2) x K*", "t_1", fixed(4), 1, fixed_factors({A(1), T(1)}), fixed_factors({T(1)}), true,
                     degrees({2}), any_params(), {0, 0}});
        t.push_back({15, "SL(n) x K*, n>2", "A_{n-3}+t_1+R_{2(n-2)}", [](long n, long) { return Integer(2 * n); }, 0,
                     [](long n, long) { return Factors{A(n - 1), T(1)}; },
                     [](long n, long) { return Factors{A(n - 3), T(1)}; }, false, unknown_degrees(), n_at_least(3),
                     {3, 0}});
        t.push_back({16, "SL(n), n>2", "A_{n-2}", [](long n, long) { return Integer(2 * n); }, 1,
                     [](long n, long) { return Factors{A(n - 1)}; },
                     [](long n, long) { return Factors{A(n - 2)}; }, true, degrees({2}), n_at_least(3), {3, 0}});
        t.push_back({17, "SL(2n+1)", "C_n", [](long n, long) { return Integer((2 * n + 1) * (n + 1)); }, 1,
                     [](long n, long) { return Factors{A(2 * n)}; },
                     [](long n, long) { return Factors{C(n)}; }, true,
                     [](long n, long) { return std::vector<Integer>{n + 1}; }, n_at_least(1), {1, 0}});
        t.push_back({18, "SL(2n+1) x K*", "C_{n-1}+t_1+R_{2(2n-1)}",
                     [](long n, long) { return Integer((2 * n + 1) * (n + 1)); }, 0,
                     [](long n, long) { return Factors{A(2 * n), T(1)}; },
                     [](long n, long) { return Factors{C(n - 1), T(1)}; }, false, unknown_degrees(), n_at_least(1),
                     {1, 0}});
        t.push_back({19, "SL(2n)", "C_{n-1}+R_{2n-1}", [](long n, long) { return Integer(n * (2 * n + 1)); }, 1,
                     [](long n, long) { return Factors{A(2 * n - 1)}; },
                     [](long n, long) { return Factors{C(n - 1)}; }, false,
                     [](long n, long) { return std::vector<Integer>{n}; }, n_at_least(1), {1, 0}});
        t.push_back({20, "SO(8)", "G_2", fixed(16), 2, fixed_factors({D(4)}), fixed_factors({{Kind::G2, 2}}), true,
                     degrees({2, 2}), any_params(), {0, 0}});
        t.push_back({21, "Sp(2n) x K*", "C_{n-1}+t_1", [](long n, long) { return Integer(4 * n); }, 1,
                     [](long n, long) { return Factors{C(n), T(1)}; },
                     [](long n, long) { return Factors{C(n - 1), T(1)}; }, true, degrees({2}), n_at_least(1),
                     {1, 0}});
        t.push_back({22, "SL(n) x SL(m), n>m", "A_{n-m-1}+A_{m-1}+R_{nm-m^2}",
                     [](long n, long m) { return Integer(n * m); }, 0,
                     [](long n, long m) { return Factors{A(n - 1), A(m - 1)}; },
                     [](long n, long m) { return Factors{A(n - m - 1), A(m - 1)}; }, false, unknown_degrees(),
                     [](long n, long m) { return m >= 1 && n > m; }, {2, 1}});
        t.push_back({23, "SL(n) x SL(n)", "A_{n-1}", [](long n, long) { return Integer(n * n); }, 1,
                     [](long n, long) { return Factors{A(n - 1), A(n - 1)}; },
                     [](long n, long) { return Factors{A(n - 1)}; }, true,
                     [](long n, long) { return std::vector<Integer>{n}; }, n_at_least(1), {2, 0}});
        t.push_back({24, "SL(2) x Sp(2n)", "C_{n-1}+A_1", [](long n, long) { return Integer(4 * n); }, 1,
                     [](long n, long) { return Factors{A(1), C(n)}; },
                     [](long n, long) { return Factors{C(n - 1), A(1)}; }, true, degrees({2}), n_at_least(1),
                     {1, 0}});
        t.push_back({25, "SL(3) x Sp(2n) x K*, n>1", "C_{n-2}+A_1+t_1+R_{2n-1}",
                     [](long n, long) { return Integer(6 * n); }, 0,
                     [](long n, long) { return Factors{A(2), C(n), T(1)}; },
                     [](long n, long) { return Factors{C(n - 2), A(1), T(1)}; }, false, unknown_degrees(),
                     n_at_least(2), {2, 0}});
        t.push_back({26, "SL(4) x Sp(4)", "C_2", fixed(16), 1, fixed_factors({A(3), C(2)}), fixed_factors({C(2)}),
                     true, degrees({4}), any_params(), {0, 0}});
        t.push_back({27, "SL(n) x Sp(4), n>4", "A_{n-5}+C_2+R_{4(n-4)}", [](long n, long) { return Integer(4 * n); },
                     0, [](long n, long) { return Factors{A(n - 1), C(2)}; },
                     [](long n, long) { return Factors{A(n - 5), C(2)}; }, false, unknown_degrees(), n_at_least(5),
                     {5, 0}});
        // Remaining entries; generic isotropy is not recorded for these.
        t.push_back({28, "SL(n) x SL(n) x K*", "", [](long n, long) { return Integer(n * (n + 1)); }, 1,
                     [](long n, long) { return Factors{A(n - 1), A(n - 1), T(1)}; }, {}, false,
                     [](long n, long) { return std::vector<Integer>{n}; }, n_at_least(1), {1, 0}});
        t.push_back({29, "SL(n+1) x SL(n) x K*", "", [](long n, long) { return Integer((n + 1) * (n + 1)); }, 1,
                     [](long n, long) { return Factors{A(n), A(n - 1), T(1)}; }, {}, false, unknown_degrees(),
                     n_at_least(1), {1, 0}});
        t.push_back({30, "SL(n+1) x SL(n) x K* x K*, n>1", "", [](long n, long) { return Integer((n + 1) * (n + 1)); },
                     0, [](long n, long) { return Factors{A(n), A(n - 1), T(2)}; }, {}, false, unknown_degrees(),
                     n_at_least(2), {2, 0}});
        t.push_back({31, "SL(n) x SL(m) x K*, n>m+1", "", [](long n, long m) { return Integer(n * (m + 1)); }, 0,
                     [](long n, long m) { return Factors{A(n - 1), A(m - 1), T(1)}; }, {}, false, unknown_degrees(),
                     [](long n, long m) { return m >= 1 && n > m + 1; }, {3, 1}});
        t.push_back({32, "SL(n) x SL(m) x K*, n>m+1>2", "", [](long n, long m) { return Integer(n * (m + 1)); }, 0,
                     [](long n, long m) { return Factors{A(n - 1), A(m - 1), T(1)}; }, {}, false, unknown_degrees(),
                     [](long n, long m) { return m + 1 > 2 && n > m + 1; }, {4, 2}});
        t.push_back({33, "SL(n) x SL(m) x K*, n<m", "", [](long n, long m) { return Integer(n * (m + 1)); }, 0,
                     [](long n, long m) { return Factors{A(n - 1), A(m - 1), T(1)}; }, {}, false, unknown_degrees(),
                     [](long n, long m) { return n >= 1 && n < m; }, {1, 2}});
        t.push_back({34, "SL(n) x SL(2) x SL(m), n>2, m>2", "", [](long n, long m) { return Integer(2 * (n + m)); },
                     0, [](long n, long m) { return Factors{A(n - 1), A(1), A(m - 1)}; }, {}, false,
                     unknown_degrees(), [](long n, long m) { return n > 2 && m > 2; }, {3, 3}});
        t.push_back({35, "SL(n) x SL(2) x Sp(2m), n>2, m>=1", "",
                     [](long n, long m) { return Integer(2 * (n + 2 * m)); }, 1,
                     [](long n, long m) { return Factors{A(n - 1), A(1), C(m)}; }, {}, false, degrees({2}),
                     [](long n, long m) { return n > 2 && m >= 1; }, {3, 1}});
        t.push_back({36, "Sp(2n) x SL(2) x Sp(2m), n,m>=1", "", [](long n, long m) { return Integer(4 * (m + n)); },
                     2, [](long n, long m) { return Factors{C(n), A(1), C(m)}; }, {}, false, degrees({2, 2}),
                     [](long n, long m) { return n >= 1 && m >= 1; }, {1, 1}});
        t.push_back({37, "SL(2) x Sp(2n) x K*", "", [](long n, long) { return Integer(2 * (2 * n + 1)); }, 1,
                     [](long n, long) { return Factors{A(1), C(n), T(1)}; }, {}, false, degrees({2}),
                     n_at_least(1), {1, 0}});
        return t;
    }();
    return table;
}

constexpr std::array<int, 21> kClosedGeneric = {0,  2,  4,  5,  6,  7,  12, 14, 16, 17, 19,
                                                20, 21, 23, 24, 26, 28, 29, 35, 36, 37};

const Row& row(int id) {
    if (id < 0 || id >= static_cast<int>(rows().size())) {
        throw InputError("unknown catalog id " + std::to_string(id) + " (valid ids are 0-37)");
    }
    return rows()[static_cast<std::size_t>(id)];
}

std::pair<unsigned, Integer> rank_and_weyl(const Factors& fs) {
    unsigned rank = 0;
    Integer weyl = 1;
    for (const auto& f : fs) {
        rank += factor_rank(f);
        weyl *= factor_weyl(f);
    }
    return {rank, weyl};
}

}  // namespace

std::vector<int> catalog_ids() {
    std::vector<int> ids;
    for (const auto& r : rows()) {
        ids.push_back(r.id);
    }
    return ids;
}

CatalogParams catalog_default_params(int id) { return row(id).defaults; }

CatalogEntry catalog_lookup(int id) { return catalog_lookup(id, catalog_default_params(id)); }

CatalogEntry catalog_lookup(int id, const CatalogParams& params) {
    const Row& r = row(id);
    if (!r.valid(params.n, params.m)) {
        throw InputError("parameters n=" + std::to_string(params.n) + ", m=" + std::to_string(params.m) +
                         " are not admissible for catalog entry " + std::to_string(id) + " (" + r.group_label + ")");
    }
    CatalogEntry e;
    e.id = r.id;
    e.group_label = r.group_label;
    e.isotropy_label = r.isotropy_label;
    e.params = params;
    e.module_dim = r.module_dim(params.n, params.m);
    e.orbit_codim = r.orbit_codim;
    e.invariant_degrees = r.degrees(params.n, params.m);
    e.closed_generic_orbits =
        std::find(kClosedGeneric.begin(), kClosedGeneric.end(), id) != kClosedGeneric.end();
    e.reductive_isotropy = r.reductive_isotropy;
    e.orbit_chi = 0;
    if (r.isotropy) {
        const auto [rank_g, weyl_g] = rank_and_weyl(r.group(params.n, params.m));
        const auto [rank_h, weyl_h] = rank_and_weyl(r.isotropy(params.n, params.m));
        e.orbit_chi = chi_homogeneous(rank_g, rank_h, weyl_g, weyl_h);
        e.orbit_chi_known = true;
    }
    return e;
}

Integer catalog_section_chi(int id, const CatalogParams& params) {
    const CatalogEntry e = catalog_lookup(id, params);
    if (!e.closed_generic_orbits && !e.reductive_isotropy) {
        throw InputError("catalog entry " + std::to_string(id) + " does not have closed generic orbits");
    }
    if (e.invariant_degrees.size() != 1) {
        throw InputError(e.invariant_degrees.empty()
                             ? "catalog entry " + std::to_string(id) + " has no known invariant"
                             : "catalog entry " + std::to_string(id) + " has several invariants");
    }
    const Integer orbit_dim = e.module_dim - e.orbit_codim;
    if (orbit_dim < 1) {
        throw InputError("generic orbit of catalog entry " + std::to_string(id) + " is a point");
    }
    return section_chi(e.orbit_chi, orbit_dim.convert_to<long>(), e.invariant_degrees.front());
}

}  // namespace polyinv
