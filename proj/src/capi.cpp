#include "polyinv/polyinv.h"

#include "json_io.hpp"
#include "polyinv/chern.hpp"
#include "polyinv/chi.hpp"
#include "polyinv/crit.hpp"
#include "polyinv/error.hpp"
#include "polyinv/lattice.hpp"
#include "polyinv/laurent.hpp"
#include "polyinv/mixed_volume.hpp"
#include "polyinv/orbit.hpp"

#include <cstring>
#include <new>
#include <string>

struct pi_polytope {
    polyinv::LatticePolytope value;
};

struct pi_system {
    polyinv::PolySystem value;
};

namespace {

using namespace polyinv;
using json_io::Json;

thread_local std::string last_error;

template <typename F>
pi_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return PI_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return PI_ERR_PARSE;
    } catch (const InputError& e) {
        last_error = e.what();
        return PI_ERR_INPUT;
    } catch (const DomainError& e) {
        last_error = e.what();
        return PI_ERR_DOMAIN;
    } catch (const GenericityError& e) {
        last_error = e.what();
        return PI_ERR_GENERICITY;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PI_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PI_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return PI_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (p == nullptr) {
        throw InputError(std::string(what) + " is NULL");
    }
}

void emit(char** out, const std::string& s) {
    require(out, "output pointer");
    *out = copy_string(s);
}

void emit(char** out, const Integer& v) { emit(out, to_string(v)); }

void emit(char** out, const Json& j) { emit(out, j.dump()); }

Json parse_json(const char* text) {
    require(text, "JSON text");
    return json_io::parse_text(text);
}

pi_polytope* wrap(LatticePolytope p) { return new pi_polytope{std::move(p)}; }

Integer parse_integer(const char* text, const char* what) {
    require(text, what);
    try {
        return Integer(text);
    } catch (const std::exception&) {
        throw InputError(std::string(what) + " is not an integer: '" + text + "'");
    }
}

CritOptions crit_options(const pi_crit_options* opt) {
    CritOptions o;
    if (opt != nullptr) {
        o.tolerance = opt->tolerance;
        o.cluster_separation = opt->cluster_separation;
        o.zero_cutoff = opt->zero_cutoff;
        o.max_retries = opt->max_retries;
        o.seed = opt->seed;
    }
    if (!(o.tolerance > 0) || !(o.cluster_separation > 0) || !(o.zero_cutoff >= 0) || o.max_retries < 0) {
        throw InputError("invalid numeric options");
    }
    return o;
}

CatalogParams catalog_params(int id, int use_defaults, long n, long m) {
    return use_defaults != 0 ? catalog_default_params(id) : CatalogParams{n, m};
}

}  // namespace

extern "C" {

const char* pi_version(void) { return "1.0.0"; }

const char* pi_last_error(void) { return last_error.c_str(); }

const char* pi_status_name(pi_status status) {
    switch (status) {
        case PI_OK: return "ok";
        case PI_ERR_INPUT: return "input error";
        case PI_ERR_DOMAIN: return "domain error";
        case PI_ERR_GENERICITY: return "genericity error";
        case PI_ERR_PARSE: return "parse error";
        case PI_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void pi_string_free(char* s) { std::free(s); }

// ---- polytopes ----

pi_status pi_polytope_from_json(const char* json, pi_polytope** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = wrap(json_io::polytope_from_json(parse_json(json)));
    });
}

pi_status pi_polytope_from_points(size_t dim, size_t count, const int64_t* coords, pi_polytope** out) {
    return guarded([&] {
        require(out, "output pointer");
        if (count > 0 && dim > 0) {
            require(coords, "coordinates");
        }
        std::vector<LatticePoint> pts;
        for (size_t i = 0; i < count; ++i) {
            IntVector v;
            for (size_t k = 0; k < dim; ++k) {
                v.emplace_back(coords[i * dim + k]);
            }
            pts.emplace_back(std::move(v));
        }
        *out = wrap(LatticePolytope::hull(pts, dim));
    });
}

pi_status pi_polytope_unit_simplex(size_t dim, pi_polytope** out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = wrap(unit_simplex(dim));
    });
}

pi_status pi_polytope_dilate(const pi_polytope* p, int64_t k, pi_polytope** out) {
    return guarded([&] {
        require(p, "polytope");
        require(out, "output pointer");
        *out = wrap(dilate(p->value, Integer(k)));
    });
}

pi_status pi_polytope_translate(const pi_polytope* p, const int64_t* t, pi_polytope** out) {
    return guarded([&] {
        require(p, "polytope");
        require(out, "output pointer");
        IntVector v;
        if (p->value.ambient_dim() > 0) {
            require(t, "translation");
        }
        for (size_t k = 0; k < p->value.ambient_dim(); ++k) {
            v.emplace_back(t[k]);
        }
        *out = wrap(translate(p->value, LatticePoint(std::move(v))));
    });
}

pi_status pi_polytope_minkowski_sum(const pi_polytope* p, const pi_polytope* q, pi_polytope** out) {
    return guarded([&] {
        require(p, "polytope");
        require(q, "polytope");
        require(out, "output pointer");
        *out = wrap(minkowski_sum(p->value, q->value));
    });
}

void pi_polytope_free(pi_polytope* p) { delete p; }

size_t pi_polytope_ambient_dim(const pi_polytope* p) { return p == nullptr ? 0 : p->value.ambient_dim(); }

int pi_polytope_affine_dim(const pi_polytope* p) { return p == nullptr ? -1 : p->value.affine_dim(); }

size_t pi_polytope_vertex_count(const pi_polytope* p) { return p == nullptr ? 0 : p->value.vertices().size(); }

pi_status pi_polytope_to_json(const pi_polytope* p, char** out) {
    return guarded([&] {
        require(p, "polytope");
        emit(out, json_io::polytope_to_json(p->value));
    });
}

pi_status pi_polytope_normalized_volume(const pi_polytope* p, char** out) {
    return guarded([&] {
        require(p, "polytope");
        emit(out, normalized_volume(p->value));
    });
}

pi_status pi_polytope_contains_origin_interior(const pi_polytope* p, int* out) {
    return guarded([&] {
        require(p, "polytope");
        require(out, "output pointer");
        *out = contains_origin_interior(p->value) ? 1 : 0;
    });
}

pi_status pi_mixed_volume(const pi_polytope* const* polys, size_t count, char** out) {
    return guarded([&] {
        if (count > 0) {
            require(polys, "polytope array");
        }
        PolytopeTuple tuple;
        for (size_t i = 0; i < count; ++i) {
            require(polys[i], "polytope");
            tuple.push_back(polys[i]->value);
        }
        emit(out, mixed_volume_normalized(tuple));
    });
}

pi_status pi_mixed_volume_json(const char* json, char** out) {
    return guarded([&] { emit(out, mixed_volume_normalized(json_io::polytope_list_from_json(parse_json(json)))); });
}

// ---- systems ----

pi_status pi_system_parse(const char* const* polys, size_t count, const char* const* names, size_t num_names,
                          pi_system** out) {
    return guarded([&] {
        require(out, "output pointer");
        if (count > 0) {
            require(polys, "polynomial array");
        }
        std::vector<std::string> name_list;
        if (num_names > 0) {
            require(names, "name array");
            for (size_t i = 0; i < num_names; ++i) {
                require(names[i], "variable name");
                name_list.emplace_back(names[i]);
            }
        }
        std::size_t nvars = name_list.size();
        if (name_list.empty()) {
            for (size_t i = 0; i < count; ++i) {
                require(polys[i], "polynomial");
                nvars = std::max(nvars, parse(polys[i]).num_vars());
            }
        }
        std::vector<LaurentPolynomial> ps;
        for (size_t i = 0; i < count; ++i) {
            require(polys[i], "polynomial");
            ps.push_back(parse(polys[i], name_list, nvars));
        }
        *out = new pi_system{PolySystem(nvars, std::move(ps), std::move(name_list))};
    });
}

pi_status pi_system_from_json(const char* json, int has_param, long param, pi_system** out) {
    return guarded([&] {
        require(out, "output pointer");
        const std::optional<long> p = has_param != 0 ? std::optional<long>(param) : std::nullopt;
        *out = new pi_system{json_io::system_from_json(parse_json(json), p)};
    });
}

void pi_system_free(pi_system* s) { delete s; }

size_t pi_system_num_vars(const pi_system* s) { return s == nullptr ? 0 : s->value.num_vars(); }

size_t pi_system_size(const pi_system* s) { return s == nullptr ? 0 : s->value.size(); }

pi_status pi_system_to_json(const pi_system* s, char** out) {
    return guarded([&] {
        require(s, "system");
        emit(out, json_io::system_to_json(s->value));
    });
}

pi_status pi_system_polynomial_json(const pi_system* s, size_t index, char** out) {
    return guarded([&] {
        require(s, "system");
        if (index >= s->value.size()) {
            throw InputError("polynomial index out of range");
        }
        emit(out, json_io::polynomial_to_json(s->value[index]));
    });
}

pi_status pi_system_newton_polytope(const pi_system* s, size_t index, pi_polytope** out) {
    return guarded([&] {
        require(s, "system");
        require(out, "output pointer");
        if (index >= s->value.size()) {
            throw InputError("polynomial index out of range");
        }
        *out = wrap(newton_polytope(s->value[index]));
    });
}

pi_status pi_bkk_count(const pi_system* s, char** out) {
    return guarded([&] {
        require(s, "system");
        emit(out, bkk_count(s->value));
    });
}

pi_status pi_chi_torus(const pi_system* s, char** out) {
    return guarded([&] {
        require(s, "system");
        std::vector<LatticePolytope> polys;
        for (const auto& p : s->value.polys()) {
            if (p.is_zero()) {
                throw InputError("system contains the zero polynomial");
            }
            polys.push_back(newton_polytope(p));
        }
        emit(out, chi_torus_ci(polys));
    });
}

pi_status pi_chi_affine(const pi_system* s, char** out_json) {
    return guarded([&] {
        require(s, "system");
        emit(out_json, json_io::affine_chi_to_json(chi_affine_ci(s->value)));
    });
}

// ---- orbits ----

pi_status pi_orbit_degree(const char* weights_json, char** out) {
    return guarded([&] { emit(out, torus_orbit_degree(json_io::weights_from_json(parse_json(weights_json)))); });
}

pi_status pi_orbit_crit_count(const char* weights_json, char** out) {
    return guarded([&] { emit(out, torus_crit_count(json_io::weights_from_json(parse_json(weights_json)))); });
}

pi_status pi_orbit_is_closed(const char* weights_json, int* out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = is_closed_orbit_embedding(json_io::weights_from_json(parse_json(weights_json))) ? 1 : 0;
    });
}

pi_status pi_section_chi(const char* chi_X, long dim_X, const char* degree, char** out) {
    return guarded([&] {
        emit(out, section_chi(parse_integer(chi_X, "chi"), dim_X, parse_integer(degree, "degree")));
    });
}

pi_status pi_chi_reductive_group(char** out) {
    return guarded([&] { emit(out, chi_reductive_group()); });
}

pi_status pi_chi_homogeneous(unsigned rank_G, unsigned rank_H, const char* weyl_G, const char* weyl_H, char** out) {
    return guarded([&] {
        emit(out, chi_homogeneous(rank_G, rank_H, parse_integer(weyl_G, "Weyl order"),
                                  parse_integer(weyl_H, "Weyl order")));
    });
}

pi_status pi_catalog_entry(int id, int use_defaults, long n, long m, char** out_json) {
    return guarded([&] {
        emit(out_json, json_io::catalog_entry_to_json(catalog_lookup(id, catalog_params(id, use_defaults, n, m))));
    });
}

pi_status pi_catalog_json(char** out_json) {
    return guarded([&] {
        Json all = Json::array();
        for (int id : catalog_ids()) {
            all.push_back(json_io::catalog_entry_to_json(catalog_lookup(id)));
        }
        emit(out_json, all);
    });
}

pi_status pi_catalog_section_chi(int id, int use_defaults, long n, long m, char** out) {
    return guarded([&] { emit(out, catalog_section_chi(id, catalog_params(id, use_defaults, n, m))); });
}

// ---- numeric ----

pi_crit_options pi_crit_default_options(void) {
    const CritOptions d;
    return pi_crit_options{d.tolerance, d.cluster_separation, d.zero_cutoff, d.max_retries, d.seed};
}

pi_status pi_quadric_crit(size_t n, const double* f, double c_re, double c_im, const pi_crit_options* opt,
                          char** out_json) {
    return guarded([&] {
        if (n > 0) {
            require(f, "functional");
        }
        ComplexVector v(static_cast<Eigen::Index>(n));
        for (size_t i = 0; i < n; ++i) {
            v(static_cast<Eigen::Index>(i)) = Complex(f[2 * i], f[2 * i + 1]);
        }
        emit(out_json, json_io::crit_report_to_json(quadric_crit(v, Complex(c_re, c_im), crit_options(opt))));
    });
}

pi_status pi_det_crit(size_t n, const double* F, double c_re, double c_im, const pi_crit_options* opt,
                      char** out_json) {
    return guarded([&] {
        if (n > 0) {
            require(F, "functional matrix");
        }
        ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                const size_t k = 2 * (i * n + j);
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(F[k], F[k + 1]);
            }
        }
        emit(out_json, json_io::crit_report_to_json(det_crit(m, Complex(c_re, c_im), crit_options(opt))));
    });
}

pi_status pi_univariate_crit_count(const int64_t* support, size_t count, const pi_crit_options* opt,
                                   char** out_json) {
    return guarded([&] {
        if (count > 0) {
            require(support, "support");
        }
        const std::vector<std::int64_t> s(support, support + count);
        emit(out_json, json_io::crit_report_to_json(univariate_crit_count(s, crit_options(opt))));
    });
}

pi_status pi_univariate_root_count(const int64_t* support, size_t count, const pi_crit_options* opt,
                                   char** out_json) {
    return guarded([&] {
        if (count > 0) {
            require(support, "support");
        }
        const std::vector<std::int64_t> s(support, support + count);
        emit(out_json, json_io::crit_report_to_json(univariate_root_count(s, crit_options(opt))));
    });
}

pi_status pi_bivariate_root_count(const pi_system* s, const pi_crit_options* opt, char** out_json) {
    return guarded([&] {
        require(s, "system");
        emit(out_json, json_io::crit_report_to_json(bivariate_root_count(s->value, crit_options(opt))));
    });
}

// ---- Chern ----

pi_status pi_chern_report(const char* data_json, char** out_json) {
    return guarded([&] {
        const IntersectionData data = json_io::intersection_from_json(parse_json(data_json));
        Json out;
        out["data"] = json_io::intersection_to_json(data);
        out["chi_M"] = json_io::integer_json(chi_manifold(data));
        Json coeffs = Json::array();
        const RingElement divisor_class = chern_of_divisor(data);
        for (const auto& c : divisor_class.coefficients()) {
            coeffs.push_back(to_string(c));
        }
        out["chern_of_divisor"] = std::move(coeffs);
        out["chi_D"] = json_io::integer_json(chi_divisor(data));
        out["chi_D_sum"] = json_io::integer_json(chi_divisor_sum(data));
        if (data.n >= 2) {
            out["chi_D_H"] = json_io::integer_json(chi_two_divisors(data, data.d, data.h_inf));
            out["chi_affine"] = json_io::integer_json(chi_affine_divisor(data));
        } else {
            out["chi_D_H"] = 0;
            out["chi_affine"] = nullptr;
        }
        const Integer mu = mu_from_chern(data);
        out["mu"] = json_io::integer_json(mu);
        out["mu_paper_sign"] = json_io::integer_json(-mu);
        emit(out_json, out);
    });
}

pi_status pi_chern_chi_divisor(const char* data_json, char** out) {
    return guarded([&] { emit(out, chi_divisor(json_io::intersection_from_json(parse_json(data_json)))); });
}

pi_status pi_chern_chi_two_divisors(const char* data_json, int64_t d1, int64_t d2, char** out) {
    return guarded([&] {
        emit(out, chi_two_divisors(json_io::intersection_from_json(parse_json(data_json)), Integer(d1), Integer(d2)));
    });
}

pi_status pi_chern_chi_affine(const char* data_json, char** out) {
    return guarded([&] { emit(out, chi_affine_divisor(json_io::intersection_from_json(parse_json(data_json)))); });
}

pi_status pi_chern_mu(const char* data_json, char** out) {
    return guarded([&] { emit(out, mu_from_chern(json_io::intersection_from_json(parse_json(data_json)))); });
}

}  // extern "C"
