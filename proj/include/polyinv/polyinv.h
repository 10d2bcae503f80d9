/*
 * C interface to the polyinv library.
 *
 * Conventions:
 *   - Every fallible function returns a pi_status; on failure the message is
 *     available from pi_last_error() on the same thread until the next call.
 *   - Strings returned through char** are heap-allocated and must be released
 *     with pi_string_free(). Big integers are returned as decimal strings.
 *   - Handles are released with their matching *_free function; freeing NULL
 *     is a no-op.
 *   - Structured results are JSON documents with a fixed field order.
 */
#ifndef POLYINV_H
#define POLYINV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PI_API __declspec(dllexport)
#else
#define PI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pi_status {
    PI_OK = 0,
    PI_ERR_INPUT = 1,      /* malformed or inconsistent input */
    PI_ERR_DOMAIN = 2,     /* input outside an operation's precondition */
    PI_ERR_GENERICITY = 3, /* degenerate data, or resampling exhausted */
    PI_ERR_PARSE = 4,      /* polynomial syntax error */
    PI_ERR_INTERNAL = 5
} pi_status;

typedef struct pi_polytope pi_polytope;
typedef struct pi_system pi_system;

PI_API const char* pi_version(void);
PI_API const char* pi_last_error(void);
PI_API const char* pi_status_name(pi_status status);
PI_API void pi_string_free(char* s);

/* ---- lattice polytopes ---- */

/* JSON: {"points": [[...]], "dim"?: d} or {"simplex": d, "scale"?: k}. */
PI_API pi_status pi_polytope_from_json(const char* json, pi_polytope** out);
/* count points of length dim, row-major. */
PI_API pi_status pi_polytope_from_points(size_t dim, size_t count, const int64_t* coords, pi_polytope** out);
PI_API pi_status pi_polytope_unit_simplex(size_t dim, pi_polytope** out);
PI_API pi_status pi_polytope_dilate(const pi_polytope* p, int64_t k, pi_polytope** out);
PI_API pi_status pi_polytope_translate(const pi_polytope* p, const int64_t* t, pi_polytope** out);
PI_API pi_status pi_polytope_minkowski_sum(const pi_polytope* p, const pi_polytope* q, pi_polytope** out);
PI_API void pi_polytope_free(pi_polytope* p);

PI_API size_t pi_polytope_ambient_dim(const pi_polytope* p);
PI_API int pi_polytope_affine_dim(const pi_polytope* p);
PI_API size_t pi_polytope_vertex_count(const pi_polytope* p);
/* {"dim", "affine_dim", "vertices"} with vertices in lexicographic order. */
PI_API pi_status pi_polytope_to_json(const pi_polytope* p, char** out);
PI_API pi_status pi_polytope_normalized_volume(const pi_polytope* p, char** out);
PI_API pi_status pi_polytope_contains_origin_interior(const pi_polytope* p, int* out);

/* Normalized mixed volume of count polytopes in dimension count. */
PI_API pi_status pi_mixed_volume(const pi_polytope* const* polys, size_t count, char** out);
/* JSON array of polytope objects, or {"polytopes": [...]}. */
PI_API pi_status pi_mixed_volume_json(const char* json, char** out);

/* ---- Laurent systems ---- */

/* names may be NULL (variables x1, x2, ...). */
PI_API pi_status pi_system_parse(const char* const* polys, size_t count, const char* const* names, size_t num_names,
                                 pi_system** out);
/* has_param = 0 leaves "param" degrees unresolved (an error if used). */
PI_API pi_status pi_system_from_json(const char* json, int has_param, long param, pi_system** out);
PI_API void pi_system_free(pi_system* s);
PI_API size_t pi_system_num_vars(const pi_system* s);
PI_API size_t pi_system_size(const pi_system* s);
/* {"vars": [...], "polys": ["...", ...]} in canonical rendering. */
PI_API pi_status pi_system_to_json(const pi_system* s, char** out);
/* Term-list JSON of polynomial index. */
PI_API pi_status pi_system_polynomial_json(const pi_system* s, size_t index, char** out);
PI_API pi_status pi_system_newton_polytope(const pi_system* s, size_t index, pi_polytope** out);

PI_API pi_status pi_bkk_count(const pi_system* s, char** out);
PI_API pi_status pi_chi_torus(const pi_system* s, char** out);
/* {"total", "strata": [{"stratum", "zero_set", "chi", "empty_because"?}]} */
PI_API pi_status pi_chi_affine(const pi_system* s, char** out_json);

/* ---- orbits ---- */

/* Weight JSON: {"rank"?: n, "weights": [[...]]} or a bare array. */
PI_API pi_status pi_orbit_degree(const char* weights_json, char** out);
PI_API pi_status pi_orbit_crit_count(const char* weights_json, char** out);
PI_API pi_status pi_orbit_is_closed(const char* weights_json, int* out);
PI_API pi_status pi_section_chi(const char* chi_X, long dim_X, const char* degree, char** out);
PI_API pi_status pi_chi_reductive_group(char** out);
PI_API pi_status pi_chi_homogeneous(unsigned rank_G, unsigned rank_H, const char* weyl_G, const char* weyl_H,
                                    char** out);
/* use_defaults != 0 ignores n and m and uses the entry's smallest admissible parameters. */
PI_API pi_status pi_catalog_entry(int id, int use_defaults, long n, long m, char** out_json);
/* All entries at their default parameters, as a JSON array. */
PI_API pi_status pi_catalog_json(char** out_json);
PI_API pi_status pi_catalog_section_chi(int id, int use_defaults, long n, long m, char** out);

/* ---- numeric critical points ---- */

typedef struct pi_crit_options {
    double tolerance;          /* default 1e-8 */
    double cluster_separation; /* default 1e-6 */
    double zero_cutoff;        /* default 1e-10 */
    int max_retries;           /* default 5 */
    uint64_t seed;
} pi_crit_options;

PI_API pi_crit_options pi_crit_default_options(void);

/* f: n complex numbers as interleaved (re, im). Report JSON as for CritReport. */
PI_API pi_status pi_quadric_crit(size_t n, const double* f, double c_re, double c_im, const pi_crit_options* opt,
                                 char** out_json);
/* F: n x n complex matrix, row-major, interleaved (re, im). */
PI_API pi_status pi_det_crit(size_t n, const double* F, double c_re, double c_im, const pi_crit_options* opt,
                             char** out_json);
PI_API pi_status pi_univariate_crit_count(const int64_t* support, size_t count, const pi_crit_options* opt,
                                          char** out_json);
PI_API pi_status pi_univariate_root_count(const int64_t* support, size_t count, const pi_crit_options* opt,
                                          char** out_json);
PI_API pi_status pi_bivariate_root_count(const pi_system* s, const pi_crit_options* opt, char** out_json);

/* ---- Chern classes ---- */

/*
 * data_json: {"n", "deg_top", "chern": [...], "d", "h_inf"?}. The report holds
 * chi_M, chi_D (ring and explicit sum), chern_of_divisor coefficients,
 * chi_affine (n >= 2), mu and mu_paper_sign.
 */
PI_API pi_status pi_chern_report(const char* data_json, char** out_json);
PI_API pi_status pi_chern_chi_divisor(const char* data_json, char** out);
PI_API pi_status pi_chern_chi_two_divisors(const char* data_json, int64_t d1, int64_t d2, char** out);
PI_API pi_status pi_chern_chi_affine(const char* data_json, char** out);
PI_API pi_status pi_chern_mu(const char* data_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
