/*
 * C interface to the platonic-lefschetz library.
 *
 * Exact-arithmetic construction of the graded Artinian Gorenstein algebra
 * R[d_1..d_n]/Ann(F_P) attached to the face poset of a polyhedron, with
 * Hilbert functions, higher Hessian matrices, strong-Lefschetz and
 * Hodge-Riemann certification.
 *
 * Conventions:
 *  - All handles are opaque; every *_free accepts NULL.
 *  - Functions return LEF_OK on success; on failure lef_last_error() gives a
 *    message for the calling thread.
 *  - Structured data crosses the boundary as JSON text. Rational numbers are
 *    strings "p" or "p/q". Strings returned through char** are owned by the
 *    caller and released with lef_string_free.
 */
#ifndef LEFSCHETZ_H
#define LEFSCHETZ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lef_status {
  LEF_OK = 0,
  LEF_ERR_INVALID_ARGUMENT = 1, /* bad handle, bad name, precondition failed */
  LEF_ERR_PARSE = 2,            /* malformed JSON or rational literal */
  LEF_ERR_DOMAIN = 3,           /* mathematical precondition violated */
  LEF_ERR_IO = 4,
  LEF_ERR_INTERNAL = 5
} lef_status;

typedef struct lef_poset lef_poset;
typedef struct lef_algebra lef_algebra;
typedef struct lef_matrix lef_matrix;

const char* lef_version(void);
const char* lef_status_name(lef_status status);
/* Message for the most recent failure on this thread. */
const char* lef_last_error(void);
void lef_string_free(char* s);

/* ---- face posets -------------------------------------------------- */

/* name: tetrahedron | hexahedron | octahedron | dodecahedron | icosahedron */
lef_status lef_poset_builtin(const char* name, lef_poset** out);
/* {"name": "...", "n_vertices": N, "faces": [[1,2,3], ...]} */
lef_status lef_poset_from_json(const char* json_text, lef_poset** out);
void lef_poset_free(lef_poset* poset);
lef_status lef_poset_to_json(const lef_poset* poset, char** json_out);
/* check_euler != 0 additionally requires V - E + F = 2. */
lef_status lef_poset_validate(const lef_poset* poset, int check_euler,
                              char** report_json_out);
/* Vertex pairs contained in exactly two faces: [[1,2], ...] */
lef_status lef_poset_edges(const lef_poset* poset, char** edges_json_out);
lef_status lef_poset_face_polynomial(const lef_poset* poset, char** poly_json_out);

/* ---- graded algebras ----------------------------------------------- */

lef_status lef_algebra_from_poset(const lef_poset* poset, lef_algebra** out);
/* {"n_vars": N, "terms": [{"exps": {"1": 1, "2": 1}, "coef": "1"}, ...]};
 * the polynomial must be homogeneous and nonzero. */
lef_status lef_algebra_from_polynomial_json(const char* poly_json, lef_algebra** out);
/* The reduced three-variable octahedron model with dual generator x1 x2 x3. */
lef_status lef_algebra_octahedron_reduced(lef_algebra** out);
void lef_algebra_free(lef_algebra* algebra);

lef_status lef_algebra_socle_degree(const lef_algebra* algebra, int* out);
/* [h_0, ..., h_s] */
lef_status lef_algebra_hilbert(lef_algebra* algebra, char** json_out);
/* Monomials as sorted variable lists with repetition: [[1,3],[2,4],...] */
lef_status lef_algebra_basis(lef_algebra* algebra, int degree, char** json_out);
/* Installs an explicit basis (verified for independence and size). */
lef_status lef_algebra_set_basis(lef_algebra* algebra, int degree,
                                 const char* basis_json);
/* is_member receives 1 iff the operator polynomial annihilates F. */
lef_status lef_algebra_annihilator_membership(lef_algebra* algebra,
                                              const char* op_poly_json,
                                              int* is_member);
/* {"candidates": [...], "vectors": [["0","1",...], ...]} */
lef_status lef_algebra_annihilator_kernel(lef_algebra* algebra, int degree,
                                          char** json_out);
lef_status lef_algebra_verify_octahedron_reduction(lef_algebra* algebra, int* ok);

/* ---- Hessians ------------------------------------------------------ */

/* point_json: array of rationals of length n_vars. */
lef_status lef_hessian_at(lef_algebra* algebra, int degree,
                          const char* point_json, lef_matrix** out);
/* Entries as polynomial JSON; only available while entry degree s-2k <= 3. */
lef_status lef_hessian_symbolic(lef_algebra* algebra, int degree, char** json_out);
/* Rows over Lambda_{k-1}, columns over Lambda_k; its null space is the
 * degree-k primitive subspace at the point. */
lef_status lef_mixed_hessian_at(lef_algebra* algebra, int degree,
                                const char* point_json, lef_matrix** out);

/* ---- exact matrices ------------------------------------------------ */

/* Array of arrays of rational strings: [["0","2"],["2","0"]] */
lef_status lef_matrix_from_json(const char* json_text, lef_matrix** out);
void lef_matrix_free(lef_matrix* matrix);
lef_status lef_matrix_to_json(const lef_matrix* matrix, char** json_out);
lef_status lef_matrix_dims(const lef_matrix* matrix, int* rows, int* cols);
lef_status lef_matrix_det(const lef_matrix* matrix, char** rational_out);
lef_status lef_matrix_rank(const lef_matrix* matrix, int* rank_out);
/* {"coefficients": ["c0", ..., "cn"]} ascending; monic. */
lef_status lef_matrix_charpoly(const lef_matrix* matrix, char** json_out);
/* Exact inertia of a symmetric matrix (congruence reduction, cross-checked
 * against Sturm root counting for dimension <= 64). */
lef_status lef_matrix_signature(const lef_matrix* matrix, int* n_plus,
                                int* n_minus, int* n_zero);

/* ---- certification -------------------------------------------------- */

/* {"form": [...], "socle_degree": s,
 *  "degrees": [{"k": 0, "det": "6", "nonzero": true}, ...],
 *  "verdict": true} */
lef_status lef_slp_certify(lef_algebra* algebra, const char* point_json,
                           char** cert_json_out);
/* Requires F(a) > 0. {"form": ..., "degree": 1, "method": "full-space",
 *  "kernel_dim": d, "signature": {...}, "verdict": bool} */
lef_status lef_hrr_degree1(lef_algebra* algebra, const char* point_json,
                           char** cert_json_out);
/* Requires F(a) != 0 and 0 <= degree <= s/2. */
lef_status lef_hrr_at_degree(lef_algebra* algebra, const char* point_json,
                             int degree, char** cert_json_out);

/* strategy: "exhaustive-01" | "random-rational".
 * candidates_json (optional, may be NULL): array of forms searched in order
 * instead of the strategy's enumeration.
 * {"found": bool, "form": [...], "tried": n, "strategy": "...", "seed": n,
 *  "budget": n, "certificate": {...}} */
lef_status lef_find_lefschetz_element(lef_algebra* algebra, const char* strategy,
                                      uint64_t seed, int budget,
                                      const char* candidates_json,
                                      char** result_json_out);

/* ---- reports -------------------------------------------------------- */

/* solid: builtin name, or NULL with poset_json given. fixtures_dir: NULL for
 * the LEF_FIXTURES_DIR environment variable / compiled default. all_passed
 * receives 1 when every expectation check passed (or none were present). */
lef_status lef_report(const char* solid, const char* poset_json,
                      const char* fixtures_dir, uint64_t seed,
                      char** markdown_out, char** doc_json_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* LEFSCHETZ_H */
