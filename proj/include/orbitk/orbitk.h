/* orbitk: exact-arithmetic invariants of dg orbit categories.
 *
 * C API of the shared library. All functions return a status code; on
 * failure, orbitk_last_error_message() / orbitk_last_error_code() describe
 * what went wrong (per thread). Objects returned through out-parameters are
 * owned by the caller and released with the matching _free function; strings
 * with orbitk_string_free. Handles are immutable after creation and safe to
 * share across threads.
 */
#ifndef ORBITK_H
#define ORBITK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orbitk_status {
  ORBITK_OK = 0,
  ORBITK_ERROR_ARGUMENT = 1,   /* null/invalid pointers or indices */
  ORBITK_ERROR_PARSE = 2,      /* malformed input text */
  ORBITK_ERROR_VALIDATION = 3, /* precondition violated (cyclic quiver, ...) */
  ORBITK_ERROR_INTERNAL = 4    /* broken internal invariant; never expected */
} orbitk_status;

typedef struct orbitk_matrix orbitk_matrix;
typedef struct orbitk_group orbitk_group;
typedef struct orbitk_quiver orbitk_quiver;
typedef struct orbitk_result orbitk_result;

const char* orbitk_version(void);
const char* orbitk_last_error_message(void);
const char* orbitk_last_error_code(void);
void orbitk_string_free(char* s);

/* ---- exact integer matrices (entries as decimal strings) ---- */

orbitk_status orbitk_matrix_new(size_t rows, size_t cols,
                                const char* const* entries_row_major,
                                orbitk_matrix** out);
/* JSON array-of-arrays; entries are decimal strings or integers. */
orbitk_status orbitk_matrix_parse(const char* json, orbitk_matrix** out);
orbitk_status orbitk_matrix_dims(const orbitk_matrix* m, size_t* rows,
                                 size_t* cols);
orbitk_status orbitk_matrix_entry(const orbitk_matrix* m, size_t row, size_t col,
                                  char** out);
orbitk_status orbitk_matrix_to_json(const orbitk_matrix* m, char** out);
orbitk_status orbitk_matrix_mul(const orbitk_matrix* a, const orbitk_matrix* b,
                                orbitk_matrix** out);
orbitk_status orbitk_matrix_transpose(const orbitk_matrix* m, orbitk_matrix** out);
orbitk_status orbitk_matrix_equal(const orbitk_matrix* a, const orbitk_matrix* b,
                                  int* out);
orbitk_status orbitk_matrix_det(const orbitk_matrix* m, char** out);
void orbitk_matrix_free(orbitk_matrix* m);

/* Smith normal form U*A*V = D (D diagonal, nonnegative, divisibility chain,
 * zeros trailing; U, V unimodular). */
orbitk_status orbitk_snf(const orbitk_matrix* a, orbitk_matrix** u,
                         orbitk_matrix** d, orbitk_matrix** v);
orbitk_status orbitk_matrix_rank(const orbitk_matrix* a, size_t* out);
orbitk_status orbitk_kernel_basis(const orbitk_matrix* a, orbitk_matrix** out);
orbitk_status orbitk_cokernel(const orbitk_matrix* a, orbitk_group** out);

/* ---- finitely generated abelian groups in canonical form ---- */

/* Accepts the canonical grammar: "0", "Z^r", "Z/d1 (+) Z/d2 ...", plus "Z". */
orbitk_status orbitk_group_parse(const char* text, orbitk_group** out);
orbitk_status orbitk_group_render(const orbitk_group* g, char** out);
orbitk_status orbitk_group_rank(const orbitk_group* g, size_t* out);
orbitk_status orbitk_group_torsion_count(const orbitk_group* g, size_t* out);
orbitk_status orbitk_group_torsion_factor(const orbitk_group* g, size_t index,
                                          char** out);
orbitk_status orbitk_group_direct_sum(const orbitk_group* a,
                                      const orbitk_group* b, orbitk_group** out);
orbitk_status orbitk_group_equal(const orbitk_group* a, const orbitk_group* b,
                                 int* out);
void orbitk_group_free(orbitk_group* g);

/* ---- quivers ---- */

/* Presets: "A<s>", "D<s>" (s >= 4), "E6", "E7", "E8", "kronecker<m>". */
orbitk_status orbitk_quiver_preset(const char* name, orbitk_quiver** out);
/* {"vertices": ["1","2"], "arrows": [["1","2"], ...]}; oriented cycles are
 * rejected. */
orbitk_status orbitk_quiver_parse(const char* json, orbitk_quiver** out);
orbitk_status orbitk_quiver_vertex_count(const orbitk_quiver* q, size_t* out);
orbitk_status orbitk_quiver_cartan(const orbitk_quiver* q, orbitk_matrix** out);
orbitk_status orbitk_quiver_coxeter(const orbitk_quiver* q, orbitk_matrix** out);
orbitk_status orbitk_quiver_euler_form(const orbitk_quiver* q,
                                       orbitk_matrix** out);
void orbitk_quiver_free(orbitk_quiver* q);

/* ---- whole computations; results carry text, JSON and warnings ----
 *
 * The result JSON is deterministic: identical inputs give byte-identical
 * output. Warnings are structured (code + message); the documented codes are
 *   cluster-n0-caveat        n = 0 on a quiver that is not Dynkin A/D/E
 *   picard-odd-discrepancy   odd-twist curve group differs from the
 *                            displayed product formula
 *   regularity-hypothesis    degree-zero identifications assume KH = K
 */

orbitk_status orbitk_kleinian(unsigned long s, orbitk_result** out);
orbitk_status orbitk_cluster_k0(const orbitk_quiver* q, long n,
                                orbitk_result** out);
/* ek_spec_json: InvariantSpec of E(k); see the README for the schema. */
orbitk_status orbitk_cluster_triangle(const orbitk_quiver* q, long n,
                                      const char* ek_spec_json,
                                      orbitk_result** out);
orbitk_status orbitk_orbit_triangle(const char* spec_json, orbitk_result** out);
orbitk_status orbitk_suspension_orbit(const char* spec_json, long n,
                                      orbitk_result** out);
/* f_even/f_odd: square rational matrices (JSON arrays of rows). */
orbitk_status orbitk_hp_sixterm(const char* f_even_json, const char* f_odd_json,
                                orbitk_result** out);
orbitk_status orbitk_hp_line_bundle(const char* model_json, long n,
                                    orbitk_result** out);
orbitk_status orbitk_spherical_hp(const char* model_json, orbitk_result** out);
orbitk_status orbitk_spherical_k0(const char* chi_csv, const char* e_csv,
                                  orbitk_result** out);
/* pic_text: canonical group grammar; l_csv: coordinates on the Pic
 * generators. */
orbitk_status orbitk_curve_kh0(const char* pic_text, const char* l_csv, long n,
                               orbitk_result** out);
/* checks: comma-separated subset of
 * "validate,orbit,orbit-z,epsilon,comparison,h0" or "all".
 * functor_json may be NULL for the identity functor. */
orbitk_status orbitk_dg_orbit(const char* category_json, const char* functor_json,
                              long weight_bound, long stage_bound,
                              const char* checks, orbitk_result** out);
/* name: "point" | "p1" | "genus-curve" | "k3"; g is the genus (genus-curve
 * only), ld the line bundle degree as a decimal string (NULL = "1"). */
orbitk_status orbitk_model_preset(const char* name, unsigned long g,
                                  const char* ld, char** model_json_out);

orbitk_status orbitk_result_text(const orbitk_result* r, char** out);
orbitk_status orbitk_result_json(const orbitk_result* r, char** out);
orbitk_status orbitk_result_warning_count(const orbitk_result* r, size_t* out);
orbitk_status orbitk_result_warning(const orbitk_result* r, size_t index,
                                    char** code, char** message);
void orbitk_result_free(orbitk_result* r);

#ifdef __cplusplus
}
#endif

#endif /* ORBITK_H */
