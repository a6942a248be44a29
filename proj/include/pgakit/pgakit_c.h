/* C ABI for the pgakit euclidean PGA kernel.
 *
 * Everything is exposed through opaque handles and status codes so the
 * library can be consumed over dlopen or any FFI. Multivector handles carry
 * their algebra: dim 2 selects Cl*(2,0,1) (8 blades), dim 3 selects
 * Cl*(3,0,1) (16 blades). Blades are named "1", "e0", ..., "e0123".
 *
 * Every function that can fail returns a pga_status; on failure
 * pga_last_error() describes the problem for the calling thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with pga_string_free().
 */

#ifndef PGAKIT_C_H
#define PGAKIT_C_H

#include <stdint.h>

#if defined(_WIN32)
#define PGAKIT_API __declspec(dllexport)
#else
#define PGAKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pga_status {
  PGA_OK = 0,
  PGA_ERR_USAGE = 1,   /* bad arguments or contract violation */
  PGA_ERR_DOMAIN = 2,  /* domain error: zero normalize, log branch, ... */
  PGA_ERR_VERIFY = 3,  /* a verification suite reported failures */
  PGA_ERR_PARSE = 4,   /* malformed expression or JSON input */
  PGA_ERR_INTERNAL = 5
} pga_status;

typedef struct pga_mv pga_mv;

PGAKIT_API const char* pga_version(void);
PGAKIT_API const char* pga_last_error(void);
PGAKIT_API void pga_string_free(char* s);

/* --- multivector values -------------------------------------------------- */

PGAKIT_API pga_status pga_mv_zero(int dim, pga_mv** out);
PGAKIT_API pga_status pga_mv_scalar(int dim, double value, pga_mv** out);
PGAKIT_API pga_status pga_mv_clone(const pga_mv* mv, pga_mv** out);
PGAKIT_API void pga_mv_free(pga_mv* mv);

PGAKIT_API pga_status pga_mv_set(pga_mv* mv, const char* blade, double coeff);
PGAKIT_API pga_status pga_mv_get(const pga_mv* mv, const char* blade,
                                 double* out_coeff);
PGAKIT_API pga_status pga_mv_dim(const pga_mv* mv, int* out_dim);

/* JSON array of [blade, coefficient] pairs; see pga_mv_to_json for output. */
PGAKIT_API pga_status pga_mv_from_json(int dim, const char* json, pga_mv** out);
PGAKIT_API pga_status pga_mv_to_json(const pga_mv* mv, char** out_json);

/* --- products and operations --------------------------------------------- */

PGAKIT_API pga_status pga_mv_add(const pga_mv* a, const pga_mv* b, pga_mv** out);
PGAKIT_API pga_status pga_mv_sub(const pga_mv* a, const pga_mv* b, pga_mv** out);
PGAKIT_API pga_status pga_mv_scale(const pga_mv* a, double s, pga_mv** out);
PGAKIT_API pga_status pga_mv_gp(const pga_mv* a, const pga_mv* b, pga_mv** out);
PGAKIT_API pga_status pga_mv_outer(const pga_mv* a, const pga_mv* b, pga_mv** out);
PGAKIT_API pga_status pga_mv_inner(const pga_mv* a, const pga_mv* b, pga_mv** out);
PGAKIT_API pga_status pga_mv_join(const pga_mv* a, const pga_mv* b, pga_mv** out);
PGAKIT_API pga_status pga_mv_commutator(const pga_mv* a, const pga_mv* b,
                                        pga_mv** out);
PGAKIT_API pga_status pga_mv_sandwich(const pga_mv* versor, const pga_mv* x,
                                      pga_mv** out);
PGAKIT_API pga_status pga_mv_reverse(const pga_mv* a, pga_mv** out);
PGAKIT_API pga_status pga_mv_dual(const pga_mv* a, pga_mv** out);
PGAKIT_API pga_status pga_mv_undual(const pga_mv* a, pga_mv** out);
PGAKIT_API pga_status pga_mv_grade_part(const pga_mv* a, int grade, pga_mv** out);
PGAKIT_API pga_status pga_mv_exp_series(const pga_mv* a, int terms, pga_mv** out);

PGAKIT_API pga_status pga_mv_norm(const pga_mv* a, double* out);
PGAKIT_API pga_status pga_mv_ideal_norm(const pga_mv* a, double* out);

/* --- typed constructors (thin wrappers over the conventions) ------------- */

PGAKIT_API pga_status pga_point2(double x, double y, pga_mv** out);
PGAKIT_API pga_status pga_line2(double a, double b, double c, pga_mv** out);
PGAKIT_API pga_status pga_direction2(double x, double y, pga_mv** out);
PGAKIT_API pga_status pga_point3(double x, double y, double z, pga_mv** out);
PGAKIT_API pga_status pga_plane3(double a, double b, double c, double d,
                                 pga_mv** out);
PGAKIT_API pga_status pga_direction3(double x, double y, double z, pga_mv** out);

/* --- motors (3D) ----------------------------------------------------------- */

/* Closed-form exponential of a bivector. */
PGAKIT_API pga_status pga_motor_exp(const pga_mv* bivector, pga_mv** out);
/* Principal-branch logarithm of a normalized motor. */
PGAKIT_API pga_status pga_motor_log(const pga_mv* motor, pga_mv** out);
PGAKIT_API pga_status pga_motor_normalize(const pga_mv* motor, pga_mv** out);
/* exp((angle/2)(axis + pitch * polar(axis))) for a unit euclidean axis. */
PGAKIT_API pga_status pga_motor_from_screw(const pga_mv* axis, double angle,
                                           double pitch, pga_mv** out);
/* reverse(m) x m: the motor action used by all typed apply operations. */
PGAKIT_API pga_status pga_motor_apply(const pga_mv* motor, const pga_mv* x,
                                      pga_mv** out);
/* Components (1, i, j, k, eps, eps i, eps j, eps k). */
PGAKIT_API pga_status pga_motor_to_dual_quaternion(const pga_mv* motor,
                                                   double out_q[8]);
PGAKIT_API pga_status pga_motor_from_dual_quaternion(const double q[8],
                                                     pga_mv** out);

/* --- verification and demo commands (the CLI is a shell over these) ------ */

/* Full basis product table as text; dim 2 includes the named-basis legend. */
PGAKIT_API pga_status pga_cayley_table(int dim, char** out_text);

/* Runs every construction-table row against the analytic oracle.
 * Returns PGA_ERR_VERIFY (with the JSON report still filled in) when any
 * row fails; *out_all_pass mirrors that. */
PGAKIT_API pga_status pga_check_formulas(int dim, int trials, uint64_t seed,
                                         char** out_json, int* out_all_pass);

/* Kaleidoscope with mirrors at dihedral angle pi/k: orbit size and the
 * closure error of (ab)^k, as a JSON report. */
PGAKIT_API pga_status pga_orbit_run(int k, char** out_json, int* out_closed);

/* Screw-motion sampling: transported point path as CSV (format 0) or JSON
 * (format 1). axis_json: {"point":[x,y,z],"dir":[x,y,z],("track":[x,y,z])}. */
PGAKIT_API pga_status pga_screw_run(const char* axis_json, double angle,
                                    double pitch, int samples, int format,
                                    char** out_text);

/* Free rigid-body integration. body_json: {"particles":[[m,x,y,z],...]};
 * omega_json: [w01,w02,w03,w23,w31,w12]. Trajectory as CSV (format 0) or
 * JSON (format 1), plus a JSON conservation summary. */
PGAKIT_API pga_status pga_top_run(const char* body_json, const char* omega_json,
                                  double dt, long steps, int format,
                                  char** out_trajectory, char** out_summary_json);

/* Value and derivative/gradient of an expression at a point.
 * point_json: {"x": 1.5, ...}. */
PGAKIT_API pga_status pga_diff_eval(const char* expression, const char* point_json,
                                    char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PGAKIT_C_H */
