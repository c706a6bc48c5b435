/*
 * Copyright 2026 sumkern developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C API of libsumkern: numerical machinery for extending integer-indexed
 * multiplier sequences to the line through summability kernels.
 *
 * Objects are opaque handles created by the parse functions below from
 * JSON-shaped spec text. Every call returns an sk_status; on failure the
 * thread-local message from sk_last_error() explains what was rejected.
 * Strings returned through char** are heap-allocated; release them with
 * sk_string_free. Reports and certificates are JSON text; sampled grid data
 * is CSV with a "# tail_bound=..." header line.
 */

#ifndef SUMKERN_H
#define SUMKERN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SK_API __declspec(dllexport)
#else
#define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
  SK_OK = 0,
  SK_ERROR_PARSE = 1,        /* malformed input text or schema violation */
  SK_ERROR_PRECONDITION = 2, /* operation rejected its input */
  SK_ERROR_DOMAIN = 3,       /* parameter outside the operation's domain */
  SK_ERROR_INTERNAL = 4
} sk_status;

/* Sampling window [-L, L] with step, integer-sum truncation and tolerance. */
typedef struct sk_grid {
  double window_halfwidth;
  double step;
  int lattice_truncation;
  double tolerance;
} sk_grid;

SK_API sk_grid sk_grid_default(void);

typedef struct sk_function sk_function;           /* symbolic function on R */
typedef struct sk_sequence sk_sequence;           /* complex sequence on Z */
typedef struct sk_torus_measure sk_torus_measure; /* measure on [0,1) */
typedef struct sk_line_measure sk_line_measure;   /* measure on R */
typedef struct sk_grid_function sk_grid_function; /* sampled function */

SK_API const char* sk_version(void);
SK_API const char* sk_last_error(void);
SK_API void sk_string_free(char* s);

/* ---- construction and serialization ---- */

SK_API sk_status sk_function_parse(const char* json, sk_function** out);
SK_API sk_status sk_sequence_parse(const char* json, sk_sequence** out);
SK_API sk_status sk_torus_measure_parse(const char* json, sk_torus_measure** out);

SK_API sk_status sk_function_serialize(const sk_function* f, char** json);
SK_API sk_status sk_sequence_serialize(const sk_sequence* s, char** json);
SK_API sk_status sk_torus_measure_serialize(const sk_torus_measure* m, char** json);
SK_API sk_status sk_line_measure_serialize(const sk_line_measure* m, char** json);
SK_API sk_status sk_grid_function_csv(const sk_grid_function* g, char** csv);

SK_API void sk_function_free(sk_function* f);
SK_API void sk_sequence_free(sk_sequence* s);
SK_API void sk_torus_measure_free(sk_torus_measure* m);
SK_API void sk_line_measure_free(sk_line_measure* m);
SK_API void sk_grid_function_free(sk_grid_function* g);

/* ---- function core ---- */

SK_API sk_status sk_eval_function(const sk_function* f, double x, double* re,
                                  double* im);
SK_API sk_status sk_fourier_transform(const sk_function* f, const sk_grid* grid,
                                      sk_grid_function** out);
/* {"delta":..., "tail":...} */
SK_API sk_status sk_periodization_sup(const sk_function* f, const sk_grid* grid,
                                      char** report_json);
SK_API sk_status sk_periodize(const sk_function* f, const sk_grid* grid,
                              sk_grid_function** out);
SK_API sk_status sk_extend(const sk_sequence* phi, const sk_function* lambda,
                           const sk_grid* grid, sk_grid_function** out);
SK_API sk_status sk_fejer_regularize(const sk_sequence* phi, long long n,
                                     sk_sequence** out);
/* {"constant_estimate":..., "max_deviation":..., "tail_bound":...} */
SK_API sk_status sk_poisson_constant(const sk_function* s, const sk_grid* grid,
                                     char** report_json);

/* ---- multiplier norms and membership ---- */

SK_API sk_status sk_m2_norm(const sk_function* f, const sk_grid* grid,
                            char** certificate_json);
SK_API sk_status sk_m1_norm(const sk_line_measure* mu, const sk_grid* grid,
                            char** certificate_json);
SK_API sk_status sk_mp_norm_lower_bound(const sk_function* f, double p,
                                        const sk_grid* grid, uint64_t seed,
                                        char** certificate_json);
SK_API sk_status sk_classify_s2(const sk_function* f, const sk_grid* grid,
                                char** report_json);
SK_API sk_status sk_classify_s1(const sk_function* f, const sk_grid* grid,
                                char** report_json);
SK_API sk_status sk_fiber_norms(const sk_function* f, double p, const sk_grid* grid,
                                uint64_t seed, char** report_json);
SK_API sk_status sk_block_sum_criterion(const sk_function* f, double p,
                                        const sk_grid* grid, int blocks,
                                        uint64_t seed, char** report_json);
SK_API sk_status sk_product_kernel(const sk_function* f1, const sk_function* f2,
                                   double p, const sk_grid* grid, uint64_t seed,
                                   char** report_json, sk_function** product_out);

/* ---- measure transfer ---- */

/* On SK_ERROR_PRECONDITION the membership report explaining the rejection is
 * placed in *rejection_json (when non-NULL). */
SK_API sk_status sk_transfer(const sk_torus_measure* nu, const sk_function* lambda,
                             const sk_grid* grid, sk_line_measure** out,
                             char** rejection_json);
/* Samples of the transferred transform W_{hat nu, Lambda} on the window. */
SK_API sk_status sk_transfer_muhat(const sk_torus_measure* nu,
                                   const sk_function* lambda, const sk_grid* grid,
                                   sk_grid_function** out);

/* Symmetric-average atom detection on the series W_{hat nu, Lambda}.
 * probes may be NULL with n_probes 0: then the probe set is the union of the
 * closed-form transfer atoms and 20 seeded pseudo-random off-atom points.
 * lambdas must be increasing; step is the sample spacing (1/step integral);
 * eps is the convergence tolerance between successive lambdas.
 * Report: {"atoms":[{"y":...,"estimate":[re,im],"converged":...,...}], ...} */
SK_API sk_status sk_wiener_atoms_series(const sk_torus_measure* nu,
                                        const sk_function* lambda,
                                        const sk_grid* grid, const double* probes,
                                        size_t n_probes, const double* lambdas,
                                        size_t n_lambdas, double step, double eps,
                                        uint64_t seed, char** report_json);
/* Same average for hat mu given directly as a symbolic function. */
SK_API sk_status sk_wiener_atom_function(const sk_function* muhat, double y,
                                         const double* lambdas, size_t n_lambdas,
                                         double step, double eps,
                                         char** report_json);
SK_API sk_status sk_wiener_energy_series(const sk_torus_measure* nu,
                                         const sk_function* lambda,
                                         const sk_grid* grid, const double* lambdas,
                                         size_t n_lambdas, double step, double eps,
                                         char** report_json);
SK_API sk_status sk_wiener_energy_function(const sk_function* muhat,
                                           const double* lambdas, size_t n_lambdas,
                                           double step, double eps,
                                           char** report_json);
SK_API sk_status sk_radial_majorant_check(const sk_function* lambda,
                                          const sk_function* majorant,
                                          const sk_grid* grid, char** report_json);

/* ---- sequence extension ---- */

SK_API sk_status sk_jodeit_piecewise(const sk_sequence* phi, int order,
                                     const sk_grid* grid, sk_grid_function** out);
SK_API sk_status sk_jodeit_bound(const sk_sequence* phi, const sk_function* s,
                                 const sk_grid* grid, char** result_json,
                                 sk_grid_function** w_out);
/* p as an exact rational "a/b" or "a". */
SK_API sk_status sk_q_range(const char* p_rational, char** json);
SK_API sk_status sk_lp_extend(const sk_sequence* phi, const sk_function* s,
                              const char* p_rational, const double* r_schedule,
                              size_t n_r, const sk_grid* grid, char** result_json,
                              sk_grid_function** w_out);
SK_API sk_status sk_convolve_sequences(const sk_sequence* a, const sk_sequence* b,
                                       const char* r_rational, sk_sequence** c_out,
                                       char** report_json);
SK_API sk_status sk_support_normalize(const sk_function* s, int big_n,
                                      sk_function** out);
SK_API sk_status sk_rescale(const sk_function* f, long long alpha,
                            sk_function** out);
SK_API sk_status sk_compact_support_lp(const sk_sequence* phi, const sk_function* s,
                                       const char* p_rational, const sk_grid* grid,
                                       char** result_json, sk_grid_function** w_out);

#ifdef __cplusplus
}
#endif

#endif /* SUMKERN_H */
