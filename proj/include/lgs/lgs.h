// Copyright 2026 The LGS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to liblgs. Every call returns an lgs_status; on failure the
// message is available from lgs_last_error() on the same thread until the
// next call. Strings handed out through `char **` parameters are owned by
// the caller and released with lgs_string_free().

#ifndef LGS_LGS_H_
#define LGS_LGS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LGS_BUILDING_LIBRARY)
#define LGS_API __declspec(dllexport)
#else
#define LGS_API __declspec(dllimport)
#endif
#else
#define LGS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lgs_status {
  LGS_OK = 0,
  LGS_ERR_INVALID_ARGUMENT = 1,
  LGS_ERR_VALIDATION = 2,
  LGS_ERR_PARSE = 3,
  LGS_ERR_MISWIRED = 4,
  LGS_ERR_ZERO_COUPLING = 5,
  LGS_ERR_UNSTABLE = 6,
  LGS_ERR_LIMIT_EXCEEDED = 7,
  LGS_ERR_INTERNAL = 8
} lgs_status;

typedef enum lgs_gate { LGS_GATE_CNOT = 0, LGS_GATE_FREDKIN = 1, LGS_GATE_TOFFOLI = 2 } lgs_gate;
typedef enum lgs_mode { LGS_MODE_IDEAL = 0, LGS_MODE_REAL = 1 } lgs_mode;

// LGS_LEAKAGE_DEFAULT picks reject in ideal mode and discard in real mode.
typedef enum lgs_leakage {
  LGS_LEAKAGE_DEFAULT = -1,
  LGS_LEAKAGE_REJECT = 0,
  LGS_LEAKAGE_DISCARD = 1,
  LGS_LEAKAGE_COALESCE = 2
} lgs_leakage;

typedef enum lgs_metric { LGS_METRIC_FIDELITY = 0, LGS_METRIC_EFFICIENCY = 1 } lgs_metric;
typedef enum lgs_fidelity_convention {
  LGS_FIDELITY_NORMALIZED_OVERLAP = 0,
  LGS_FIDELITY_RAW_OVERLAP = 1
} lgs_fidelity_convention;
typedef enum lgs_efficiency_convention {
  LGS_EFFICIENCY_IDEAL_BRANCH = 0,
  LGS_EFFICIENCY_OUTPUT_NORM = 1
} lgs_efficiency_convention;

typedef enum lgs_estimator { LGS_ESTIMATOR_CARRIER_RATIO = 0, LGS_ESTIMATOR_MODE_OVERLAP = 1 } lgs_estimator;

typedef struct lgs_complex {
  double re;
  double im;
} lgs_complex;

// All rates in units of g.
typedef struct lgs_cavity_params {
  double kappa;
  double gamma;
  double eta_h;
  double eta_v;
  double omega;
} lgs_cavity_params;

typedef struct lgs_coeffs {
  lgs_complex r0;
  lgs_complex rh1;
  lgs_complex rh2;
} lgs_coeffs;

typedef struct lgs_run_options {
  lgs_mode mode;
  lgs_cavity_params cavity;  // used in real mode
  lgs_leakage leakage;
} lgs_run_options;

typedef struct lgs_element_counts {
  size_t pbs;
  size_t pbs_splits;
  size_t pbs_merges;
  size_t hwp0;
  size_t hwp45;
  size_t hwp90;
  size_t mirrors;
  size_t cavities;
  size_t cavity_visits;
} lgs_element_counts;

typedef struct lgs_metric_config {
  lgs_fidelity_convention fidelity;
  lgs_efficiency_convention efficiency;
  const char *initial_state;  // state literal, or NULL for the uniform product state
  double omega;
  double eta;
  lgs_leakage leakage;
  size_t threads;  // 0: LGS_THREADS or hardware concurrency
} lgs_metric_config;

typedef struct lgs_range {
  double lo;
  double hi;
  size_t steps;
} lgs_range;

typedef struct lgs_pulse_config {
  double sigma;  // spectral width of the Gaussian envelope
  double dt;     // 0 selects 0.001 / kappa
  double half_window;
  double tail_decays;
  size_t max_samples;
} lgs_pulse_config;

typedef struct lgs_state lgs_state;
typedef struct lgs_circuit lgs_circuit;
typedef struct lgs_table lgs_table;
typedef struct lgs_sweep lgs_sweep;
typedef struct lgs_pulse lgs_pulse;

// --- errors, strings, defaults ---------------------------------------------

LGS_API const char *lgs_last_error(void);
LGS_API const char *lgs_status_name(lgs_status status);
LGS_API void lgs_string_free(char *s);
LGS_API const char *lgs_version(void);

LGS_API void lgs_cavity_params_default(lgs_cavity_params *out);
LGS_API void lgs_run_options_default(lgs_run_options *out);
LGS_API void lgs_metric_config_default(lgs_metric_config *out);
LGS_API void lgs_pulse_config_default(lgs_pulse_config *out);

// --- states ------------------------------------------------------------------

LGS_API lgs_status lgs_state_parse(const char *literal, lgs_state **out);
// Basis ket on line l0; bit i of atoms_gv_mask puts atom i+1 in g_v.
LGS_API lgs_status lgs_state_basis(size_t atom_count, int polarization_v, uint64_t atoms_gv_mask, lgs_state **out);
LGS_API void lgs_state_free(lgs_state *s);
LGS_API lgs_status lgs_state_format(const lgs_state *s, char **out);
LGS_API lgs_status lgs_state_atom_count(const lgs_state *s, size_t *out);
LGS_API lgs_status lgs_state_term_count(const lgs_state *s, size_t *out);
LGS_API lgs_status lgs_state_norm2(const lgs_state *s, double *out);
LGS_API lgs_status lgs_state_amplitude(const lgs_state *s, int polarization_v, uint16_t line, uint64_t atoms_gv_mask,
                                       lgs_complex *out);
// <a|b>
LGS_API lgs_status lgs_state_inner(const lgs_state *a, const lgs_state *b, lgs_complex *out);

// --- cavity --------------------------------------------------------------------

LGS_API lgs_status lgs_scatter_coeffs(const lgs_cavity_params *p, lgs_coeffs *out);

// --- circuits --------------------------------------------------------------------

LGS_API lgs_status lgs_circuit_build(lgs_gate gate, size_t n, lgs_circuit **out);
LGS_API lgs_status lgs_circuit_parse(const char *text, lgs_circuit **out);
LGS_API void lgs_circuit_free(lgs_circuit *c);
LGS_API lgs_status lgs_circuit_format(const lgs_circuit *c, char **out);
LGS_API lgs_status lgs_circuit_counts(const lgs_circuit *c, lgs_element_counts *out);
LGS_API lgs_status lgs_circuit_atom_count(const lgs_circuit *c, size_t *out);
// Newline-separated cut-point names.
LGS_API lgs_status lgs_circuit_cut_names(const lgs_circuit *c, char **out);
// `cut` may be NULL to run the whole circuit.
LGS_API lgs_status lgs_circuit_run(const lgs_circuit *c, const lgs_state *in, const lgs_run_options *opts,
                                   const char *cut, lgs_state **out);

// --- truth tables ----------------------------------------------------------------

// row_limit 0 selects 2^13.
LGS_API lgs_status lgs_table_build(lgs_gate gate, size_t n, const lgs_run_options *opts, size_t row_limit,
                                   lgs_table **out);
LGS_API void lgs_table_free(lgs_table *t);
LGS_API lgs_status lgs_table_format(const lgs_table *t, char **out);
LGS_API lgs_status lgs_table_row_count(const lgs_table *t, size_t *out);
// *has_phase is 0 when rows disagree on the phase.
LGS_API lgs_status lgs_table_summary(const lgs_table *t, int *bijective, int *matches_target, int *has_phase,
                                     lgs_complex *common_phase);

// --- metrics -----------------------------------------------------------------------

LGS_API lgs_status lgs_evaluate_gate(lgs_gate gate, size_t n, double kappa, double gamma,
                                     const lgs_metric_config *cfg, double *fidelity, double *efficiency);
LGS_API lgs_status lgs_range_parse(const char *text, lgs_range *out);
LGS_API lgs_status lgs_sweep_run(lgs_gate gate, size_t n, lgs_metric metric, const lgs_range *kappa,
                                 const lgs_range *gamma, const lgs_metric_config *cfg, lgs_sweep **out);
LGS_API void lgs_sweep_free(lgs_sweep *s);
LGS_API lgs_status lgs_sweep_row_count(const lgs_sweep *s, size_t *out);
LGS_API lgs_status lgs_sweep_row(const lgs_sweep *s, size_t index, double *kappa, double *gamma, double *value);
LGS_API lgs_status lgs_sweep_csv(const lgs_sweep *s, char **out);
LGS_API lgs_status lgs_sweep_summary_json(const lgs_sweep *s, char **out);

// Report over the published reference points; *all_pass is set when one
// fidelity and one efficiency convention match every point.
LGS_API lgs_status lgs_regression_report(const lgs_metric_config *cfg, lgs_mode mode, double tolerance, char **out,
                                         int *all_pass);

// --- pulse oracle ------------------------------------------------------------------

// atom_gv selects the g_v ground state, polarization_v a V input photon.
LGS_API lgs_status lgs_pulse_run(const lgs_cavity_params *p, int atom_gv, int polarization_v,
                                 const lgs_pulse_config *cfg, lgs_pulse **out);
LGS_API void lgs_pulse_free(lgs_pulse *p);
LGS_API lgs_status lgs_pulse_csv(const lgs_pulse *p, char **out);
// `cold` may be NULL.
LGS_API lgs_status lgs_pulse_summary_json(const lgs_pulse *hot, const lgs_pulse *cold, char **out);
LGS_API lgs_status lgs_pulse_extract(const lgs_cavity_params *p, const lgs_pulse_config *cfg, lgs_estimator est,
                                     lgs_coeffs *out);

#ifdef __cplusplus
}
#endif

#endif  // LGS_LGS_H_
