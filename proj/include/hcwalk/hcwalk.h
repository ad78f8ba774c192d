/*
 * Copyright 2026 The hcwalk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to hcwalk: classical and coined quantum walks on perturbed
 * hypercubes, simulated on the reduced grid graph.
 *
 * All functions returning hcw_status leave a thread-local message readable
 * through hcw_last_error() when they fail. Handles are opaque; each *_create
 * has a matching *_destroy, and destroying NULL is a no-op. Handles are
 * immutable after creation and may be shared between threads.
 */

#ifndef HCWALK_H
#define HCWALK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HCWALK_BUILDING)
#    define HCWALK_API __declspec(dllexport)
#  else
#    define HCWALK_API __declspec(dllimport)
#  endif
#else
#  define HCWALK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcw_status {
  HCW_OK = 0,
  HCW_ERR_PARAMETER = 1,  /* a bound on d, q or a threshold was violated */
  HCW_ERR_CAPACITY = 2,   /* above the oracle or dense-eigen size bound */
  HCW_ERR_STRUCTURAL = 3, /* singular system, inconsistent graph */
  HCW_ERR_NUMERIC = 4,
  HCW_ERR_IO = 5,
  HCW_ERR_BUFFER = 6,     /* caller buffer too small; see required length */
  HCW_ERR_INTERNAL = 7
} hcw_status;

typedef enum hcw_scenario {
  HCW_BARE = 0,
  HCW_TAIL = 1,
  HCW_EMBEDDED = 2,
  HCW_REMOVED_EDGE = 3
} hcw_scenario;

typedef enum hcw_direction {
  HCW_DIR_R = 0,
  HCW_DIR_L = 1,
  HCW_DIR_U = 2,
  HCW_DIR_D = 3,
  HCW_DIR_F = 4,
  HCW_DIR_B = 5,
  HCW_DIR_TAIL_UP = 6,
  HCW_DIR_TAIL_DOWN = 7
} hcw_direction;

typedef enum hcw_rule_kind { HCW_RULE_EPSILON = 0, HCW_RULE_DARK_WINDOW = 1 } hcw_rule_kind;

typedef enum hcw_mode { HCW_MODE_CLASSICAL = 0, HCW_MODE_QUANTUM = 1, HCW_MODE_BOTH = 2 } hcw_mode;

typedef enum hcw_fit_model { HCW_FIT_POWER = 0, HCW_FIT_EXP = 1 } hcw_fit_model;

typedef struct hcw_grid hcw_grid;
typedef struct hcw_walk hcw_walk;
typedef struct hcw_series hcw_series;

HCWALK_API const char* hcw_version(void);
HCWALK_API const char* hcw_status_string(hcw_status status);
HCWALK_API const char* hcw_last_error(void);

/* "bare", "tail", "embedded", "removed-edge" */
HCWALK_API hcw_status hcw_scenario_parse(const char* name, hcw_scenario* out);
HCWALK_API const char* hcw_scenario_name(hcw_scenario scenario);

/* ---- reduced grid ------------------------------------------------------ */

typedef struct hcw_grid_info {
  size_t vertex_count;
  size_t basis_size;
  int start;
  int final_vertex;
  int tail_vertex; /* -1 if absent */
  int x_extent;
  int y_extent;
  int z_extent;
} hcw_grid_info;

typedef struct hcw_vertex_info {
  int x;
  int y;
  int z;
  int is_tail;
  int degree;
  int dir_counts[8]; /* indexed by hcw_direction */
} hcw_vertex_info;

/* For HCW_BARE, q is ignored. */
HCWALK_API hcw_status hcw_grid_create(hcw_scenario scenario, int d, int q, hcw_grid** out);
HCWALK_API void hcw_grid_destroy(hcw_grid* grid);
HCWALK_API hcw_status hcw_grid_get_info(const hcw_grid* grid, hcw_grid_info* out);
HCWALK_API hcw_status hcw_grid_get_vertex(const hcw_grid* grid, int id, hcw_vertex_info* out);
/* Decimal multiplicity of a vertex. On HCW_ERR_BUFFER, *required holds the
 * needed length including the terminator. required may be NULL. */
HCWALK_API hcw_status hcw_grid_multiplicity(const hcw_grid* grid, int id, char* buf,
                                            size_t len, size_t* required);
/* N_v(J); 0 for unknown vertices or directions leaving the grid. */
HCWALK_API int hcw_direction_count(const hcw_grid* grid, int v, hcw_direction j);

/* ---- classical walk ---------------------------------------------------- */

/* Exact hitting times as "p/q" (or "p") strings plus a double. buf may be
 * NULL when only the double is wanted. */
HCWALK_API hcw_status hcw_classical_closed_form(hcw_scenario scenario, int d, int q, char* buf,
                                                size_t len, double* value);
HCWALK_API hcw_status hcw_classical_fundamental(const hcw_grid* grid, char* buf, size_t len,
                                                double* value);

/* ---- quantum walk ------------------------------------------------------ */

typedef struct hcw_stop_rule {
  hcw_rule_kind kind;
  double epsilon;   /* HCW_RULE_EPSILON */
  double delta;     /* HCW_RULE_DARK_WINDOW */
  double t_window;  /* HCW_RULE_DARK_WINDOW, window = t_window * d steps */
  uint64_t max_steps;
} hcw_stop_rule;

/* epsilon = 1e-4, delta = 1e-6, t_window = 1e6, max_steps = 1e8 */
HCWALK_API void hcw_stop_rule_default(hcw_stop_rule* rule);

typedef struct hcw_summary {
  double tau;
  double tau_c;
  int tau_c_defined; /* 0 when p_tot = 0 */
  double p_tot;
  uint64_t steps;
  int converged;
  hcw_rule_kind mode;
  double threshold;
  double t_window;
} hcw_summary;

HCWALK_API hcw_status hcw_walk_create(const hcw_grid* grid, hcw_walk** out);
HCWALK_API void hcw_walk_destroy(hcw_walk* walk);
HCWALK_API size_t hcw_walk_dimension(const hcw_walk* walk);
/* out = U in, complex vectors as interleaved (re, im) doubles. */
HCWALK_API hcw_status hcw_walk_apply(const hcw_walk* walk, const double* in, double* out);
/* Initial state into out (interleaved, 2 * dimension doubles). */
HCWALK_API hcw_status hcw_walk_initial_state(const hcw_walk* walk, double* out);
HCWALK_API hcw_status hcw_walk_run(const hcw_walk* walk, const hcw_stop_rule* rule,
                                   int record_series, hcw_series** out);
/* The same walk on the explicit graph, d <= 12. */
HCWALK_API hcw_status hcw_full_space_run(hcw_scenario scenario, int d, int q,
                                         const hcw_stop_rule* rule, int record_series,
                                         hcw_series** out);
HCWALK_API void hcw_series_destroy(hcw_series* series);
/* p(t) for t = 0..steps, empty when not recorded. */
HCWALK_API size_t hcw_series_length(const hcw_series* series);
HCWALK_API const double* hcw_series_data(const hcw_series* series);
HCWALK_API hcw_status hcw_series_summary(const hcw_series* series, hcw_summary* out);

/* 1 - p_tot from the eigenvectors of U; basis size limited to 5000. */
HCWALK_API hcw_status hcw_dark_overlap(const hcw_walk* walk, double* overlap, int* dimension);

/* ---- fitting ----------------------------------------------------------- */

typedef struct hcw_fit_result {
  hcw_fit_model model;
  double coefficient;
  double exponent; /* power n, or exponential rate */
  double residual; /* RMS in log space */
  int points;
} hcw_fit_result;

HCWALK_API hcw_status hcw_fit(hcw_fit_model model, const double* x, const double* y, size_t n,
                              hcw_fit_result* out);
HCWALK_API hcw_status hcw_fit_csv(const char* path, const char* x_col, const char* y_col,
                                  hcw_fit_model model, hcw_fit_result* out);

/* ---- sweeps ------------------------------------------------------------ */

typedef struct hcw_run_request {
  hcw_scenario scenario;
  int d_min;
  int d_max;
  /* "a:b" or "a", each end an integer or d-relative ("d", "d-1", "d/2+1").
   * NULL selects every valid q. */
  const char* q_range;
  hcw_mode mode;
  hcw_stop_rule rule;
  int oracle;
  int jobs;
} hcw_run_request;

typedef void (*hcw_log_fn)(const char* message, void* user);

/* Writes the CSV to out_path, or stdout when out_path is NULL or "-".
 * all_converged and rows may be NULL. */
HCWALK_API hcw_status hcw_run_experiment(const hcw_run_request* request, const char* out_path,
                                         hcw_log_fn log, void* user, int* all_converged,
                                         size_t* rows);

#ifdef __cplusplus
}
#endif

#endif /* HCWALK_H */
