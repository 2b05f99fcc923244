/*
 * C interface to the rooted min-max cycle cover planner.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an mmcc_status; on
 * failure mmcc_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread). Strings returned through char**
 * out-parameters are heap-allocated and released with mmcc_string_free.
 */
#ifndef MMCC_H
#define MMCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MMCC_BUILDING_LIBRARY)
#    define MMCC_API __declspec(dllexport)
#  else
#    define MMCC_API __declspec(dllimport)
#  endif
#else
#  define MMCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mmcc_status {
  MMCC_OK = 0,
  MMCC_ERR_INVALID_ARGUMENT = 1,
  MMCC_ERR_PARSE = 2,
  MMCC_ERR_VALIDATION = 3,
  MMCC_ERR_DISCONNECTED = 4,
  MMCC_ERR_TOO_LARGE = 5,
  MMCC_ERR_INFEASIBLE = 6,
  MMCC_ERR_IO = 7,
  MMCC_ERR_INTERNAL = 8
} mmcc_status;

typedef struct mmcc_instance mmcc_instance;
typedef struct mmcc_solution mmcc_solution;

MMCC_API const char* mmcc_last_error(void);
MMCC_API const char* mmcc_status_string(mmcc_status status);
MMCC_API void mmcc_string_free(char* s);

/* ---- instances ---------------------------------------------------------- */

/* JSON text: {"n", "depots", "k", "epsilon", "matrix" | "edges"}. Raw edge
 * lists are closed to shortest-path distances; the result is validated. */
MMCC_API mmcc_status mmcc_instance_from_json(const char* json, size_t length,
                                             mmcc_instance** out);
MMCC_API mmcc_status mmcc_instance_from_file(const char* path, mmcc_instance** out);

/* `matrix` is n*n row-major. Validated like parsed instances. */
MMCC_API mmcc_status mmcc_instance_create(size_t n, const double* matrix, const uint32_t* depots,
                                          size_t depot_count, size_t k, double epsilon,
                                          mmcc_instance** out);
MMCC_API void mmcc_instance_free(mmcc_instance* inst);

MMCC_API size_t mmcc_instance_vertex_count(const mmcc_instance* inst);
MMCC_API size_t mmcc_instance_depot_count(const mmcc_instance* inst);
MMCC_API size_t mmcc_instance_robot_count(const mmcc_instance* inst);
MMCC_API double mmcc_instance_epsilon(const mmcc_instance* inst);
MMCC_API double mmcc_instance_weight(const mmcc_instance* inst, uint32_t u, uint32_t v);

/* Replaces epsilon; must lie in (0, 1). */
MMCC_API mmcc_status mmcc_instance_set_epsilon(mmcc_instance* inst, double epsilon);

MMCC_API mmcc_status mmcc_instance_to_json(const mmcc_instance* inst, char** out);
/* DOT rendering of the minimum rooted spanning forest. */
MMCC_API mmcc_status mmcc_instance_forest_dot(const mmcc_instance* inst, char** out);

/* ---- solving ------------------------------------------------------------ */

typedef struct mmcc_solve_options {
  unsigned parallelism; /* 0 or 1: single-threaded */
} mmcc_solve_options;

/* options may be NULL. */
MMCC_API mmcc_status mmcc_solve(const mmcc_instance* inst, const mmcc_solve_options* options,
                                mmcc_solution** out);
MMCC_API void mmcc_solution_free(mmcc_solution* solution);

MMCC_API double mmcc_solution_objective(const mmcc_solution* solution);
MMCC_API uint64_t mmcc_solution_candidate_id(const mmcc_solution* solution);
MMCC_API size_t mmcc_solution_iterations(const mmcc_solution* solution);
MMCC_API double mmcc_solution_elapsed_ms(const mmcc_solution* solution);
MMCC_API size_t mmcc_solution_cycle_count(const mmcc_solution* solution);

/* Borrowed view of cycle `index`; the route stays valid while the solution
 * lives. Any out-pointer may be NULL. */
MMCC_API mmcc_status mmcc_solution_cycle(const mmcc_solution* solution, size_t index,
                                         uint32_t* root, const uint32_t** route,
                                         size_t* route_length, double* weight);

/* include_timing == 0 writes "elapsed_ms": 0 for reproducible output. */
MMCC_API mmcc_status mmcc_solution_to_json(const mmcc_solution* solution, int include_timing,
                                           char** out);
MMCC_API mmcc_status mmcc_solution_trace_csv(const mmcc_solution* solution, char** out);
MMCC_API mmcc_status mmcc_solution_dot(const mmcc_solution* solution, const mmcc_instance* inst,
                                       char** out);

/* MMCC_OK if the cover is valid, MMCC_ERR_VALIDATION otherwise. The JSON
 * report is written to *report when report is non-NULL. */
MMCC_API mmcc_status mmcc_solution_validate(const mmcc_solution* solution,
                                            const mmcc_instance* inst, char** report);

/* ---- verification against the exact solver ----------------------------- */

typedef struct mmcc_verify_result {
  double lambda_star;
  double alg_objective;
  double ratio;     /* alg_objective / lambda_star; 1 when both are 0 */
  int within_bound; /* alg_objective <= (5 + epsilon) * lambda_star */
} mmcc_verify_result;

/* MMCC_ERR_TOO_LARGE when the instance exceeds the exact solver's guard. */
MMCC_API mmcc_status mmcc_verify(const mmcc_instance* inst, const mmcc_solve_options* options,
                                 mmcc_verify_result* out);
MMCC_API mmcc_status mmcc_verify_result_to_json(const mmcc_verify_result* result, char** out);

/* ---- generation and benchmarking ---------------------------------------- */

typedef struct mmcc_gen_params {
  size_t n;
  size_t m;
  size_t k;
  double epsilon;
  uint64_t seed;
} mmcc_gen_params;

/* Random geometric instance serialized as JSON; identical for identical params. */
MMCC_API mmcc_status mmcc_generate_instance_json(const mmcc_gen_params* params, char** out);

typedef struct mmcc_bench_params {
  const size_t* sizes;
  size_t size_count;
  const size_t* depot_counts;
  size_t depot_count_count;
  size_t k;          /* 0: max(m, ceil(n / 10)) */
  double epsilon;
  size_t instances;  /* seeds per (n, m) */
  size_t repeats;    /* timed runs per instance */
  uint64_t seed;
  unsigned parallelism;
} mmcc_bench_params;

typedef struct mmcc_bench_summary {
  int has_size_slope;
  double size_slope;
  int has_depot_ratio;
  double depot_ratio;
} mmcc_bench_summary;

/* CSV rows to *csv; summary may be NULL. */
MMCC_API mmcc_status mmcc_bench(const mmcc_bench_params* params, char** csv,
                                mmcc_bench_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* MMCC_H */
