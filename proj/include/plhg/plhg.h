/* C interface to the power-law hypergraph library.
 *
 * Every object is an opaque handle created by a plhg_*_new / *_load / *_run
 * call and released by the matching *_free (which accepts NULL). Calls
 * return a plhg_status; on failure plhg_last_error() holds a message for the
 * calling thread until its next failing call. Strings returned through
 * char** are heap-allocated and released with plhg_string_free. */
#ifndef PLHG_H
#define PLHG_H

#include <stddef.h>
#include <stdint.h>

#if defined(PLHG_BUILDING_LIBRARY)
#define PLHG_API __attribute__((visibility("default")))
#else
#define PLHG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plhg_status {
  PLHG_OK = 0,
  PLHG_ERR_INVALID_ARGUMENT = 1,
  PLHG_ERR_DOMAIN = 2,
  PLHG_ERR_CONFIG = 3,
  PLHG_ERR_GUARD = 4,
  PLHG_ERR_PARSE = 5,
  PLHG_ERR_IO = 6,
  PLHG_ERR_INTERNAL = 7
} plhg_status;

typedef enum plhg_statistic {
  PLHG_STAT_EDGES = 0,
  PLHG_STAT_LOOSE2 = 1
} plhg_statistic;

/* Unsigned 128-bit count as two 64-bit halves. */
typedef struct plhg_u128 {
  uint64_t hi;
  uint64_t lo;
} plhg_u128;

typedef struct plhg_config plhg_config;
typedef struct plhg_weights plhg_weights;
typedef struct plhg_hypergraph plhg_hypergraph;
typedef struct plhg_experiment plhg_experiment;
typedef struct plhg_er_report plhg_er_report;

PLHG_API const char* plhg_version(void);
PLHG_API const char* plhg_last_error(void);
PLHG_API const char* plhg_status_name(plhg_status status);
PLHG_API void plhg_string_free(char* s);

/* Decimal form of a 128-bit count; cap must be at least 40. */
PLHG_API plhg_status plhg_u128_to_string(plhg_u128 value, char* buf,
                                         size_t cap);

/* ---- configuration ---------------------------------------------------- */

PLHG_API plhg_status plhg_config_new(plhg_config** out);
/* JSON document, comments allowed; see configs/example.jsonc. */
PLHG_API plhg_status plhg_config_load(const char* path, plhg_config** out);
PLHG_API plhg_status plhg_config_parse(const char* json_text,
                                       plhg_config** out);
/* One override, e.g. ("alpha", "0.5") or ("ns", "256,512,1024,2048"). */
PLHG_API plhg_status plhg_config_set(plhg_config* config, const char* key,
                                     const char* value);
/* Resolved configuration as a loadable JSON document. */
PLHG_API plhg_status plhg_config_to_json(const plhg_config* config,
                                         char** out);
/* Run metadata (regime flags per alpha) as JSON. */
PLHG_API plhg_status plhg_config_metadata_json(const plhg_config* config,
                                               char** out);
PLHG_API plhg_status plhg_config_out_dir(const plhg_config* config,
                                         char** out);
/* 1 when alpha < 1 and tau > 1/alpha for the model alpha. */
PLHG_API plhg_status plhg_config_outside_tau_regime(const plhg_config* config,
                                                    int* out);
/* m and tau of the resolved model. */
PLHG_API plhg_status plhg_config_shape(const plhg_config* config, int* m,
                                       double* tau);
/* Alpha grid (the model alpha when no grid is set). Writes up to cap
 * values and the full length to *count. */
PLHG_API plhg_status plhg_config_alphas(const plhg_config* config,
                                        double* values, size_t cap,
                                        size_t* count);
/* Requested statistics, same calling convention. */
PLHG_API plhg_status plhg_config_statistics(const plhg_config* config,
                                            plhg_statistic* values,
                                            size_t cap, size_t* count);
PLHG_API void plhg_config_free(plhg_config* config);

/* ---- sampling ---------------------------------------------------------- */

/* Draws weights and one hypergraph from the configured model and seed. */
PLHG_API plhg_status plhg_sample(const plhg_config* config,
                                 plhg_weights** weights,
                                 plhg_hypergraph** hypergraph);

PLHG_API plhg_status plhg_weights_write(const plhg_weights* weights,
                                        const char* path);
PLHG_API plhg_status plhg_weights_read(const char* path, plhg_weights** out);
PLHG_API plhg_status plhg_weights_size(const plhg_weights* weights,
                                       size_t* out);
PLHG_API plhg_status plhg_weights_get(const plhg_weights* weights,
                                      size_t index, double* out);
PLHG_API void plhg_weights_free(plhg_weights* weights);

/* Samples with supplied weights; n is taken from the weights. */
PLHG_API plhg_status plhg_sample_with_weights(const plhg_config* config,
                                              const plhg_weights* weights,
                                              plhg_hypergraph** out);

/* ---- hypergraphs -------------------------------------------------------- */

PLHG_API plhg_status plhg_hypergraph_read(const char* path,
                                          plhg_hypergraph** out);
PLHG_API plhg_status plhg_hypergraph_write(const plhg_hypergraph* h,
                                           const char* path);
PLHG_API plhg_status plhg_hypergraph_info(const plhg_hypergraph* h,
                                          uint64_t* n, int* m,
                                          uint64_t* edge_count);
/* Copies edge `index` (0-based, sorted order) into vertices[0..m-1] as
 * 1-based increasing labels. */
PLHG_API plhg_status plhg_hypergraph_edge(const plhg_hypergraph* h,
                                          uint64_t index, uint32_t* vertices);
PLHG_API void plhg_hypergraph_free(plhg_hypergraph* h);

typedef struct plhg_motifs {
  uint64_t edge_count;
  int has_loose2; /* 0 for m = 2 */
  plhg_u128 loose2_count;
} plhg_motifs;

PLHG_API plhg_status plhg_count_motifs(const plhg_hypergraph* h,
                                       plhg_motifs* out);
/* Pair-degree histogram as CSV "pair_degree,pairs". */
PLHG_API plhg_status plhg_pair_degree_csv(const plhg_hypergraph* h,
                                          char** out);

/* ---- theory ------------------------------------------------------------- */

typedef struct plhg_prediction {
  double n_exponent;
  double log_exponent;
  int has_constant;
  double constant;
  int has_upper_bound;
  double upper_bound_constant;
  int concentration;
  const char* regime; /* static string */
} plhg_prediction;

/* Prediction for the configured model (m, tau, body, x0, lambda) at the
 * given alpha. Edges with tau != 1 use the n^tau kernel law. */
PLHG_API plhg_status plhg_predict(const plhg_config* config,
                                  plhg_statistic statistic, double alpha,
                                  plhg_prediction* out);

/* ---- experiments -------------------------------------------------------- */

/* Runs the configured (alpha, n) grid with the configured workers. */
PLHG_API plhg_status plhg_experiment_run(const plhg_config* config,
                                         plhg_experiment** out);
/* Loads a records.csv; m and tau come from the file, the weight law and
 * statistics from the config. */
PLHG_API plhg_status plhg_experiment_load(const plhg_config* config,
                                          const char* records_path,
                                          plhg_experiment** out);
/* Fits every requested statistic against theory. */
PLHG_API plhg_status plhg_experiment_compare(plhg_experiment* experiment);
PLHG_API plhg_status plhg_experiment_record_count(
    const plhg_experiment* experiment, size_t* out);
/* Writes records.csv and cells.csv, plus report.csv and slopes.csv once
 * compared. The directory is created if needed. */
PLHG_API plhg_status plhg_experiment_write(const plhg_experiment* experiment,
                                           const char* dir);
PLHG_API plhg_status plhg_experiment_records_csv(
    const plhg_experiment* experiment, char** out);
PLHG_API plhg_status plhg_experiment_report_csv(
    const plhg_experiment* experiment, char** out);
/* 1 iff every comparison row passes; requires a prior compare. */
PLHG_API plhg_status plhg_experiment_verdict(
    const plhg_experiment* experiment, int* all_pass);
PLHG_API void plhg_experiment_free(plhg_experiment* experiment);

/* Erdos-Renyi contrast using the config's er.* keys. */
PLHG_API plhg_status plhg_er_run(const plhg_config* config,
                                 plhg_er_report** out);
/* Writes er_report.csv and er_slopes.csv. */
PLHG_API plhg_status plhg_er_write(const plhg_er_report* report,
                                   const char* dir);
PLHG_API plhg_status plhg_er_report_csv(const plhg_er_report* report,
                                        char** out);
PLHG_API plhg_status plhg_er_verdict(const plhg_er_report* report,
                                     int* pass);
PLHG_API void plhg_er_report_free(plhg_er_report* report);

#ifdef __cplusplus
}
#endif

#endif
