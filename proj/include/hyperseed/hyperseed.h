/* Copyright 2026 The hyperseed Authors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the hyperseed selection engine. All objects are opaque
 * handles owned by the caller and released with the matching *_free call.
 * Every fallible call returns an hs_status; on failure hs_last_error()
 * describes the problem (thread-local, valid until the next failing call).
 */

#ifndef HYPERSEED_H_
#define HYPERSEED_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HYPERSEED_BUILDING_LIBRARY)
#    define HS_API __declspec(dllexport)
#  else
#    define HS_API __declspec(dllimport)
#  endif
#else
#  define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_INVALID_ARGUMENT = 1,
  HS_ERR_PARSE = 2,
  HS_ERR_DATA = 3,
  HS_ERR_CONFIG = 4,
  HS_ERR_IO = 5,
  HS_ERR_INTERNAL = 6
} hs_status;

typedef enum hs_backend { HS_BACKEND_HOI = 0, HS_BACKEND_HGNN = 1 } hs_backend;

typedef struct hs_dataset hs_dataset;
typedef struct hs_result hs_result;

/* NULL or "" for optional files. */
typedef struct hs_dataset_paths {
  const char* hyperedges;
  const char* features;
  const char* labels;
  const char* splits;
  const char* nodes;
  const char* edge_weights;
  int sparse_features;
} hs_dataset_paths;

typedef struct hs_config {
  size_t budget;
  size_t k;
  double alpha;
  int theta_auto; /* nonzero: theta = theta_quantile of the pool's normalised influences */
  double theta;
  double theta_quantile;
  int radius_auto; /* nonzero: radius = radius_quantile of sampled pairwise distances */
  double radius;
  double radius_quantile;
  size_t radius_sample_pairs;
  double beta;
  double gamma;
  hs_backend backend;
  int use_train_split; /* nonzero: candidate pool = the dataset's train split */
  unsigned threads;    /* 0: hardware concurrency */
  uint64_t seed;
} hs_config;

typedef struct hs_eval_options {
  double alpha;
  size_t steps;
  hs_backend backend;
} hs_eval_options;

HS_API const char* hs_version(void);
HS_API const char* hs_last_error(void);

/* "trace", "debug", "info", "warn", "error", "off". Unset: HYPERSEED_LOG, else "warn". */
HS_API hs_status hs_set_log_level(const char* level);

HS_API void hs_config_init(hs_config* cfg);
HS_API void hs_eval_options_init(hs_eval_options* opts);
HS_API hs_status hs_parse_backend(const char* name, hs_backend* out);

HS_API hs_status hs_dataset_load(const hs_dataset_paths* paths, hs_dataset** out);

/* In-memory dataset with external ids "0".."n-1". Hyperedge e holds
 * members[offsets[e] .. offsets[e+1]); features is row-major n x dim. */
HS_API hs_status hs_dataset_create(size_t num_nodes, size_t num_edges, const size_t* offsets,
                                   const uint32_t* members, const double* features, size_t dim,
                                   hs_dataset** out);
HS_API void hs_dataset_free(hs_dataset* ds);
HS_API size_t hs_dataset_num_nodes(const hs_dataset* ds);
HS_API size_t hs_dataset_num_edges(const hs_dataset* ds);
HS_API int hs_dataset_has_labels(const hs_dataset* ds);
HS_API const char* hs_dataset_node_id(const hs_dataset* ds, uint32_t node);

/* Greedy selection; naive != 0 uses the exhaustive-per-round reference path. */
HS_API hs_status hs_select(const hs_dataset* ds, const hs_config* cfg, int naive, hs_result** out);
HS_API void hs_result_free(hs_result* r);
HS_API size_t hs_result_size(const hs_result* r);
HS_API uint32_t hs_result_seed_index(const hs_result* r, size_t step);
HS_API const char* hs_result_seed_id(const hs_result* r, size_t step);
HS_API double hs_result_gain(const hs_result* r, size_t step);
HS_API void hs_result_trace(const hs_result* r, size_t step, size_t* moi, double* edv, double* objective);
HS_API double hs_result_objective(const hs_result* r);
HS_API double hs_result_theta(const hs_result* r);
HS_API double hs_result_radius(const hs_result* r);
HS_API size_t hs_result_evaluations(const hs_result* r);
HS_API hs_status hs_result_write(const hs_result* r, const char* path);

/* Dataset statistics as a JSON document; release with hs_string_free. */
HS_API hs_status hs_stats_json(const hs_dataset* ds, const hs_config* cfg, char** out_json);
HS_API void hs_string_free(char* s);

/* Label-propagation accuracy of a seed file (result document or id list). */
HS_API hs_status hs_evaluate_seed_file(const hs_dataset* ds, const char* seed_path, const hs_eval_options* opts,
                                       double* accuracy, size_t* evaluated);
HS_API hs_status hs_evaluate_seeds(const hs_dataset* ds, const uint32_t* seeds, size_t count,
                                   const hs_eval_options* opts, double* accuracy, size_t* evaluated);

#ifdef __cplusplus
}
#endif

#endif /* HYPERSEED_H_ */
