// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/hyperseed.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <string>

#include <spdlog/spdlog.h>

#include "hyperseed/error.hpp"
#include "hyperseed/evaluate.hpp"
#include "hyperseed/io.hpp"
#include "hyperseed/selector.hpp"
#include "hyperseed/summary.hpp"

struct hs_dataset {
  hyperseed::Dataset data;
};

struct hs_result {
  hyperseed::SelectionResult result;
  hyperseed::SelectionConfig config;
  hyperseed::IdMap ids;
};

namespace {

thread_local std::string last_error;

void init_logging() {
  static std::once_flag once;
  std::call_once(once, [] {
    const char* env = std::getenv("HYPERSEED_LOG");
    spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  });
}

hs_status to_status(hyperseed::ErrorCode code) {
  switch (code) {
    case hyperseed::ErrorCode::kInvalidArgument: return HS_ERR_INVALID_ARGUMENT;
    case hyperseed::ErrorCode::kParse: return HS_ERR_PARSE;
    case hyperseed::ErrorCode::kData: return HS_ERR_DATA;
    case hyperseed::ErrorCode::kConfig: return HS_ERR_CONFIG;
    case hyperseed::ErrorCode::kIo: return HS_ERR_IO;
  }
  return HS_ERR_INTERNAL;
}

template <class Fn>
hs_status guarded(Fn&& fn) {
  init_logging();
  try {
    fn();
    return HS_OK;
  } catch (const hyperseed::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return HS_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  hyperseed::require(p != nullptr, hyperseed::ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

std::string str_or_empty(const char* s) { return s ? s : ""; }

hyperseed::SelectionConfig to_config(const hs_dataset& ds, const hs_config& c) {
  hyperseed::SelectionConfig cfg;
  cfg.budget = c.budget;
  cfg.k = c.k;
  cfg.alpha = c.alpha;
  if (!c.theta_auto) cfg.theta = c.theta;
  cfg.theta_quantile = c.theta_quantile;
  if (!c.radius_auto) cfg.radius = c.radius;
  cfg.radius_quantile = c.radius_quantile;
  cfg.radius_sample_pairs = c.radius_sample_pairs;
  cfg.beta = c.beta;
  cfg.gamma = c.gamma;
  hyperseed::require(c.backend == HS_BACKEND_HOI || c.backend == HS_BACKEND_HGNN, hyperseed::ErrorCode::kConfig,
                     "unknown backend");
  cfg.backend = c.backend == HS_BACKEND_HOI ? hyperseed::Backend::kHoi : hyperseed::Backend::kHgnn;
  if (c.use_train_split) {
    hyperseed::require(ds.data.splits && !ds.data.splits->train.empty(), hyperseed::ErrorCode::kConfig,
                       "train split requested but the dataset has no train nodes");
    cfg.candidate_pool = ds.data.splits->train;
  }
  cfg.threads = c.threads;
  cfg.seed = c.seed;
  return cfg;
}

hyperseed::LabelPropagationOptions to_eval(const hs_eval_options* o) {
  hyperseed::LabelPropagationOptions opts;
  if (o) {
    opts.alpha = o->alpha;
    opts.steps = o->steps;
    opts.backend = o->backend == HS_BACKEND_HGNN ? hyperseed::Backend::kHgnn : hyperseed::Backend::kHoi;
  }
  return opts;
}

void evaluate(const hs_dataset* ds, const std::vector<hyperseed::NodeId>& seeds, const hs_eval_options* opts,
              double* accuracy, size_t* evaluated) {
  hyperseed::require(ds->data.labels.has_value(), hyperseed::ErrorCode::kData,
                     "evaluation needs node labels (--labels)");
  hyperseed::require(!seeds.empty(), hyperseed::ErrorCode::kInvalidArgument, "seed list is empty");
  std::vector<hyperseed::NodeId> test;
  if (ds->data.splits) test = ds->data.splits->test;
  const auto report = hyperseed::evaluate_seeds(ds->data.graph, *ds->data.labels, seeds, test, to_eval(opts));
  if (accuracy) *accuracy = report.accuracy;
  if (evaluated) *evaluated = report.evaluated;
}

}  // namespace

extern "C" {

const char* hs_version(void) { return hyperseed::kVersion; }

const char* hs_last_error(void) { return last_error.c_str(); }

hs_status hs_set_log_level(const char* level) {
  return guarded([&] {
    need(level, "level");
    const auto lvl = spdlog::level::from_str(level);
    hyperseed::require(lvl != spdlog::level::off || std::strcmp(level, "off") == 0, hyperseed::ErrorCode::kConfig,
                       std::string("unknown log level '") + level + "'");
    spdlog::set_level(lvl);
  });
}

void hs_config_init(hs_config* c) {
  if (!c) return;
  const hyperseed::SelectionConfig d;
  c->budget = d.budget;
  c->k = d.k;
  c->alpha = d.alpha;
  c->theta_auto = 1;
  c->theta = 0.0;
  c->theta_quantile = d.theta_quantile;
  c->radius_auto = 1;
  c->radius = 0.0;
  c->radius_quantile = d.radius_quantile;
  c->radius_sample_pairs = d.radius_sample_pairs;
  c->beta = d.beta;
  c->gamma = d.gamma;
  c->backend = HS_BACKEND_HOI;
  c->use_train_split = 0;
  c->threads = 0;
  c->seed = d.seed;
}

void hs_eval_options_init(hs_eval_options* o) {
  if (!o) return;
  const hyperseed::LabelPropagationOptions d;
  o->alpha = d.alpha;
  o->steps = d.steps;
  o->backend = HS_BACKEND_HOI;
}

hs_status hs_parse_backend(const char* name, hs_backend* out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = hyperseed::parse_backend(name) == hyperseed::Backend::kHoi ? HS_BACKEND_HOI : HS_BACKEND_HGNN;
  });
}

hs_status hs_dataset_load(const hs_dataset_paths* paths, hs_dataset** out) {
  return guarded([&] {
    need(paths, "paths");
    need(out, "out");
    *out = nullptr;
    hyperseed::DatasetPaths p;
    p.hyperedges = str_or_empty(paths->hyperedges);
    p.features = str_or_empty(paths->features);
    p.labels = str_or_empty(paths->labels);
    p.splits = str_or_empty(paths->splits);
    p.nodes = str_or_empty(paths->nodes);
    p.edge_weights = str_or_empty(paths->edge_weights);
    p.sparse_features = paths->sparse_features != 0;
    hyperseed::require(!p.hyperedges.empty() && !p.features.empty(), hyperseed::ErrorCode::kInvalidArgument,
                       "hyperedge and feature paths are required");
    *out = new hs_dataset{hyperseed::load_dataset(p)};
  });
}

hs_status hs_dataset_create(size_t num_nodes, size_t num_edges, const size_t* offsets, const uint32_t* members,
                            const double* features, size_t dim, hs_dataset** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    need(offsets, "offsets");
    hyperseed::require(num_nodes > 0, hyperseed::ErrorCode::kData, "dataset needs at least one node");
    hyperseed::require(features || dim == 0, hyperseed::ErrorCode::kInvalidArgument, "features is null");
    std::vector<std::vector<hyperseed::NodeId>> edges(num_edges);
    for (size_t e = 0; e < num_edges; ++e) {
      hyperseed::require(offsets[e] <= offsets[e + 1], hyperseed::ErrorCode::kInvalidArgument,
                         "edge offsets must be non-decreasing");
      if (offsets[e + 1] > offsets[e]) need(members, "members");
      edges[e].assign(members + offsets[e], members + offsets[e + 1]);
    }
    hyperseed::Dataset ds;
    std::vector<std::string> ids(num_nodes);
    for (size_t v = 0; v < num_nodes; ++v) ids[v] = std::to_string(v);
    ds.ids = hyperseed::IdMap(std::move(ids));
    ds.graph = hyperseed::Hypergraph::build(num_nodes, edges);
    ds.features = hyperseed::FeatureMatrix(num_nodes, dim);
    if (dim) std::memcpy(ds.features.data().data(), features, num_nodes * dim * sizeof(double));
    *out = new hs_dataset{std::move(ds)};
  });
}

void hs_dataset_free(hs_dataset* ds) { delete ds; }

size_t hs_dataset_num_nodes(const hs_dataset* ds) { return ds ? ds->data.graph.num_nodes() : 0; }
size_t hs_dataset_num_edges(const hs_dataset* ds) { return ds ? ds->data.graph.num_edges() : 0; }
int hs_dataset_has_labels(const hs_dataset* ds) { return ds && ds->data.labels ? 1 : 0; }

const char* hs_dataset_node_id(const hs_dataset* ds, uint32_t node) {
  if (!ds || node >= ds->data.ids.size()) return nullptr;
  return ds->data.ids.external(node).c_str();
}

hs_status hs_select(const hs_dataset* ds, const hs_config* cfg, int naive, hs_result** out) {
  return guarded([&] {
    need(ds, "dataset");
    need(cfg, "config");
    need(out, "out");
    *out = nullptr;
    auto config = to_config(*ds, *cfg);
    const auto model = hyperseed::InfluenceModel::build(ds->data.graph, ds->data.features, config);
    auto result = naive ? hyperseed::select_naive(model, config.budget, config.threads)
                        : hyperseed::select_lazy(model, config.budget, config.threads);
    *out = new hs_result{std::move(result), std::move(config), ds->data.ids};
  });
}

void hs_result_free(hs_result* r) { delete r; }

size_t hs_result_size(const hs_result* r) { return r ? r->result.seeds.size() : 0; }

uint32_t hs_result_seed_index(const hs_result* r, size_t step) {
  return r && step < r->result.seeds.size() ? r->result.seeds[step] : UINT32_MAX;
}

const char* hs_result_seed_id(const hs_result* r, size_t step) {
  if (!r || step >= r->result.seeds.size()) return nullptr;
  return r->ids.external(r->result.seeds[step]).c_str();
}

double hs_result_gain(const hs_result* r, size_t step) {
  return r && step < r->result.gains.size() ? r->result.gains[step] : 0.0;
}

void hs_result_trace(const hs_result* r, size_t step, size_t* moi, double* edv, double* objective) {
  if (!r || step >= r->result.trace.size()) return;
  const auto& t = r->result.trace[step];
  if (moi) *moi = t.moi;
  if (edv) *edv = t.edv;
  if (objective) *objective = t.objective;
}

double hs_result_objective(const hs_result* r) {
  return r && !r->result.trace.empty() ? r->result.trace.back().objective : 0.0;
}

double hs_result_theta(const hs_result* r) { return r ? r->result.params.theta : 0.0; }
double hs_result_radius(const hs_result* r) { return r ? r->result.params.radius : 0.0; }
size_t hs_result_evaluations(const hs_result* r) { return r ? r->result.evaluations : 0; }

hs_status hs_result_write(const hs_result* r, const char* path) {
  return guarded([&] {
    need(r, "result");
    need(path, "path");
    hyperseed::write_result(r->result, r->ids, r->config, path);
  });
}

hs_status hs_stats_json(const hs_dataset* ds, const hs_config* cfg, char** out_json) {
  return guarded([&] {
    need(ds, "dataset");
    need(cfg, "config");
    need(out_json, "out_json");
    *out_json = nullptr;
    const auto config = to_config(*ds, *cfg);
    const auto text =
        hyperseed::summary_to_json(hyperseed::summarize(ds->data.graph, ds->data.features, config));
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_json = buf;
  });
}

void hs_string_free(char* s) { std::free(s); }

hs_status hs_evaluate_seed_file(const hs_dataset* ds, const char* seed_path, const hs_eval_options* opts,
                                double* accuracy, size_t* evaluated) {
  return guarded([&] {
    need(ds, "dataset");
    need(seed_path, "seed_path");
    std::vector<hyperseed::NodeId> seeds;
    for (const auto& id : hyperseed::read_seed_file(seed_path)) seeds.push_back(ds->data.ids.at(id));
    hyperseed::require(!seeds.empty(), hyperseed::ErrorCode::kData, std::string(seed_path) + ": no seeds listed");
    evaluate(ds, seeds, opts, accuracy, evaluated);
  });
}

hs_status hs_evaluate_seeds(const hs_dataset* ds, const uint32_t* seeds, size_t count, const hs_eval_options* opts,
                            double* accuracy, size_t* evaluated) {
  return guarded([&] {
    need(ds, "dataset");
    hyperseed::require(count == 0 || seeds, hyperseed::ErrorCode::kInvalidArgument, "seeds is null");
    evaluate(ds, std::vector<hyperseed::NodeId>(seeds, seeds + count), opts, accuracy, evaluated);
  });
}

}  // extern "C"
