// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the engine only through the C API.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperseed/hyperseed.h"

namespace {

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kParse = 3,
  kData = 4,
  kConfig = 5,
  kIo = 6,
};

int exit_code(hs_status s) {
  switch (s) {
    case HS_OK: return kOk;
    case HS_ERR_INVALID_ARGUMENT: return kUsage;
    case HS_ERR_PARSE: return kParse;
    case HS_ERR_DATA: return kData;
    case HS_ERR_CONFIG: return kConfig;
    case HS_ERR_IO: return kIo;
    default: return kInternal;
  }
}

struct CliError {
  int code;
  std::string message;
};

void check(hs_status s) {
  if (s != HS_OK) throw CliError{exit_code(s), hs_last_error()};
}

struct DatasetArgs {
  std::string hyperedges, features, labels, splits, nodes, edge_weights;
  bool sparse_features = false;

  void attach(CLI::App* app) {
    app->add_option("--hyperedges", hyperedges, "hyperedge list, one edge per line")->required();
    app->add_option("--features", features, "node feature CSV (id,x1,...,xd)")->required();
    app->add_option("--labels", labels, "node label CSV (id,class)");
    app->add_option("--splits", splits, "JSON split file with train/test id arrays");
    app->add_option("--nodes", nodes, "node list; ids outside it are rejected");
    app->add_option("--edge-weights", edge_weights, "one weight per hyperedge (hgnn backend)");
    app->add_flag("--sparse-features", sparse_features, "features given as 'id idx:value ...'");
  }

  std::unique_ptr<hs_dataset, decltype(&hs_dataset_free)> load() const {
    hs_dataset_paths p{hyperedges.c_str(), features.c_str(),     labels.c_str(),
                       splits.c_str(),     nodes.c_str(),        edge_weights.c_str(),
                       sparse_features ? 1 : 0};
    hs_dataset* ds = nullptr;
    check(hs_dataset_load(&p, &ds));
    return {ds, hs_dataset_free};
  }
};

struct ConfigArgs {
  std::size_t budget = 0;
  std::size_t k = 0;
  double alpha = 0, beta = 0, gamma = 0, theta_quantile = 0, radius_quantile = 0;
  std::size_t radius_samples = 0;
  std::string theta = "auto", radius = "auto", backend = "hoi";
  bool train_split = false;
  unsigned threads = 0;
  std::uint64_t seed = 0;

  ConfigArgs() {
    hs_config c;
    hs_config_init(&c);
    budget = c.budget;
    k = c.k;
    alpha = c.alpha;
    beta = c.beta;
    gamma = c.gamma;
    theta_quantile = c.theta_quantile;
    radius_quantile = c.radius_quantile;
    radius_samples = c.radius_sample_pairs;
    seed = c.seed;
  }

  void attach(CLI::App* app, bool with_budget) {
    if (with_budget) app->add_option("--budget,-B", budget, "number of seeds to select")->required();
    app->add_option("--k", k, "propagation steps")->capture_default_str();
    app->add_option("--alpha", alpha, "propagation mixing coefficient in [0,1]")->capture_default_str();
    app->add_option("--theta", theta, "activation threshold, or 'auto'")->capture_default_str();
    app->add_option("--theta-quantile", theta_quantile, "quantile used by --theta auto")->capture_default_str();
    app->add_option("--radius", radius, "feature ball radius, 'auto' or 'inf'")->capture_default_str();
    app->add_option("--radius-quantile", radius_quantile, "quantile used by --radius auto")->capture_default_str();
    app->add_option("--radius-samples", radius_samples, "pairs sampled by --radius auto")->capture_default_str();
    app->add_option("--beta", beta, "diffusion base probability in (0,1)")->capture_default_str();
    app->add_option("--gamma", gamma, "MoI/EDV trade-off in [0,1]")->capture_default_str();
    app->add_option("--backend", backend, "propagation backend: hoi or hgnn")->capture_default_str();
    app->add_flag("--train-split", train_split, "restrict candidates to the train split");
    app->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
    app->add_option("--seed", seed, "seed for the sampled radius quantile")->capture_default_str();
  }

  hs_config to_config() const {
    hs_config c;
    hs_config_init(&c);
    c.budget = budget;
    c.k = k;
    c.alpha = alpha;
    c.beta = beta;
    c.gamma = gamma;
    c.theta_quantile = theta_quantile;
    c.radius_quantile = radius_quantile;
    c.radius_sample_pairs = radius_samples;
    c.use_train_split = train_split ? 1 : 0;
    c.threads = threads;
    c.seed = seed;
    check(hs_parse_backend(backend.c_str(), &c.backend));
    if (theta != "auto") {
      c.theta_auto = 0;
      c.theta = parse_number("--theta", theta);
    }
    if (radius == "inf") {
      c.radius_auto = 0;
      c.radius = std::numeric_limits<double>::infinity();
    } else if (radius != "auto") {
      c.radius_auto = 0;
      c.radius = parse_number("--radius", radius);
    }
    return c;
  }

  static double parse_number(const char* flag, const std::string& text) {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw CliError{kUsage, std::string(flag) + " expects a number or 'auto', got '" + text + "'"};
  }
};

int run_select(const DatasetArgs& data, const ConfigArgs& args, bool naive, const std::string& output) {
  const auto start = std::chrono::steady_clock::now();
  const auto ds = data.load();
  const hs_config cfg = args.to_config();
  hs_result* raw = nullptr;
  check(hs_select(ds.get(), &cfg, naive ? 1 : 0, &raw));
  std::unique_ptr<hs_result, decltype(&hs_result_free)> result(raw, hs_result_free);
  if (!output.empty()) check(hs_result_write(result.get(), output.c_str()));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::printf("budget: %zu\n", hs_result_size(result.get()));
  std::printf("objective: %.17g\n", hs_result_objective(result.get()));
  std::printf("theta: %.17g\nradius: %.17g\n", hs_result_theta(result.get()), hs_result_radius(result.get()));
  std::printf("evaluations: %zu\n", hs_result_evaluations(result.get()));
  std::printf("seeds:");
  for (std::size_t i = 0; i < hs_result_size(result.get()); ++i) std::printf(" %s", hs_result_seed_id(result.get(), i));
  std::printf("\nwall_seconds: %.3f\n", seconds);
  return kOk;
}

void print_distribution(const char* name, const nlohmann::json& d) {
  std::printf("%s: min %zu, mean %.6g, max %zu\n", name, d["min"].get<std::size_t>(), d["mean"].get<double>(),
              d["max"].get<std::size_t>());
  std::printf("%s histogram:", name);
  for (const auto& bin : d["histogram"]) {
    std::printf(" %zu:%zu", bin[0].get<std::size_t>(), bin[1].get<std::size_t>());
  }
  std::printf("\n");
}

int run_stats(const DatasetArgs& data, const ConfigArgs& args, bool as_json) {
  const auto ds = data.load();
  const hs_config cfg = args.to_config();
  char* raw = nullptr;
  check(hs_stats_json(ds.get(), &cfg, &raw));
  std::unique_ptr<char, decltype(&hs_string_free)> text(raw, hs_string_free);
  if (as_json) {
    std::fputs(text.get(), stdout);
    return kOk;
  }
  const auto doc = nlohmann::json::parse(text.get());
  std::printf("nodes: %zu\n", doc["num_nodes"].get<std::size_t>());
  std::printf("hyperedges: %zu\n", doc["num_edges"].get<std::size_t>());
  std::printf("incidences: %zu\n", doc["num_incidences"].get<std::size_t>());
  std::printf("feature dim: %zu\n", doc["feature_dim"].get<std::size_t>());
  std::printf("isolated nodes: %zu\n", doc["isolated_nodes"].get<std::size_t>());
  print_distribution("node degree", doc["node_degree"]);
  print_distribution("edge size", doc["edge_degree"]);
  std::printf("theta: %.17g%s\n", doc["theta"].get<double>(), doc["theta_auto"].get<bool>() ? " (auto)" : "");
  std::printf("radius: %.17g%s\n", doc["radius"].get<double>(), doc["radius_auto"].get<bool>() ? " (auto)" : "");
  std::printf("candidate pool: %zu\n", doc["pool_size"].get<std::size_t>());
  print_distribution("activation set size", doc["activation_size"]);
  std::printf("empty activation sets: %zu\n", doc["empty_activation_sets"].get<std::size_t>());
  std::printf("activatable nodes: %zu\n", doc["activatable"].get<std::size_t>());
  return kOk;
}

int run_evaluate(const DatasetArgs& data, const std::string& seeds, const hs_eval_options& opts) {
  const auto ds = data.load();
  double accuracy = 0.0;
  std::size_t evaluated = 0;
  check(hs_evaluate_seed_file(ds.get(), seeds.c_str(), &opts, &accuracy, &evaluated));
  std::printf("accuracy: %.6f\nevaluated: %zu\n", accuracy, evaluated);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperseed: budgeted seed selection on hypergraphs"};
  app.set_version_flag("--version", std::string(hs_version()));
  app.require_subcommand(1);

  DatasetArgs select_data, stats_data, eval_data;
  ConfigArgs select_cfg, stats_cfg;
  bool naive = false;
  bool stats_json = false;
  std::string output, seeds, eval_backend = "hoi";
  hs_eval_options eval_opts;
  hs_eval_options_init(&eval_opts);

  auto* select = app.add_subcommand("select", "select a seed set");
  select_data.attach(select);
  select_cfg.attach(select, true);
  select->add_flag("--naive", naive, "score every candidate each round (reference path)");
  select->add_option("--output,-o", output, "write the result document here");

  auto* stats = app.add_subcommand("stats", "print dataset and influence statistics");
  stats_data.attach(stats);
  stats_cfg.attach(stats, false);
  stats->add_flag("--json", stats_json, "print the raw JSON document");

  auto* evaluate = app.add_subcommand("evaluate", "label-propagation accuracy of a seed set");
  eval_data.attach(evaluate);
  evaluate->add_option("--seeds", seeds, "result document or whitespace-separated id list")->required();
  evaluate->add_option("--alpha", eval_opts.alpha, "label propagation mixing coefficient")->capture_default_str();
  evaluate->add_option("--lp-steps", eval_opts.steps, "label propagation iterations")->capture_default_str();
  evaluate->add_option("--backend", eval_backend, "propagation backend: hoi or hgnn")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*select) return run_select(select_data, select_cfg, naive, output);
    if (*stats) return run_stats(stats_data, stats_cfg, stats_json);
    check(hs_parse_backend(eval_backend.c_str(), &eval_opts.backend));
    return run_evaluate(eval_data, seeds, eval_opts);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
}
