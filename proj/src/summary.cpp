// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/summary.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperseed/error.hpp"

namespace hyperseed {

Distribution distribution(std::span<const std::size_t> values) {
  Distribution d;
  if (values.empty()) return d;
  d.min = *std::min_element(values.begin(), values.end());
  d.max = *std::max_element(values.begin(), values.end());
  double total = 0.0;
  for (std::size_t v : values) {
    total += static_cast<double>(v);
    ++d.histogram[v];
  }
  d.mean = total / static_cast<double>(values.size());
  return d;
}

DatasetSummary summarize(const Hypergraph& g, const FeatureMatrix& features, const SelectionConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  require(features.rows() == n, ErrorCode::kData, "feature rows do not match node count");
  DatasetSummary s;
  s.num_nodes = n;
  s.num_edges = g.num_edges();
  s.num_incidences = g.num_incidences();
  s.feature_dim = features.cols();

  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.node_degree(static_cast<NodeId>(v));
    s.isolated_nodes += deg[v] == 0;
  }
  s.node_degree = distribution(deg);
  std::vector<std::size_t> sizes(g.num_edges());
  for (std::size_t e = 0; e < sizes.size(); ++e) sizes[e] = g.edge_degree(static_cast<EdgeId>(e));
  s.edge_degree = distribution(sizes);

  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  std::vector<NodeId> pool = cfg.candidate_pool.empty() ? all : cfg.candidate_pool;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  require(pool.empty() || pool.back() < n, ErrorCode::kConfig, "candidate pool references unknown nodes");
  s.pool_size = pool.size();

  const TransitionMatrix t = build_transition(g, cfg.backend);
  const PropagationState ps = propagate(t, features, cfg.k, cfg.alpha);
  const InfluenceColumns ic = influence_columns(t, all, cfg.k, cfg.alpha, cfg.threads);
  s.params.theta_auto = !cfg.theta.has_value();
  s.params.theta = cfg.theta ? *cfg.theta : resolve_theta(ic, pool, cfg.theta_quantile);
  const ActivationSets acts = build_activation_sets(ic, s.params.theta);
  s.params.radius_auto = !cfg.radius.has_value();
  if (cfg.radius) {
    s.params.radius = *cfg.radius;
    s.params.radius_sq = *cfg.radius * *cfg.radius;
  } else {
    std::tie(s.params.radius, s.params.radius_sq) =
        resolve_radius(ps.propagated_features, cfg.radius_quantile, cfg.radius_sample_pairs, cfg.seed);
  }

  std::vector<std::size_t> act_sizes;
  for (NodeId u : pool) {
    act_sizes.push_back(acts.of(u).size());
    s.empty_activation_sets += acts.of(u).empty();
  }
  s.activation_size = distribution(act_sizes);
  std::vector<char> activatable(n, 0);
  for (NodeId u : all) {
    for (NodeId j : acts.of(u)) activatable[j] = 1;
  }
  s.activatable = static_cast<std::size_t>(std::count(activatable.begin(), activatable.end(), 1));
  return s;
}

std::string summary_to_json(const DatasetSummary& s) {
  using nlohmann::json;
  auto dist = [](const Distribution& d) {
    json hist = json::array();
    for (auto [value, count] : d.histogram) hist.push_back({value, count});
    return json{{"min", d.min}, {"max", d.max}, {"mean", d.mean}, {"histogram", hist}};
  };
  json doc{
      {"num_nodes", s.num_nodes},
      {"num_edges", s.num_edges},
      {"num_incidences", s.num_incidences},
      {"feature_dim", s.feature_dim},
      {"isolated_nodes", s.isolated_nodes},
      {"pool_size", s.pool_size},
      {"node_degree", dist(s.node_degree)},
      {"edge_degree", dist(s.edge_degree)},
      {"theta", s.params.theta},
      {"theta_auto", s.params.theta_auto},
      {"radius", s.params.radius},
      {"radius_auto", s.params.radius_auto},
      {"activation_size", dist(s.activation_size)},
      {"empty_activation_sets", s.empty_activation_sets},
      {"activatable", s.activatable},
  };
  return doc.dump(2) + "\n";
}

}  // namespace hyperseed
