// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/evaluate.hpp"

#include <algorithm>
#include <string>

#include "hyperseed/error.hpp"

namespace hyperseed {

std::vector<int> label_propagation(const Hypergraph& g, std::span<const int> labels, std::span<const NodeId> seeds,
                                   const LabelPropagationOptions& opts) {
  const std::size_t n = g.num_nodes();
  require(labels.size() == n, ErrorCode::kData, "label vector does not cover every node");
  require(!seeds.empty(), ErrorCode::kInvalidArgument, "no seeds to propagate from");
  require(opts.alpha >= 0.0 && opts.alpha <= 1.0, ErrorCode::kConfig, "alpha must lie in [0, 1]");
  const int classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  const auto c = static_cast<std::size_t>(classes);

  FeatureMatrix y0(n, c);
  std::vector<char> is_seed(n, 0);
  for (NodeId s : seeds) {
    require(s < n, ErrorCode::kInvalidArgument, "seed " + std::to_string(s) + " out of range");
    is_seed[s] = 1;
    y0(s, static_cast<std::size_t>(labels[s])) = 1.0;
  }

  const TransitionMatrix t = build_transition(g, opts.backend);
  FeatureMatrix y = y0;
  for (std::size_t step = 0; step < opts.steps; ++step) {
    FeatureMatrix next = t.entries.multiply(y);
    for (std::size_t v = 0; v < n; ++v) {
      auto row = next.row(v);
      auto base = y0.row(v);
      for (std::size_t k = 0; k < c; ++k) row[k] = is_seed[v] ? base[k] : opts.alpha * row[k] + (1.0 - opts.alpha) * base[k];
    }
    y = std::move(next);
  }

  std::vector<int> predicted(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto row = y.row(v);
    predicted[v] = static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
  }
  return predicted;
}

EvaluationReport evaluate_seeds(const Hypergraph& g, std::span<const int> labels, std::span<const NodeId> seeds,
                                std::span<const NodeId> test_nodes, const LabelPropagationOptions& opts) {
  const auto predicted = label_propagation(g, labels, seeds, opts);
  std::vector<NodeId> targets(test_nodes.begin(), test_nodes.end());
  if (targets.empty()) {
    std::vector<char> is_seed(g.num_nodes(), 0);
    for (NodeId s : seeds) is_seed[s] = 1;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
      if (!is_seed[v]) targets.push_back(static_cast<NodeId>(v));
    }
    if (targets.empty()) {
      for (std::size_t v = 0; v < g.num_nodes(); ++v) targets.push_back(static_cast<NodeId>(v));
    }
  }
  EvaluationReport report;
  for (NodeId v : targets) {
    require(v < g.num_nodes(), ErrorCode::kInvalidArgument, "test node out of range");
    report.correct += predicted[v] == labels[v];
  }
  report.evaluated = targets.size();
  report.accuracy = static_cast<double>(report.correct) / static_cast<double>(report.evaluated);
  return report;
}

}  // namespace hyperseed
