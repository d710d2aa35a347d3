// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperseed/hypergraph.hpp"
#include "hyperseed/propagation.hpp"

namespace hyperseed {

struct LabelPropagationOptions {
  double alpha = 0.9;
  std::size_t steps = 10;
  Backend backend = Backend::kHoi;
};

/// Spreads one-hot seed labels with Y <- alpha T Y + (1 - alpha) Y0, keeping
/// seed rows clamped, and predicts the arg-max class (lowest class on ties).
std::vector<int> label_propagation(const Hypergraph& g, std::span<const int> labels, std::span<const NodeId> seeds,
                                   const LabelPropagationOptions& opts);

struct EvaluationReport {
  double accuracy = 0.0;
  std::size_t correct = 0;
  std::size_t evaluated = 0;
};

/// Accuracy of label propagation from `seeds` on `test_nodes`; when that is
/// empty, on the non-seed nodes; when every node is a seed, on all nodes.
EvaluationReport evaluate_seeds(const Hypergraph& g, std::span<const int> labels, std::span<const NodeId> seeds,
                                std::span<const NodeId> test_nodes, const LabelPropagationOptions& opts);

}  // namespace hyperseed
