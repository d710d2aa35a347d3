// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "hyperseed/hypergraph.hpp"
#include "hyperseed/matrix.hpp"
#include "hyperseed/selector.hpp"

namespace hyperseed {

struct Distribution {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
  std::map<std::size_t, std::size_t> histogram;  // value -> count
};

Distribution distribution(std::span<const std::size_t> values);

struct DatasetSummary {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::size_t num_incidences = 0;
  std::size_t feature_dim = 0;
  std::size_t isolated_nodes = 0;
  std::size_t pool_size = 0;
  Distribution node_degree;
  Distribution edge_degree;
  ResolvedParams params;
  Distribution activation_size;  // |A_u| over the candidate pool
  std::size_t empty_activation_sets = 0;
  std::size_t activatable = 0;  // |sigma(V)|
};

/// Structure statistics plus the resolved theta / radius and activation-set
/// sizes the selection would use. Feature balls are not built.
DatasetSummary summarize(const Hypergraph& g, const FeatureMatrix& features, const SelectionConfig& cfg);

std::string summary_to_json(const DatasetSummary& s);

}  // namespace hyperseed
