// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Random instance generators shared by the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "../oracle/oracle.hpp"
#include "hyperseed/hypergraph.hpp"
#include "hyperseed/matrix.hpp"
#include "hyperseed/objective.hpp"
#include "hyperseed/selector.hpp"

namespace hyperseed::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

struct Instance {
  std::size_t n = 0;
  oracle::EdgeLists edges;
  Hypergraph graph;
  FeatureMatrix features;
};

/// Edges of size 1..max_edge with members drawn uniformly (duplicates allowed,
/// collapsed by the builder); features i.i.d. N(0, 1).
inline Instance random_instance(Rng& rng, std::size_t n, std::size_t m, std::size_t d, std::size_t max_edge = 6) {
  Instance inst;
  inst.n = n;
  std::normal_distribution<double> gauss;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t size = uniform_size(rng, 1, max_edge);
    std::vector<NodeId> members(size);
    for (auto& v : members) v = static_cast<NodeId>(uniform_size(rng, 0, n - 1));
    inst.edges.push_back(members);
  }
  inst.graph = Hypergraph::build(n, inst.edges);
  inst.features = FeatureMatrix(n, d);
  for (double& x : inst.features.data()) x = gauss(rng);
  return inst;
}

/// A threshold near quantile q of `values` that sits in the middle of a gap
/// between two distinct values (relative gap > 1e-6), so that two independent
/// evaluations of the values cannot fall on different sides of it.
inline double gap_threshold(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() < 2) return values.empty() ? 0.5 : values.front() * 0.5;
  auto start = static_cast<std::size_t>(q * static_cast<double>(values.size() - 1));
  start = std::min(start, values.size() - 2);
  for (std::size_t off = 0; off < values.size(); ++off) {
    for (std::size_t i : {start + off, start >= off ? start - off : values.size()}) {
      if (i + 1 >= values.size()) continue;
      const double lo = values[i], hi = values[i + 1];
      if (hi - lo > 1e-6 * std::max(1.0, std::abs(hi))) return 0.5 * (lo + hi);
    }
  }
  return values.back() * 2.0 + 1.0;
}

/// Everything needed to compare production against the oracle on one instance.
struct OracleCase {
  SelectionConfig config;
  oracle::ScratchInputs scratch;
};

/// Random knobs; theta and radius placed in gaps of the oracle's values.
inline OracleCase random_oracle_case(Rng& rng, const Instance& inst, Backend backend = Backend::kHoi) {
  OracleCase oc;
  SelectionConfig& cfg = oc.config;
  cfg.k = uniform_size(rng, 1, 3);
  cfg.alpha = uniform_real(rng, 0.2, 0.9);
  cfg.beta = uniform_real(rng, 0.1, 0.9);
  cfg.gamma = uniform_real(rng, 0.0, 1.0);
  cfg.backend = backend;
  cfg.threads = 1;

  const oracle::Dense t = backend == Backend::kHoi ? oracle::hoi_transition(inst.n, inst.edges)
                                                   : oracle::hgnn_transition(inst.n, inst.edges);
  const oracle::Dense influence =
      oracle::normalized_influence(oracle::dense_influence_matrix(t, cfg.k, cfg.alpha));
  std::vector<double> values;
  for (const auto& row : influence) {
    for (double v : row) {
      if (v > 0.0) values.push_back(v);
    }
  }
  cfg.theta = gap_threshold(values, uniform_real(rng, 0.3, 0.9));

  FeatureMatrix xk = oracle::dense_propagate(t, inst.features, cfg.k, cfg.alpha);
  std::vector<double> dists;
  for (std::size_t a = 0; a < inst.n; ++a) {
    for (std::size_t b = a + 1; b < inst.n; ++b) {
      double acc = 0.0;
      for (std::size_t c = 0; c < xk.cols(); ++c) acc += (xk(a, c) - xk(b, c)) * (xk(a, c) - xk(b, c));
      dists.push_back(std::sqrt(acc));
    }
  }
  cfg.radius = gap_threshold(dists, uniform_real(rng, 0.0, 0.3));

  oc.scratch.n = inst.n;
  oc.scratch.edges = inst.edges;
  oc.scratch.influence = influence;
  oc.scratch.features = std::move(xk);
  oc.scratch.theta = *cfg.theta;
  oc.scratch.radius = *cfg.radius;
  oc.scratch.beta = cfg.beta;
  oc.scratch.gamma = cfg.gamma;
  return oc;
}

/// Production state after adding `seeds` in order.
inline CoverageState state_for(const InfluenceModel& model, const std::vector<NodeId>& seeds) {
  CoverageState state(model.graph().num_nodes());
  GainScratch scratch(model.graph().num_nodes());
  for (NodeId v : seeds) incremental_add(state, v, model.context(), scratch);
  return state;
}

/// Random subset of [0, n) with each node kept with probability p.
inline std::vector<NodeId> random_subset(Rng& rng, std::size_t n, double p) {
  std::vector<NodeId> out;
  std::bernoulli_distribution keep(p);
  for (std::size_t v = 0; v < n; ++v) {
    if (keep(rng)) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

}  // namespace hyperseed::testing
