// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperseed/hypergraph.hpp"
#include "hyperseed/matrix.hpp"
#include "hyperseed/objective.hpp"
#include "hyperseed/propagation.hpp"

namespace hyperseed {

struct SelectionConfig {
  std::size_t budget = 1;
  std::size_t k = 2;
  double alpha = 0.5;
  std::optional<double> theta;  // unset: quantile of the pool's non-zero normalised influences
  double theta_quantile = 0.95;
  std::optional<double> radius;  // unset: quantile of sampled pairwise distances of X^(k)
  double radius_quantile = 0.05;
  std::size_t radius_sample_pairs = 100000;
  double beta = 0.5;
  double gamma = 0.5;
  Backend backend = Backend::kHoi;
  std::vector<NodeId> candidate_pool;  // empty: every node
  unsigned threads = 0;                // 0: hardware concurrency
  std::uint64_t seed = 0;

  /// Range checks on every scalar knob (budget is checked against the pool later).
  void validate() const;
};

struct ResolvedParams {
  double theta = 0.0;
  double radius = 0.0;
  double radius_sq = 0.0;
  bool theta_auto = false;
  bool radius_auto = false;
};

/// Lower empirical quantile: the element of rank floor(q * (N - 1)) in sorted order.
double lower_quantile(std::vector<double> values, double q);

/// theta from the non-zero normalised influences of the pool's columns.
double resolve_theta(const InfluenceColumns& ic, std::span<const NodeId> pool, double q);

/// (radius, radius_sq) from squared distances of sampled node pairs. All
/// pairs are used when there are no more than `sample_pairs` of them.
std::pair<double, double> resolve_radius(const FeatureMatrix& features, double q, std::size_t sample_pairs,
                                         std::uint64_t seed);

/// MoI(V) and EDV(V). Rejects a zero MoI(V).
std::pair<double, double> normalizers(const Hypergraph& g, const ActivationSets& acts, const FeatureBalls& balls,
                                      double beta);

/// Everything the greedy loop reads: propagated features, influence columns
/// for all nodes, activation sets, feature balls and normalisers. Keeps a
/// pointer to the hypergraph, which must outlive the model.
class InfluenceModel {
 public:
  static InfluenceModel build(const Hypergraph& g, const FeatureMatrix& features, const SelectionConfig& cfg);

  const Hypergraph& graph() const { return *graph_; }
  const TransitionMatrix& transition() const { return transition_; }
  const PropagationState& propagation() const { return propagation_; }
  const InfluenceColumns& columns() const { return columns_; }
  const ActivationSets& activation() const { return activation_; }
  const FeatureBalls& balls() const { return balls_; }
  const ResolvedParams& params() const { return params_; }
  std::span<const NodeId> pool() const { return pool_; }
  double moi_hat() const { return moi_hat_; }
  double edv_hat() const { return edv_hat_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  ObjectiveContext context() const { return {graph_, &activation_, &balls_, beta_}; }

  /// F increment for a component gain.
  double objective_gain(const Gain& g) const {
    return gamma_ * static_cast<double>(g.moi) / moi_hat_ + (1.0 - gamma_) * g.edv / edv_hat_;
  }
  double objective(const CoverageState& s) const {
    return unified_objective(static_cast<double>(s.moi_value()), s.edv_value(), moi_hat_, edv_hat_, gamma_);
  }

 private:
  const Hypergraph* graph_ = nullptr;
  TransitionMatrix transition_;
  PropagationState propagation_;
  InfluenceColumns columns_;
  ActivationSets activation_;
  FeatureBalls balls_;
  ResolvedParams params_;
  std::vector<NodeId> pool_;
  double moi_hat_ = 0.0;
  double edv_hat_ = 0.0;
  double beta_ = 0.5;
  double gamma_ = 0.5;
};

struct TraceStep {
  std::size_t moi = 0;
  double edv = 0.0;
  double objective = 0.0;
};

struct SelectionResult {
  std::vector<NodeId> seeds;  // selection order
  std::vector<double> gains;  // F increment at each step
  std::vector<TraceStep> trace;
  ResolvedParams params;
  double moi_hat = 0.0;
  double edv_hat = 0.0;
  std::size_t evaluations = 0;  // marginal-gain evaluations performed
};

/// Greedy: every round scores every remaining candidate and takes the
/// largest F increment, lowest node id on ties.
SelectionResult select_naive(const InfluenceModel& model, std::size_t budget, unsigned threads = 1);

/// Lazy greedy with stale upper bounds. Same seeds as select_naive.
SelectionResult select_lazy(const InfluenceModel& model, std::size_t budget, unsigned threads = 1);

}  // namespace hyperseed
