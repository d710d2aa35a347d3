// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hyperseed/bitset.hpp"
#include "hyperseed/hypergraph.hpp"
#include "hyperseed/matrix.hpp"
#include "hyperseed/propagation.hpp"

namespace hyperseed {

/// A_u = {j : I_j(u, k) > theta} for every node with an influence column.
class ActivationSets {
 public:
  double theta() const { return theta_; }
  std::size_t num_nodes() const { return slot_.size(); }
  bool has_set(NodeId u) const { return u < slot_.size() && slot_[u] >= 0; }
  /// Sorted members of A_u; empty for nodes without a column.
  std::span<const NodeId> of(NodeId u) const;

 private:
  friend ActivationSets build_activation_sets(const InfluenceColumns&, double);

  double theta_ = 0.0;
  std::vector<long long> slot_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> members_;
};

/// Strict threshold on normalised influence. theta must be >= 0.
ActivationSets build_activation_sets(const InfluenceColumns& ic, double theta);

/// Feature-space balls G_u = {v : ||X_u - X_v||_2 <= r} on propagated
/// features. Only nodes selected by the build mask get a ball. Small balls are
/// kept as sorted id lists, large ones as bitsets.
class FeatureBalls {
 public:
  static constexpr double kCoverAll = std::numeric_limits<double>::infinity();

  std::size_t num_nodes() const { return balls_.size(); }
  double radius() const { return radius_; }
  bool has_ball(NodeId u) const { return balls_[u].built; }
  std::size_t ball_size(NodeId u) const { return balls_[u].size; }
  bool contains(NodeId u, NodeId v) const;
  std::vector<NodeId> members(NodeId u) const;

  template <class Fn>
  void for_each_member(NodeId u, Fn&& fn) const {
    const Ball& b = balls_[u];
    if (b.dense) {
      for (std::size_t w = 0; w < b.bits.size(); ++w) {
        auto bits = b.bits[w];
        while (bits) {
          fn(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
          bits &= bits - 1;
        }
      }
    } else {
      for (NodeId v : b.list) fn(v);
    }
  }

  /// Bitset words of G_u when stored densely, else empty.
  std::span<const std::uint64_t> dense_words(NodeId u) const { return balls_[u].bits; }
  std::span<const NodeId> sparse_members(NodeId u) const { return balls_[u].list; }
  bool is_dense(NodeId u) const { return balls_[u].dense; }

 private:
  friend FeatureBalls build_feature_balls(const FeatureMatrix&, double, double, std::span<const char>, unsigned);

  struct Ball {
    bool built = false;
    bool dense = false;
    std::size_t size = 0;
    std::vector<NodeId> list;
    std::vector<std::uint64_t> bits;
  };
  double radius_ = 0.0;
  std::vector<Ball> balls_;
};

/// Builds balls on `features` (normally X^(k)). Membership is decided by the
/// squared distance against `radius_sq`; `radius` is recorded for reporting.
/// An empty mask builds every ball.
FeatureBalls build_feature_balls(const FeatureMatrix& features, double radius, double radius_sq,
                                 std::span<const char> mask = {}, unsigned threads = 1);

inline FeatureBalls build_feature_balls(const FeatureMatrix& features, double radius,
                                        std::span<const char> mask = {}, unsigned threads = 1) {
  return build_feature_balls(features, radius, radius * radius, mask, threads);
}

/// Read-only inputs of the objective.
struct ObjectiveContext {
  const Hypergraph* graph = nullptr;
  const ActivationSets* activation = nullptr;
  const FeatureBalls* balls = nullptr;
  double beta = 0.5;
};

/// Increments of the objective components from adding one node.
struct Gain {
  std::size_t activated = 0;  ///< |sigma(S + v)| - |sigma(S)|
  std::size_t moi = 0;
  double edv = 0.0;
};

class CoverageState;

/// Per-worker scratch used by marginal_gain. Reusable across calls.
class GainScratch {
 public:
  explicit GainScratch(std::size_t n = 0);

 private:
  friend Gain marginal_gain(const CoverageState&, NodeId, const ObjectiveContext&, GainScratch&);
  friend void incremental_add(CoverageState&, NodeId, const ObjectiveContext&, GainScratch&);

  DynamicBitset pending_;
  std::vector<std::size_t> touched_words_;
  std::vector<std::uint32_t> shared_;
  std::vector<NodeId> touched_nodes_;
};

/// Incremental state of sigma(S), MoI(S) and EDV(S) for a growing seed set.
class CoverageState {
 public:
  explicit CoverageState(std::size_t n);

  std::size_t num_nodes() const { return is_seed_.size(); }
  const DynamicBitset& covered() const { return covered_; }
  const DynamicBitset& activated() const { return activated_; }
  const std::vector<NodeId>& seeds() const { return seeds_; }
  bool is_seed(NodeId v) const { return is_seed_[v] != 0; }
  /// Probability that v escapes every seed neighbour; 1 with no seed neighbour.
  double evasion(NodeId v) const { return evasion_[v]; }

  std::size_t moi_value() const { return moi_; }
  std::size_t sigma_size() const { return sigma_; }
  double edv_value() const { return edv_; }

 private:
  friend void incremental_add(CoverageState&, NodeId, const ObjectiveContext&, GainScratch&);
  friend Gain marginal_gain(const CoverageState&, NodeId, const ObjectiveContext&, GainScratch&);

  DynamicBitset covered_;
  DynamicBitset activated_;
  std::vector<NodeId> seeds_;
  std::vector<char> is_seed_;
  std::vector<double> evasion_;
  std::size_t moi_ = 0;
  std::size_t sigma_ = 0;
  double edv_ = 0.0;
};

/// F(S + v) - F(S) components without touching the state. v must not be a seed.
Gain marginal_gain(const CoverageState& state, NodeId v, const ObjectiveContext& ctx, GainScratch& scratch);

/// Adds v to the seed set and updates every component.
void incremental_add(CoverageState& state, NodeId v, const ObjectiveContext& ctx, GainScratch& scratch);
void incremental_add(CoverageState& state, NodeId v, const ObjectiveContext& ctx);

/// MoI of the current state (popcount of the covered set).
inline std::size_t moi(const CoverageState& state) { return state.moi_value(); }

/// Direct evaluation of the expected diffusion value of `seeds`. beta in (0, 1).
double edv(const Hypergraph& g, std::span<const NodeId> seeds, double beta);

/// gamma * moi / moi_hat + (1 - gamma) * edv / edv_hat.
double unified_objective(double moi_val, double edv_val, double moi_hat, double edv_hat, double gamma);

void check_beta(double beta);
void check_gamma(double gamma);

}  // namespace hyperseed
