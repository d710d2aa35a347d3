// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/objective.hpp"

#include <algorithm>
#include <string>

#include "hyperseed/error.hpp"
#include "hyperseed/parallel.hpp"

namespace hyperseed {

void check_beta(double beta) {
  require(beta > 0.0 && beta < 1.0, ErrorCode::kConfig, "beta must lie in (0, 1), got " + std::to_string(beta));
}

void check_gamma(double gamma) {
  require(gamma >= 0.0 && gamma <= 1.0, ErrorCode::kConfig,
          "gamma must lie in [0, 1], got " + std::to_string(gamma));
}

std::span<const NodeId> ActivationSets::of(NodeId u) const {
  if (!has_set(u)) return {};
  const auto s = static_cast<std::size_t>(slot_[u]);
  return {members_.data() + offsets_[s], members_.data() + offsets_[s + 1]};
}

ActivationSets build_activation_sets(const InfluenceColumns& ic, double theta) {
  require(theta >= 0.0, ErrorCode::kConfig, "theta must be >= 0, got " + std::to_string(theta));
  ActivationSets acts;
  acts.theta_ = theta;
  acts.slot_.assign(ic.num_nodes(), -1);
  auto row_sums = ic.row_sums();
  long long slot = 0;
  for (NodeId u : ic.candidates()) {
    acts.slot_[u] = slot++;
    auto rows = ic.column_rows(u);
    auto values = ic.column_values(u);
    for (std::size_t p = 0; p < rows.size(); ++p) {
      const double s = row_sums[rows[p]];
      if (s > 0.0 && values[p] / s > theta) acts.members_.push_back(rows[p]);
    }
    acts.offsets_.push_back(acts.members_.size());
  }
  return acts;
}

bool FeatureBalls::contains(NodeId u, NodeId v) const {
  const Ball& b = balls_[u];
  if (b.dense) return (b.bits[v / 64] >> (v % 64)) & 1u;
  return std::binary_search(b.list.begin(), b.list.end(), v);
}

std::vector<NodeId> FeatureBalls::members(NodeId u) const {
  std::vector<NodeId> out;
  out.reserve(balls_[u].size);
  for_each_member(u, [&](NodeId v) { out.push_back(v); });
  return out;
}

FeatureBalls build_feature_balls(const FeatureMatrix& features, double radius, double radius_sq,
                                 std::span<const char> mask, unsigned threads) {
  require(radius >= 0.0 && radius_sq >= 0.0, ErrorCode::kConfig,
          "ball radius must be >= 0, got " + std::to_string(radius));
  const std::size_t n = features.rows();
  const std::size_t d = features.cols();
  require(mask.empty() || mask.size() == n, ErrorCode::kInvalidArgument, "ball mask size mismatch");

  FeatureBalls fb;
  fb.radius_ = radius;
  fb.balls_.resize(n);

  std::vector<NodeId> todo;
  for (std::size_t u = 0; u < n; ++u) {
    if (mask.empty() || mask[u]) todo.push_back(static_cast<NodeId>(u));
  }

  // Column-major copy so the inner loop runs contiguously over nodes.
  std::vector<double> by_dim(n * d);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < d; ++c) by_dim[c * n + v] = features(v, c);
  }

  const std::size_t words = (n + 63) / 64;
  const unsigned workers = threads == 0 ? default_threads() : threads;
  std::vector<std::vector<double>> dist(workers);
  parallel_for(todo.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& acc = dist[w];
    acc.resize(n);
    for (std::size_t t = begin; t < end; ++t) {
      const NodeId u = todo[t];
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t c = 0; c < d; ++c) {
        const double xu = by_dim[c * n + u];
        const double* col = by_dim.data() + c * n;
        for (std::size_t v = 0; v < n; ++v) {
          const double diff = col[v] - xu;
          acc[v] += diff * diff;
        }
      }
      std::size_t size = 0;
      for (std::size_t v = 0; v < n; ++v) size += acc[v] <= radius_sq;

      auto& ball = fb.balls_[u];
      ball.built = true;
      ball.size = size;
      ball.dense = size * 32 > n;
      if (ball.dense) {
        ball.bits.assign(words, 0);
        for (std::size_t v = 0; v < n; ++v) {
          if (acc[v] <= radius_sq) ball.bits[v / 64] |= std::uint64_t{1} << (v % 64);
        }
      } else {
        ball.list.reserve(size);
        for (std::size_t v = 0; v < n; ++v) {
          if (acc[v] <= radius_sq) ball.list.push_back(static_cast<NodeId>(v));
        }
      }
    }
  });
  return fb;
}

GainScratch::GainScratch(std::size_t n) : pending_(n), shared_(n, 0) {}

CoverageState::CoverageState(std::size_t n)
    : covered_(n), activated_(n), is_seed_(n, 0), evasion_(n, 1.0) {}

namespace {

// Counts members of G_j that are neither covered nor already pending, and marks them pending.
std::size_t claim_ball(const FeatureBalls& balls, NodeId j, const DynamicBitset& covered, DynamicBitset& pending,
                       std::vector<std::size_t>& touched_words) {
  require(balls.has_ball(j), ErrorCode::kInvalidArgument,
          "node " + std::to_string(j) + " is activatable but has no feature ball");
  std::size_t fresh = 0;
  auto cov = covered.words();
  auto pend = pending.words();
  if (balls.is_dense(j)) {
    auto bits = balls.dense_words(j);
    for (std::size_t w = 0; w < bits.size(); ++w) {
      const auto x = bits[w] & ~cov[w] & ~pend[w];
      if (x) {
        fresh += static_cast<std::size_t>(std::popcount(x));
        pend[w] |= x;
        touched_words.push_back(w);
      }
    }
  } else {
    for (NodeId v : balls.sparse_members(j)) {
      const std::size_t w = v / 64;
      const auto bit = std::uint64_t{1} << (v % 64);
      if ((cov[w] | pend[w]) & bit) continue;
      pend[w] |= bit;
      touched_words.push_back(w);
      ++fresh;
    }
  }
  return fresh;
}

}  // namespace

Gain marginal_gain(const CoverageState& state, NodeId v, const ObjectiveContext& ctx, GainScratch& scratch) {
  const Hypergraph& g = *ctx.graph;
  require(v < state.num_nodes(), ErrorCode::kInvalidArgument, "node id " + std::to_string(v) + " out of range");
  require(!state.is_seed(v), ErrorCode::kInvalidArgument, "node " + std::to_string(v) + " is already a seed");

  Gain gain;
  scratch.touched_words_.clear();
  for (NodeId j : ctx.activation->of(v)) {
    if (state.activated_.test(j)) continue;
    ++gain.activated;
    gain.moi += claim_ball(*ctx.balls, j, state.covered_, scratch.pending_, scratch.touched_words_);
  }
  auto pend = scratch.pending_.words();
  for (std::size_t w : scratch.touched_words_) pend[w] = 0;

  // v leaves the neighbour sum (or arrives from outside it) and joins |S|: +P_v.
  // Each non-seed neighbour w gains P_w * beta * n_vw / n_v.
  double edv_gain = state.evasion_[v];
  const std::size_t nv = g.node_degree(v);
  if (nv > 0) {
    scratch.touched_nodes_.clear();
    for (EdgeId e : g.edges_of(v)) {
      for (NodeId w : g.nodes_of(e)) {
        if (w == v || state.is_seed_[w]) continue;
        if (scratch.shared_[w]++ == 0) scratch.touched_nodes_.push_back(w);
      }
    }
    double spread = 0.0;
    for (NodeId w : scratch.touched_nodes_) {
      spread += state.evasion_[w] * (ctx.beta * scratch.shared_[w] / static_cast<double>(nv));
      scratch.shared_[w] = 0;
    }
    edv_gain += spread;
  }
  gain.edv = edv_gain;
  return gain;
}

void incremental_add(CoverageState& state, NodeId v, const ObjectiveContext& ctx, GainScratch& scratch) {
  const Gain gain = marginal_gain(state, v, ctx, scratch);
  const Hypergraph& g = *ctx.graph;

  for (NodeId j : ctx.activation->of(v)) {
    if (state.activated_.test(j)) continue;
    state.activated_.set(j);
    ctx.balls->for_each_member(j, [&](NodeId u) { state.covered_.set(u); });
  }
  state.sigma_ += gain.activated;
  state.moi_ += gain.moi;

  const std::size_t nv = g.node_degree(v);
  if (nv > 0) {
    scratch.touched_nodes_.clear();
    for (EdgeId e : g.edges_of(v)) {
      for (NodeId w : g.nodes_of(e)) {
        if (w == v || state.is_seed_[w]) continue;
        if (scratch.shared_[w]++ == 0) scratch.touched_nodes_.push_back(w);
      }
    }
    for (NodeId w : scratch.touched_nodes_) {
      state.evasion_[w] *= 1.0 - ctx.beta * scratch.shared_[w] / static_cast<double>(nv);
      scratch.shared_[w] = 0;
    }
    scratch.touched_nodes_.clear();
  }
  state.edv_ += gain.edv;
  state.is_seed_[v] = 1;
  state.seeds_.push_back(v);
}

void incremental_add(CoverageState& state, NodeId v, const ObjectiveContext& ctx) {
  GainScratch scratch(state.num_nodes());
  incremental_add(state, v, ctx, scratch);
}

double edv(const Hypergraph& g, std::span<const NodeId> seeds, double beta) {
  check_beta(beta);
  const std::size_t n = g.num_nodes();
  std::vector<char> is_seed(n, 0);
  std::size_t count = 0;
  for (NodeId s : seeds) {
    require(s < n, ErrorCode::kInvalidArgument, "seed " + std::to_string(s) + " out of range");
    if (!is_seed[s]) ++count;
    is_seed[s] = 1;
  }
  double total = static_cast<double>(count);
  std::vector<std::uint32_t> shared(n, 0);
  std::vector<NodeId> seed_neighbors;
  for (NodeId v : g.neighborhood_of_set(seeds)) {
    seed_neighbors.clear();
    for (EdgeId e : g.edges_of(v)) {
      for (NodeId u : g.nodes_of(e)) {
        if (!is_seed[u]) continue;
        if (shared[u]++ == 0) seed_neighbors.push_back(u);
      }
    }
    double escape = 1.0;
    for (NodeId u : seed_neighbors) {
      escape *= 1.0 - beta * shared[u] / static_cast<double>(g.node_degree(u));
      shared[u] = 0;
    }
    total += 1.0 - escape;
  }
  return total;
}

double unified_objective(double moi_val, double edv_val, double moi_hat, double edv_hat, double gamma) {
  check_gamma(gamma);
  require(moi_hat > 0.0, ErrorCode::kConfig,
          "MoI normaliser is zero: no node can be activated (theta too high or empty hypergraph)");
  require(edv_hat > 0.0, ErrorCode::kConfig, "EDV normaliser is zero: empty hypergraph");
  return gamma * moi_val / moi_hat + (1.0 - gamma) * edv_val / edv_hat;
}

}  // namespace hyperseed
