// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/selector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include <spdlog/spdlog.h>

#include "hyperseed/error.hpp"
#include "hyperseed/parallel.hpp"

namespace hyperseed {

void SelectionConfig::validate() const {
  require(alpha >= 0.0 && alpha <= 1.0, ErrorCode::kConfig, "alpha must lie in [0, 1]");
  check_beta(beta);
  check_gamma(gamma);
  require(!theta || *theta >= 0.0, ErrorCode::kConfig, "theta must be >= 0");
  require(!radius || *radius >= 0.0, ErrorCode::kConfig, "radius must be >= 0");
  require(theta_quantile >= 0.0 && theta_quantile <= 1.0, ErrorCode::kConfig, "theta quantile must lie in [0, 1]");
  require(radius_quantile >= 0.0 && radius_quantile <= 1.0, ErrorCode::kConfig,
          "radius quantile must lie in [0, 1]");
  require(radius_sample_pairs >= 1, ErrorCode::kConfig, "radius sample size must be at least 1");
  require(budget >= 1, ErrorCode::kConfig, "budget must be at least 1");
}

double lower_quantile(std::vector<double> values, double q) {
  require(!values.empty(), ErrorCode::kInvalidArgument, "quantile of an empty sample");
  require(q >= 0.0 && q <= 1.0, ErrorCode::kInvalidArgument, "quantile must lie in [0, 1]");
  const auto rank = static_cast<std::size_t>(std::floor(q * static_cast<double>(values.size() - 1)));
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rank), values.end());
  return values[rank];
}

double resolve_theta(const InfluenceColumns& ic, std::span<const NodeId> pool, double q) {
  std::vector<double> values;
  auto s = ic.row_sums();
  for (NodeId u : pool) {
    auto rows = ic.column_rows(u);
    auto vals = ic.column_values(u);
    for (std::size_t p = 0; p < rows.size(); ++p) {
      if (s[rows[p]] > 0.0 && vals[p] > 0.0) values.push_back(vals[p] / s[rows[p]]);
    }
  }
  if (values.empty()) return 0.0;
  return lower_quantile(std::move(values), q);
}

std::pair<double, double> resolve_radius(const FeatureMatrix& x, double q, std::size_t sample_pairs,
                                         std::uint64_t seed) {
  const std::size_t n = x.rows();
  if (n < 2) return {0.0, 0.0};
  auto sq_dist = [&](std::size_t a, std::size_t b) {
    double acc = 0.0;
    auto ra = x.row(a);
    auto rb = x.row(b);
    for (std::size_t c = 0; c < ra.size(); ++c) {
      const double diff = ra[c] - rb[c];
      acc += diff * diff;
    }
    return acc;
  };
  std::vector<double> sample;
  const double all_pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  if (all_pairs <= static_cast<double>(sample_pairs)) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) sample.push_back(sq_dist(a, b));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    sample.reserve(sample_pairs);
    while (sample.size() < sample_pairs) {
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      if (a != b) sample.push_back(sq_dist(a, b));
    }
  }
  const double r_sq = lower_quantile(std::move(sample), q);
  return {std::sqrt(r_sq), r_sq};
}

std::pair<double, double> normalizers(const Hypergraph& g, const ActivationSets& acts, const FeatureBalls& balls,
                                      double beta) {
  const std::size_t n = g.num_nodes();
  DynamicBitset activated(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (NodeId j : acts.of(static_cast<NodeId>(u))) activated.set(j);
  }
  DynamicBitset covered(n);
  activated.for_each([&](std::size_t j) {
    require(balls.has_ball(static_cast<NodeId>(j)), ErrorCode::kInvalidArgument,
            "activatable node " + std::to_string(j) + " has no feature ball");
    balls.for_each_member(static_cast<NodeId>(j), [&](NodeId v) { covered.set(v); });
  });
  const auto moi_hat = static_cast<double>(covered.count());
  require(moi_hat > 0.0, ErrorCode::kConfig,
          "MoI(V) is zero: no node is activated by any seed (theta too high or empty hypergraph)");
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  return {moi_hat, edv(g, all, beta)};
}

InfluenceModel InfluenceModel::build(const Hypergraph& g, const FeatureMatrix& features, const SelectionConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  require(features.rows() == n, ErrorCode::kData,
          "feature matrix has " + std::to_string(features.rows()) + " rows for " + std::to_string(n) + " nodes");
  require(n > 0, ErrorCode::kData, "hypergraph has no nodes");

  InfluenceModel m;
  m.graph_ = &g;
  m.beta_ = cfg.beta;
  m.gamma_ = cfg.gamma;

  if (cfg.candidate_pool.empty()) {
    m.pool_.resize(n);
    std::iota(m.pool_.begin(), m.pool_.end(), NodeId{0});
  } else {
    m.pool_ = cfg.candidate_pool;
    std::sort(m.pool_.begin(), m.pool_.end());
    m.pool_.erase(std::unique(m.pool_.begin(), m.pool_.end()), m.pool_.end());
    require(m.pool_.back() < n, ErrorCode::kConfig,
            "candidate pool references node " + std::to_string(m.pool_.back()) + " outside the hypergraph");
  }

  m.transition_ = build_transition(g, cfg.backend);
  m.propagation_ = propagate(m.transition_, features, cfg.k, cfg.alpha);

  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), NodeId{0});
  m.columns_ = influence_columns(m.transition_, all, cfg.k, cfg.alpha, cfg.threads);

  m.params_.theta_auto = !cfg.theta.has_value();
  m.params_.theta = cfg.theta ? *cfg.theta : resolve_theta(m.columns_, m.pool_, cfg.theta_quantile);
  m.activation_ = build_activation_sets(m.columns_, m.params_.theta);

  std::vector<char> activatable(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (NodeId j : m.activation_.of(static_cast<NodeId>(u))) activatable[j] = 1;
  }

  m.params_.radius_auto = !cfg.radius.has_value();
  if (cfg.radius) {
    m.params_.radius = *cfg.radius;
    m.params_.radius_sq = *cfg.radius * *cfg.radius;
  } else {
    std::tie(m.params_.radius, m.params_.radius_sq) =
        resolve_radius(m.propagation_.propagated_features, cfg.radius_quantile, cfg.radius_sample_pairs, cfg.seed);
  }
  m.balls_ = build_feature_balls(m.propagation_.propagated_features, m.params_.radius, m.params_.radius_sq,
                                 activatable, cfg.threads);

  std::tie(m.moi_hat_, m.edv_hat_) = normalizers(g, m.activation_, m.balls_, cfg.beta);
  spdlog::info("resolved theta={:.17g}{} radius={:.17g}{} MoI(V)={} EDV(V)={}", m.params_.theta,
               m.params_.theta_auto ? " (auto)" : "", m.params_.radius, m.params_.radius_auto ? " (auto)" : "",
               m.moi_hat_, m.edv_hat_);
  return m;
}

namespace {

void check_budget(const InfluenceModel& model, std::size_t budget) {
  require(budget >= 1, ErrorCode::kConfig, "budget must be at least 1");
  require(budget <= model.pool().size(), ErrorCode::kConfig,
          "budget " + std::to_string(budget) + " exceeds the candidate pool size " +
              std::to_string(model.pool().size()));
}

SelectionResult start_result(const InfluenceModel& model) {
  SelectionResult r;
  r.params = model.params();
  r.moi_hat = model.moi_hat();
  r.edv_hat = model.edv_hat();
  return r;
}

void commit(const InfluenceModel& model, CoverageState& state, NodeId v, double gain, GainScratch& scratch,
            SelectionResult& r) {
  incremental_add(state, v, model.context(), scratch);
  r.seeds.push_back(v);
  r.gains.push_back(gain);
  r.trace.push_back({state.moi_value(), state.edv_value(), model.objective(state)});
}

}  // namespace

SelectionResult select_naive(const InfluenceModel& model, std::size_t budget, unsigned threads) {
  check_budget(model, budget);
  const std::size_t n = model.graph().num_nodes();
  const unsigned workers = threads == 0 ? default_threads() : threads;
  const ObjectiveContext ctx = model.context();

  SelectionResult result = start_result(model);
  CoverageState state(n);
  std::vector<GainScratch> scratch;
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);

  std::vector<NodeId> remaining(model.pool().begin(), model.pool().end());
  std::vector<double> scores;
  for (std::size_t round = 0; round < budget; ++round) {
    scores.assign(remaining.size(), 0.0);
    parallel_for(remaining.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
      for (std::size_t i = begin; i < end; ++i) {
        scores[i] = model.objective_gain(marginal_gain(state, remaining[i], ctx, scratch[w]));
      }
    });
    result.evaluations += remaining.size();
    // `remaining` is ascending, so strict > keeps the lowest id on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (scores[i] > scores[best]) best = i;
    }
    commit(model, state, remaining[best], scores[best], scratch[0], result);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return result;
}

SelectionResult select_lazy(const InfluenceModel& model, std::size_t budget, unsigned threads) {
  check_budget(model, budget);
  const std::size_t n = model.graph().num_nodes();
  const unsigned workers = threads == 0 ? default_threads() : threads;
  const ObjectiveContext ctx = model.context();

  // Stale MoI and EDV increments are kept apart so the MoI part can also be
  // capped by the still uncovered count MoI(V) - MoI(S). Both parts are
  // exact upper bounds on the fresh increments, and objective_gain is
  // monotone in each, so the key never drops below the fresh gain.
  struct Entry {
    double key;
    Gain stale;
    NodeId node;
    std::size_t fresh_round;
    std::size_t capped_round;
  };
  // Largest key on top; among equal keys the lowest id.
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.node > b.node;
  };

  SelectionResult result = start_result(model);
  CoverageState state(n);
  std::vector<GainScratch> scratch;
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(n);

  auto pool = model.pool();
  std::vector<Entry> initial(pool.size());
  parallel_for(pool.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) {
      const Gain g = marginal_gain(state, pool[i], ctx, scratch[w]);
      initial[i] = {model.objective_gain(g), g, pool[i], 0, 0};
    }
  });
  result.evaluations += pool.size();
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse, std::move(initial));
  const auto moi_total = static_cast<std::size_t>(model.moi_hat());

  for (std::size_t round = 0; round < budget; ++round) {
    const std::size_t uncovered = moi_total - state.moi_value();
    for (;;) {
      Entry top = queue.top();
      queue.pop();
      if (top.fresh_round == round) {
        commit(model, state, top.node, top.key, scratch[0], result);
        break;
      }
      if (top.capped_round != round && top.stale.moi > uncovered) {
        top.stale.moi = uncovered;
        top.key = model.objective_gain(top.stale);
        top.capped_round = round;
        queue.push(top);
        continue;
      }
      top.stale = marginal_gain(state, top.node, ctx, scratch[0]);
      top.key = model.objective_gain(top.stale);
      top.fresh_round = round;
      ++result.evaluations;
      queue.push(top);
    }
  }
  return result;
}

}  // namespace hyperseed
