// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include <spdlog/spdlog.h>

#include "hyperseed/error.hpp"
#include "hyperseed/parallel.hpp"

namespace hyperseed {
namespace {

void check_alpha(double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, ErrorCode::kConfig,
          "alpha must lie in [0, 1], got " + std::to_string(alpha));
}

// Row-by-row assembly of a symmetric matrix from a per-row accumulator.
// `visit(i, add)` must call add(j, w) for every contribution to row i.
template <class Visit>
SparseMatrix assemble_rows(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> cols;
  std::vector<double> values;
  std::vector<double> acc(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < n; ++i) {
    touched.clear();
    visit(i, [&](std::uint32_t j, double w) {
      if (!seen[j]) {
        seen[j] = 1;
        touched.push_back(j);
      }
      acc[j] += w;
    });
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t j : touched) {
      if (acc[j] != 0.0) {
        cols.push_back(j);
        values.push_back(acc[j]);
      }
      acc[j] = 0.0;
      seen[j] = 0;
    }
    offsets.push_back(cols.size());
  }
  return SparseMatrix(n, std::move(offsets), std::move(cols), std::move(values));
}

std::once_flag zero_row_sum_warning;

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::kHoi ? "hoi" : "hgnn"; }

Backend parse_backend(std::string_view name) {
  if (name == "hoi") return Backend::kHoi;
  if (name == "hgnn") return Backend::kHgnn;
  fail(ErrorCode::kConfig, "unknown propagation backend '" + std::string(name) + "' (expected hoi or hgnn)");
}

TransitionMatrix build_hoi_transition(const Hypergraph& g) {
  const std::size_t n = g.num_nodes();
  SparseMatrix l = assemble_rows(n, [&](std::size_t i, auto&& add) {
    for (EdgeId e : g.edges_of(static_cast<NodeId>(i))) {
      const double weight = static_cast<double>(g.edge_degree(e) - 1);
      for (NodeId j : g.nodes_of(e)) {
        if (j != i) add(j, weight);
      }
    }
  });

  std::vector<double> row_sum(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (double w : l.row_values(i)) row_sum[i] += w;
  }
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> cols;
  std::vector<double> values;
  cols.reserve(l.nonzeros());
  values.reserve(l.nonzeros());
  for (std::size_t i = 0; i < n; ++i) {
    auto rc = l.row_cols(i);
    auto rv = l.row_values(i);
    for (std::size_t p = 0; p < rc.size(); ++p) {
      cols.push_back(rc[p]);
      values.push_back(rv[p] / std::sqrt(row_sum[i] * row_sum[rc[p]]));
    }
    offsets.push_back(cols.size());
  }
  return {SparseMatrix(n, std::move(offsets), std::move(cols), std::move(values)), Backend::kHoi};
}

TransitionMatrix build_hgnn_transition(const Hypergraph& g) {
  const std::size_t n = g.num_nodes();
  SparseMatrix t = assemble_rows(n, [&](std::size_t i, auto&& add) {
    for (EdgeId e : g.edges_of(static_cast<NodeId>(i))) {
      const double w = g.edge_weight(e) / static_cast<double>(g.edge_degree(e));
      for (NodeId j : g.nodes_of(e)) {
        add(j, w / std::sqrt(static_cast<double>(g.node_degree(static_cast<NodeId>(i)) * g.node_degree(j))));
      }
    }
  });
  return {std::move(t), Backend::kHgnn};
}

TransitionMatrix build_transition(const Hypergraph& g, Backend backend) {
  return backend == Backend::kHoi ? build_hoi_transition(g) : build_hgnn_transition(g);
}

PropagationState propagate(const TransitionMatrix& t, FeatureMatrix x0, std::size_t k, double alpha) {
  check_alpha(alpha);
  require(x0.rows() == t.entries.size(), ErrorCode::kInvalidArgument,
          "feature matrix has " + std::to_string(x0.rows()) + " rows but the hypergraph has " +
              std::to_string(t.entries.size()) + " nodes");
  PropagationState state;
  state.k = k;
  state.alpha = alpha;
  FeatureMatrix x = x0;
  for (std::size_t step = 0; step < k; ++step) {
    FeatureMatrix next = t.entries.multiply(x);
    auto out = next.data();
    auto base = x0.data();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * out[i] + (1.0 - alpha) * base[i];
    x = std::move(next);
  }
  state.initial_features = std::move(x0);
  state.propagated_features = std::move(x);
  return state;
}

std::span<const NodeId> InfluenceColumns::column_rows(NodeId u) const {
  require(has_column(u), ErrorCode::kInvalidArgument, "node " + std::to_string(u) + " has no influence column");
  const auto s = static_cast<std::size_t>(slot_[u]);
  return {rows_.data() + offsets_[s], rows_.data() + offsets_[s + 1]};
}

std::span<const double> InfluenceColumns::column_values(NodeId u) const {
  require(has_column(u), ErrorCode::kInvalidArgument, "node " + std::to_string(u) + " has no influence column");
  const auto s = static_cast<std::size_t>(slot_[u]);
  return {values_.data() + offsets_[s], values_.data() + offsets_[s + 1]};
}

double InfluenceColumns::raw(NodeId j, NodeId u) const {
  auto rows = column_rows(u);
  auto it = std::lower_bound(rows.begin(), rows.end(), j);
  if (it == rows.end() || *it != j) return 0.0;
  return column_values(u)[static_cast<std::size_t>(it - rows.begin())];
}

double InfluenceColumns::normalized(NodeId j, NodeId u) const {
  require(j < num_nodes(), ErrorCode::kInvalidArgument, "node id " + std::to_string(j) + " out of range");
  if (row_sums_[j] <= 0.0) {
    std::call_once(zero_row_sum_warning, [] {
      spdlog::warn("influence row sum is zero for at least one node; its normalised influence is taken as 0");
    });
    return 0.0;
  }
  return raw(j, u) / row_sums_[j];
}

InfluenceColumns influence_columns(const TransitionMatrix& t, std::span<const NodeId> candidates, std::size_t k,
                                   double alpha, unsigned threads) {
  check_alpha(alpha);
  const SparseMatrix& a = t.entries;
  const std::size_t n = a.size();

  InfluenceColumns ic;
  ic.k_ = k;
  ic.alpha_ = alpha;
  ic.slot_.assign(n, -1);
  for (NodeId u : candidates) {
    require(u < n, ErrorCode::kInvalidArgument,
            "candidate " + std::to_string(u) + " out of range [0, " + std::to_string(n) + ")");
    if (ic.slot_[u] >= 0) continue;
    ic.slot_[u] = static_cast<long long>(ic.candidates_.size());
    ic.candidates_.push_back(u);
  }

  // s = M_k 1
  std::vector<double> s(n, 1.0);
  std::vector<double> tmp(n);
  for (std::size_t step = 0; step < k; ++step) {
    a.multiply(s, tmp);
    for (std::size_t j = 0; j < n; ++j) s[j] = alpha * tmp[j] + (1.0 - alpha);
  }
  ic.row_sums_ = std::move(s);

  // The operator is symmetric, so pushing along row i reaches every j with T[j, i] != 0.
  struct Scratch {
    std::vector<double> cur, next;
    std::vector<char> in_next;
    std::vector<NodeId> cur_support, next_support;
  };
  const std::size_t count = ic.candidates_.size();
  std::vector<std::vector<NodeId>> col_rows(count);
  std::vector<std::vector<double>> col_values(count);
  const unsigned workers = threads == 0 ? default_threads() : threads;
  std::vector<Scratch> scratch(workers);

  parallel_for(count, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    Scratch& sc = scratch[w];
    sc.cur.assign(n, 0.0);
    sc.next.assign(n, 0.0);
    sc.in_next.assign(n, 0);
    for (std::size_t c = begin; c < end; ++c) {
      const NodeId u = ic.candidates_[c];
      sc.cur_support.assign(1, u);
      sc.cur[u] = 1.0;
      for (std::size_t step = 0; step < k; ++step) {
        sc.next_support.clear();
        for (NodeId i : sc.cur_support) {
          const double xi = alpha * sc.cur[i];
          auto rc = a.row_cols(i);
          auto rv = a.row_values(i);
          for (std::size_t p = 0; p < rc.size(); ++p) {
            const NodeId j = rc[p];
            if (!sc.in_next[j]) {
              sc.in_next[j] = 1;
              sc.next_support.push_back(j);
            }
            sc.next[j] += rv[p] * xi;
          }
        }
        if (!sc.in_next[u]) {
          sc.in_next[u] = 1;
          sc.next_support.push_back(u);
        }
        sc.next[u] += 1.0 - alpha;
        for (NodeId i : sc.cur_support) sc.cur[i] = 0.0;
        std::swap(sc.cur, sc.next);
        std::swap(sc.cur_support, sc.next_support);
        for (NodeId i : sc.cur_support) sc.in_next[i] = 0;
      }
      std::sort(sc.cur_support.begin(), sc.cur_support.end());
      auto& rows = col_rows[c];
      auto& vals = col_values[c];
      for (NodeId i : sc.cur_support) {
        if (sc.cur[i] != 0.0) {
          rows.push_back(i);
          vals.push_back(sc.cur[i]);
        }
        sc.cur[i] = 0.0;
      }
    }
  });

  std::size_t total = 0;
  for (const auto& r : col_rows) total += r.size();
  ic.rows_.reserve(total);
  ic.values_.reserve(total);
  for (std::size_t c = 0; c < count; ++c) {
    ic.rows_.insert(ic.rows_.end(), col_rows[c].begin(), col_rows[c].end());
    ic.values_.insert(ic.values_.end(), col_values[c].begin(), col_values[c].end());
    ic.offsets_.push_back(ic.rows_.size());
    std::vector<NodeId>().swap(col_rows[c]);
    std::vector<double>().swap(col_values[c]);
  }
  return ic;
}

}  // namespace hyperseed
