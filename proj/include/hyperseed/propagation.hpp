// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hyperseed/hypergraph.hpp"
#include "hyperseed/matrix.hpp"

namespace hyperseed {

enum class Backend {
  kHoi,   ///< common-neighbour weighted, symmetrically normalised, zero diagonal
  kHgnn,  ///< D_v^-1/2 H W D_e^-1 H^T D_v^-1/2
};

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

/// Symmetric non-negative n x n transition operator.
struct TransitionMatrix {
  SparseMatrix entries;
  Backend backend = Backend::kHoi;
};

/// l_ij = sum over shared hyperedges of (|e| - 1) for i != j, then
/// D^-1/2 L D^-1/2 with D = diag(L 1). Rows with zero sum stay zero.
TransitionMatrix build_hoi_transition(const Hypergraph& g);

/// Uses g's per-edge weights (1 when absent). Isolated nodes get zero rows.
TransitionMatrix build_hgnn_transition(const Hypergraph& g);

TransitionMatrix build_transition(const Hypergraph& g, Backend backend);

struct PropagationState {
  FeatureMatrix initial_features;
  FeatureMatrix propagated_features;
  std::size_t k = 0;
  double alpha = 0.0;
};

/// Runs X <- alpha T X + (1 - alpha) X0 for k steps.
PropagationState propagate(const TransitionMatrix& t, FeatureMatrix x0, std::size_t k, double alpha);

/// Columns M_k[., u] of the k-step influence matrix for a set of candidate
/// nodes, plus the row sums of the full M_k. Each column is kept sparse over
/// its support (the k-hop reach of u); rows within a column are sorted.
class InfluenceColumns {
 public:
  std::size_t num_nodes() const { return row_sums_.size(); }
  std::span<const NodeId> candidates() const { return candidates_; }
  bool has_column(NodeId u) const { return u < slot_.size() && slot_[u] >= 0; }

  std::span<const NodeId> column_rows(NodeId u) const;
  std::span<const double> column_values(NodeId u) const;
  std::span<const double> row_sums() const { return row_sums_; }

  /// M_k[j, u]; u must be a stored candidate.
  double raw(NodeId j, NodeId u) const;

  /// M_k[j, u] / s[j] in [0, 1]. Zero when s[j] == 0 (warned once).
  double normalized(NodeId j, NodeId u) const;

  std::size_t k() const { return k_; }
  double alpha() const { return alpha_; }

 private:
  friend InfluenceColumns influence_columns(const TransitionMatrix&, std::span<const NodeId>, std::size_t, double,
                                            unsigned);

  std::vector<NodeId> candidates_;
  std::vector<long long> slot_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> rows_;
  std::vector<double> values_;
  std::vector<double> row_sums_;
  std::size_t k_ = 0;
  double alpha_ = 0.0;
};

/// Computes each candidate column by k sparse pushes of the basis vector
/// through M_t = alpha T M_{t-1} + (1 - alpha) I, and s = M_k 1 by k mat-vecs.
/// Duplicate candidates are ignored. Result does not depend on `threads`.
InfluenceColumns influence_columns(const TransitionMatrix& t, std::span<const NodeId> candidates, std::size_t k,
                                   double alpha, unsigned threads = 1);

/// Free-function form of InfluenceColumns::normalized.
inline double normalized_influence(const InfluenceColumns& ic, NodeId j, NodeId u) { return ic.normalized(j, u); }

}  // namespace hyperseed
