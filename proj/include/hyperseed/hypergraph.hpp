// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperseed {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable hypergraph stored as two CSR adjacency indices (node -> edges and
/// edge -> nodes), both sorted. Incidence is binary.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Builds from per-edge member lists. Duplicate ids inside an edge are
  /// merged; an edge that is empty after merging, or an id >= num_nodes, is
  /// rejected. `edge_weights` is either empty (all 1) or one non-negative
  /// weight per edge; only the HGNN transition reads it.
  static Hypergraph build(std::size_t num_nodes, const std::vector<std::vector<NodeId>>& edge_node_lists,
                          std::vector<double> edge_weights = {});

  std::size_t num_nodes() const { return node_offsets_.empty() ? 0 : node_offsets_.size() - 1; }
  std::size_t num_edges() const { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }
  std::size_t num_incidences() const { return edge_members_.size(); }

  std::span<const EdgeId> edges_of(NodeId v) const {
    return {node_edges_.data() + node_offsets_[v], node_edges_.data() + node_offsets_[v + 1]};
  }
  std::span<const NodeId> nodes_of(EdgeId e) const {
    return {edge_members_.data() + edge_offsets_[e], edge_members_.data() + edge_offsets_[e + 1]};
  }

  std::size_t node_degree(NodeId v) const { return node_offsets_[v + 1] - node_offsets_[v]; }
  std::size_t edge_degree(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }
  double edge_weight(EdgeId e) const { return edge_weights_.empty() ? 1.0 : edge_weights_[e]; }

  /// Number of hyperedges containing both u and v (u != v).
  std::size_t shared_edge_count(NodeId u, NodeId v) const;

  /// Nodes other than v that share at least one hyperedge with v, sorted.
  std::vector<NodeId> one_hop_neighbors(NodeId v) const;

  /// Union of the neighbors of every node in `seeds`, minus the seeds. Sorted.
  std::vector<NodeId> neighborhood_of_set(std::span<const NodeId> seeds) const;

 private:
  void check_node(NodeId v) const;

  std::vector<std::size_t> node_offsets_;
  std::vector<EdgeId> node_edges_;
  std::vector<std::size_t> edge_offsets_;
  std::vector<NodeId> edge_members_;
  std::vector<double> edge_weights_;
};

}  // namespace hyperseed
