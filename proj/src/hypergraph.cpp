// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperseed/error.hpp"

namespace hyperseed {

Hypergraph Hypergraph::build(std::size_t num_nodes, const std::vector<std::vector<NodeId>>& edge_node_lists,
                             std::vector<double> edge_weights) {
  const std::size_t m = edge_node_lists.size();
  require(edge_weights.empty() || edge_weights.size() == m, ErrorCode::kInvalidArgument,
          "edge weight count " + std::to_string(edge_weights.size()) + " does not match edge count " +
              std::to_string(m));
  for (std::size_t e = 0; e < edge_weights.size(); ++e) {
    require(edge_weights[e] >= 0.0, ErrorCode::kInvalidArgument,
            "negative weight on hyperedge " + std::to_string(e));
  }

  Hypergraph g;
  g.edge_weights_ = std::move(edge_weights);
  g.edge_offsets_.reserve(m + 1);
  g.edge_offsets_.push_back(0);
  std::vector<std::size_t> degree(num_nodes, 0);
  std::vector<NodeId> members;
  for (std::size_t e = 0; e < m; ++e) {
    members = edge_node_lists[e];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    require(!members.empty(), ErrorCode::kData, "hyperedge " + std::to_string(e) + " is empty");
    require(members.back() < num_nodes, ErrorCode::kData,
            "hyperedge " + std::to_string(e) + " references node " + std::to_string(members.back()) +
                " but only " + std::to_string(num_nodes) + " nodes are declared");
    for (NodeId v : members) ++degree[v];
    g.edge_members_.insert(g.edge_members_.end(), members.begin(), members.end());
    g.edge_offsets_.push_back(g.edge_members_.size());
  }

  g.node_offsets_.assign(num_nodes + 1, 0);
  for (std::size_t v = 0; v < num_nodes; ++v) g.node_offsets_[v + 1] = g.node_offsets_[v] + degree[v];
  g.node_edges_.resize(g.edge_members_.size());
  std::vector<std::size_t> cursor(g.node_offsets_.begin(), g.node_offsets_.end() - 1);
  // Edges are visited in increasing id order, so each node's edge list comes out sorted.
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t i = g.edge_offsets_[e]; i < g.edge_offsets_[e + 1]; ++i) {
      g.node_edges_[cursor[g.edge_members_[i]]++] = static_cast<EdgeId>(e);
    }
  }
  return g;
}

void Hypergraph::check_node(NodeId v) const {
  require(v < num_nodes(), ErrorCode::kInvalidArgument,
          "node id " + std::to_string(v) + " out of range [0, " + std::to_string(num_nodes()) + ")");
}

std::size_t Hypergraph::shared_edge_count(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  require(u != v, ErrorCode::kInvalidArgument, "shared_edge_count needs two distinct nodes");
  auto a = edges_of(u);
  auto b = edges_of(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<NodeId> Hypergraph::one_hop_neighbors(NodeId v) const {
  check_node(v);
  std::vector<NodeId> out;
  for (EdgeId e : edges_of(v)) {
    for (NodeId w : nodes_of(e)) {
      if (w != v) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeId> Hypergraph::neighborhood_of_set(std::span<const NodeId> seeds) const {
  std::vector<char> is_seed(num_nodes(), 0);
  for (NodeId s : seeds) {
    check_node(s);
    is_seed[s] = 1;
  }
  std::vector<char> mark(num_nodes(), 0);
  std::vector<NodeId> out;
  for (NodeId s : seeds) {
    for (EdgeId e : edges_of(s)) {
      for (NodeId w : nodes_of(e)) {
        if (!is_seed[w] && !mark[w]) {
          mark[w] = 1;
          out.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperseed
