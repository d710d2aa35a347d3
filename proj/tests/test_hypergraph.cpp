// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hyperseed/error.hpp"
#include "hyperseed/hypergraph.hpp"
#include "support/fixtures.hpp"

using namespace hyperseed;

namespace {

std::vector<std::size_t> node_degrees(const Hypergraph& g) {
  std::vector<std::size_t> d;
  for (NodeId v = 0; v < g.num_nodes(); ++v) d.push_back(g.node_degree(v));
  return d;
}

std::vector<std::size_t> edge_sizes(const Hypergraph& g) {
  std::vector<std::size_t> d;
  for (EdgeId e = 0; e < g.num_edges(); ++e) d.push_back(g.edge_degree(e));
  return d;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("build counts degrees") {
  const auto g = Hypergraph::build(3, {{0, 1, 2}, {1, 2}});
  CHECK(node_degrees(g) == std::vector<std::size_t>{1, 2, 2});
  CHECK(edge_sizes(g) == std::vector<std::size_t>{3, 2});
  CHECK(g.num_incidences() == 5);

  const auto single = Hypergraph::build(1, {{0}});
  CHECK(node_degrees(single) == std::vector<std::size_t>{1});
  CHECK(edge_sizes(single) == std::vector<std::size_t>{1});
}

TEST_CASE("build collapses repeated members") {
  const auto g = Hypergraph::build(2, {{0, 0, 1}});
  CHECK(edge_sizes(g) == std::vector<std::size_t>{2});
  CHECK(node_degrees(g) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("build rejects empty hyperedges and unknown nodes") {
  try {
    Hypergraph::build(3, {{0, 1}, {}});
    FAIL("empty edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kData);
    CHECK(std::string(e.what()).find("hyperedge 1") != std::string::npos);
  }
  CHECK(code_of([] { Hypergraph::build(2, {{0, 2}}); }) == ErrorCode::kData);
  CHECK(code_of([] { Hypergraph::build(2, {{0, 1}}, {1.0, 2.0}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Hypergraph::build(2, {{0, 1}}, {-1.0}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("edge weights default to one") {
  const auto g = Hypergraph::build(3, {{0, 1}, {1, 2}});
  CHECK(g.edge_weight(0) == 1.0);
  const auto w = Hypergraph::build(3, {{0, 1}, {1, 2}}, {0.5, 2.0});
  CHECK(w.edge_weight(1) == 2.0);
}

TEST_CASE("shared edge count") {
  const auto g = Hypergraph::build(4, {{0, 1, 2}, {1, 2}});
  CHECK(g.shared_edge_count(1, 2) == 2);
  CHECK(g.shared_edge_count(0, 2) == 1);
  CHECK(g.shared_edge_count(0, 3) == 0);
  CHECK(code_of([&] { g.shared_edge_count(1, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { g.shared_edge_count(1, 9); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("one-hop neighbours") {
  const auto g = Hypergraph::build(3, {{0, 1, 2}, {1, 2}});
  CHECK(g.one_hop_neighbors(0) == std::vector<NodeId>{1, 2});
  CHECK(Hypergraph::build(1, {{0}}).one_hop_neighbors(0).empty());
  CHECK(Hypergraph::build(3, {{0, 1}, {1, 2}}).one_hop_neighbors(1) == std::vector<NodeId>{0, 2});
  CHECK(code_of([&] { g.one_hop_neighbors(3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("neighbourhood of a set excludes the set") {
  const auto g = Hypergraph::build(3, {{0, 1, 2}});
  const std::vector<NodeId> s0{0};
  CHECK(g.neighborhood_of_set(s0) == std::vector<NodeId>{1, 2});
  const std::vector<NodeId> all{0, 1, 2};
  CHECK(g.neighborhood_of_set(all).empty());
  const auto path = Hypergraph::build(3, {{0, 1}, {1, 2}});
  const std::vector<NodeId> ends{0, 2};
  CHECK(path.neighborhood_of_set(ends) == std::vector<NodeId>{1});
}

TEST_CASE("structural invariants on random hypergraphs") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform_size(rng, 2, 30);
    const auto inst = testing::random_instance(rng, n, testing::uniform_size(rng, 1, 40), 1);
    const auto& g = inst.graph;

    std::size_t node_sum = 0, edge_sum = 0;
    for (NodeId v = 0; v < n; ++v) node_sum += g.node_degree(v);
    for (EdgeId e = 0; e < g.num_edges(); ++e) edge_sum += g.edge_degree(e);
    CHECK(node_sum == edge_sum);
    CHECK(node_sum == g.num_incidences());

    for (NodeId v = 0; v < n; ++v) {
      auto edges = g.edges_of(v);
      CHECK(std::is_sorted(edges.begin(), edges.end()));
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto members = g.nodes_of(e);
        const bool in_edge = std::binary_search(members.begin(), members.end(), v);
        const bool in_node = std::binary_search(edges.begin(), edges.end(), e);
        CHECK(in_edge == in_node);
      }
      const auto nbrs = g.one_hop_neighbors(v);
      for (NodeId u = 0; u < n; ++u) {
        if (u == v) continue;
        const auto shared = g.shared_edge_count(u, v);
        CHECK(shared == g.shared_edge_count(v, u));
        CHECK((shared >= 1) == std::binary_search(nbrs.begin(), nbrs.end(), u));
      }
    }
  }
}
