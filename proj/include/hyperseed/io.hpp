// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperseed/hypergraph.hpp"
#include "hyperseed/matrix.hpp"
#include "hyperseed/selector.hpp"

namespace hyperseed {

inline constexpr const char* kVersion = "0.3.0";

/// External string id <-> dense node id. Dense ids follow the sorted order of
/// the external ids (numeric ids by value first, then the rest lexicographically).
class IdMap {
 public:
  IdMap() = default;
  explicit IdMap(std::vector<std::string> external_ids);

  std::size_t size() const { return ids_.size(); }
  const std::string& external(NodeId v) const { return ids_[v]; }
  std::optional<NodeId> find(const std::string& id) const;
  NodeId at(const std::string& id) const;  // throws kData on unknown ids
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Ordering used for dense id assignment.
bool external_id_less(const std::string& a, const std::string& b);

struct Splits {
  std::vector<NodeId> train;
  std::vector<NodeId> test;
};

struct Dataset {
  Hypergraph graph;
  FeatureMatrix features;
  IdMap ids;
  std::optional<std::vector<int>> labels;  // dense class ids
  std::vector<std::string> class_names;    // class id -> external label
  std::optional<Splits> splits;
};

struct DatasetPaths {
  std::string hyperedges;
  std::string features;
  std::string labels;        // optional
  std::string splits;        // optional
  std::string nodes;         // optional node list; makes unknown ids an error
  std::string edge_weights;  // optional, one weight per hyperedge line
  bool sparse_features = false;
};

/// One hyperedge per line, whitespace-separated external ids. Blank lines and
/// lines starting with '#' are skipped.
std::vector<std::vector<std::string>> load_hypergraph(const std::string& path);

/// Dense CSV ("id,x1,...,xd") or, with `sparse`, "id idx:value ..." lines.
/// Returned in file order.
std::vector<std::pair<std::string, std::vector<double>>> load_features(const std::string& path, bool sparse = false);

/// "id,class" lines.
std::vector<std::pair<std::string, std::string>> load_labels(const std::string& path);

/// JSON object with optional "train" and "test" arrays of external ids.
std::pair<std::vector<std::string>, std::vector<std::string>> load_splits(const std::string& path);

std::vector<std::string> load_node_list(const std::string& path);
std::vector<double> load_edge_weights(const std::string& path);

Dataset load_dataset(const DatasetPaths& paths);

/// Writes the hyperedge, features, labels and splits files named in `paths`
/// (empty names are skipped).
void save_dataset(const Dataset& ds, const DatasetPaths& paths);

/// Parsed result document.
struct ResultDocument {
  std::vector<std::string> seeds;
  std::vector<double> gains;
  std::vector<TraceStep> trace;
  double theta = 0.0;
  double radius = 0.0;
  double moi_hat = 0.0;
  double edv_hat = 0.0;
  std::string version;
};

std::string result_to_json(const SelectionResult& result, const IdMap& ids, const SelectionConfig& cfg);
void write_result(const SelectionResult& result, const IdMap& ids, const SelectionConfig& cfg,
                  const std::string& path);
ResultDocument read_result(const std::string& path);

/// Seed ids from a result document or a plain whitespace-separated id list.
std::vector<std::string> read_seed_file(const std::string& path);

}  // namespace hyperseed
