// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hyperseed/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyperseed/error.hpp"

namespace hyperseed {
namespace {

using json = nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kIo, "cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  require(out.good(), ErrorCode::kIo, "cannot open '" + path + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  require(out.good(), ErrorCode::kIo, "write to '" + path + "' failed");
}

std::string where(const std::string& path, std::size_t line) { return path + ":" + std::to_string(line) + ": "; }

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool skip_line(std::string_view line) { return line.empty() || line.front() == '#'; }

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':' || c == '/';
  });
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> parse_integer(std::string_view s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

bool external_id_less(const std::string& a, const std::string& b) {
  const auto na = parse_integer(a);
  const auto nb = parse_integer(b);
  if (na && nb) return *na != *nb ? *na < *nb : a < b;
  if (na != nb) return na.has_value();  // numeric ids first
  return a < b;
}

IdMap::IdMap(std::vector<std::string> external_ids) : ids_(std::move(external_ids)) {
  std::sort(ids_.begin(), ids_.end(), external_id_less);
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], static_cast<NodeId>(i));
}

std::optional<NodeId> IdMap::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId IdMap::at(const std::string& id) const {
  auto v = find(id);
  require(v.has_value(), ErrorCode::kData, "unknown node id '" + id + "'");
  return *v;
}

std::vector<std::vector<std::string>> load_hypergraph(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::vector<std::string>> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skip_line(line)) continue;
    std::vector<std::string> members;
    for (auto tok : split_ws(line)) {
      require(valid_id(tok), ErrorCode::kParse, where(path, line_no) + "malformed node id '" + std::string(tok) + "'");
      members.emplace_back(tok);
    }
    edges.push_back(std::move(members));
  }
  return edges;
}

std::vector<std::pair<std::string, std::vector<double>>> load_features(const std::string& path, bool sparse) {
  auto in = open_input(path);
  std::vector<std::pair<std::string, std::vector<double>>> rows;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> width;
  std::vector<std::vector<std::pair<std::size_t, double>>> sparse_rows;
  std::size_t sparse_dim = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skip_line(line)) continue;
    const auto cells = sparse ? split_ws(line) : split_on(line, ',');
    const std::string id(cells.front());
    require(valid_id(id), ErrorCode::kParse, where(path, line_no) + "malformed node id '" + id + "'");
    require(seen.insert(id).second, ErrorCode::kData, where(path, line_no) + "duplicate node id '" + id + "'");
    if (sparse) {
      std::vector<std::pair<std::size_t, double>> entries;
      for (std::size_t c = 1; c < cells.size(); ++c) {
        const auto colon = cells[c].find(':');
        require(colon != std::string_view::npos, ErrorCode::kParse,
                where(path, line_no) + "expected index:value, got '" + std::string(cells[c]) + "'");
        const auto index = parse_integer(cells[c].substr(0, colon));
        const auto value = parse_double(cells[c].substr(colon + 1));
        require(index && *index >= 0 && value, ErrorCode::kParse,
                where(path, line_no) + "malformed sparse entry '" + std::string(cells[c]) + "'");
        sparse_dim = std::max(sparse_dim, static_cast<std::size_t>(*index) + 1);
        entries.emplace_back(static_cast<std::size_t>(*index), *value);
      }
      rows.emplace_back(id, std::vector<double>{});
      sparse_rows.push_back(std::move(entries));
      continue;
    }
    const std::size_t d = cells.size() - 1;
    if (!width) width = d;
    require(d == *width, ErrorCode::kData,
            where(path, line_no) + "ragged row: " + std::to_string(d) + " values, expected " +
                std::to_string(*width));
    std::vector<double> values(d);
    for (std::size_t c = 0; c < d; ++c) {
      const auto v = parse_double(cells[c + 1]);
      require(v.has_value(), ErrorCode::kParse,
              where(path, line_no) + "non-numeric cell '" + std::string(cells[c + 1]) + "' in column " +
                  std::to_string(c + 2));
      values[c] = *v;
    }
    rows.emplace_back(id, std::move(values));
  }
  if (sparse) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rows[r].second.assign(sparse_dim, 0.0);
      for (auto [i, v] : sparse_rows[r]) rows[r].second[i] += v;
    }
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> load_labels(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skip_line(line)) continue;
    const auto cells = split_on(line, ',');
    require(cells.size() == 2 && valid_id(cells[0]) && !cells[1].empty(), ErrorCode::kParse,
            where(path, line_no) + "expected 'id,class'");
    require(seen.insert(std::string(cells[0])).second, ErrorCode::kData,
            where(path, line_no) + "duplicate node id '" + std::string(cells[0]) + "'");
    out.emplace_back(cells[0], cells[1]);
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> load_splits(const std::string& path) {
  auto in = open_input(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, path + ": " + e.what());
  }
  require(doc.is_object(), ErrorCode::kParse, path + ": split file must be a JSON object");
  auto read_ids = [&](const char* key) {
    std::vector<std::string> ids;
    if (!doc.contains(key)) return ids;
    require(doc[key].is_array(), ErrorCode::kParse, path + ": '" + key + "' must be an array");
    for (const auto& v : doc[key]) {
      if (v.is_string()) {
        ids.push_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        ids.push_back(std::to_string(v.get<long long>()));
      } else {
        fail(ErrorCode::kParse, path + ": '" + key + "' entries must be strings or integers");
      }
    }
    return ids;
  };
  return {read_ids("train"), read_ids("test")};
}

std::vector<std::string> load_node_list(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::string> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skip_line(line)) continue;
    for (auto tok : split_ws(line)) {
      require(valid_id(tok), ErrorCode::kParse, where(path, line_no) + "malformed node id '" + std::string(tok) + "'");
      out.emplace_back(tok);
    }
  }
  return out;
}

std::vector<double> load_edge_weights(const std::string& path) {
  auto in = open_input(path);
  std::vector<double> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skip_line(line)) continue;
    const auto v = parse_double(line);
    require(v && *v >= 0.0, ErrorCode::kParse, where(path, line_no) + "expected a non-negative weight");
    out.push_back(*v);
  }
  return out;
}

Dataset load_dataset(const DatasetPaths& paths) {
  const auto raw_edges = load_hypergraph(paths.hyperedges);
  const auto raw_features = load_features(paths.features, paths.sparse_features);

  Dataset ds;
  if (!paths.nodes.empty()) {
    ds.ids = IdMap(load_node_list(paths.nodes));
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
      for (const auto& id : raw_edges[e]) {
        require(ds.ids.find(id).has_value(), ErrorCode::kData,
                paths.hyperedges + ": hyperedge " + std::to_string(e) + " references undeclared node '" + id + "'");
      }
    }
  } else {
    std::vector<std::string> all;
    for (const auto& edge : raw_edges) all.insert(all.end(), edge.begin(), edge.end());
    for (const auto& row : raw_features) all.push_back(row.first);
    ds.ids = IdMap(std::move(all));
  }
  const std::size_t n = ds.ids.size();
  require(n > 0, ErrorCode::kData, "dataset declares no nodes");

  std::vector<std::vector<NodeId>> edges;
  edges.reserve(raw_edges.size());
  for (const auto& edge : raw_edges) {
    std::vector<NodeId> members;
    members.reserve(edge.size());
    for (const auto& id : edge) members.push_back(ds.ids.at(id));
    edges.push_back(std::move(members));
  }
  std::vector<double> weights;
  if (!paths.edge_weights.empty()) {
    weights = load_edge_weights(paths.edge_weights);
    require(weights.size() == edges.size(), ErrorCode::kData,
            paths.edge_weights + ": " + std::to_string(weights.size()) + " weights for " +
                std::to_string(edges.size()) + " hyperedges");
  }
  ds.graph = Hypergraph::build(n, edges, std::move(weights));

  const std::size_t d = raw_features.empty() ? 0 : raw_features.front().second.size();
  ds.features = FeatureMatrix(n, d);
  std::vector<char> has_row(n, 0);
  for (const auto& [id, values] : raw_features) {
    const auto v = ds.ids.find(id);
    require(v.has_value(), ErrorCode::kData, paths.features + ": unknown node id '" + id + "'");
    has_row[*v] = 1;
    std::copy(values.begin(), values.end(), ds.features.row(*v).begin());
  }
  for (std::size_t v = 0; v < n; ++v) {
    require(has_row[v], ErrorCode::kData,
            paths.features + ": node '" + ds.ids.external(static_cast<NodeId>(v)) + "' has no feature row");
  }

  if (!paths.labels.empty()) {
    const auto raw_labels = load_labels(paths.labels);
    std::vector<std::string> classes;
    for (const auto& row : raw_labels) classes.push_back(row.second);
    std::sort(classes.begin(), classes.end(), external_id_less);
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<int> labels(n, -1);
    for (const auto& [id, cls] : raw_labels) {
      const auto v = ds.ids.find(id);
      require(v.has_value(), ErrorCode::kData, paths.labels + ": unknown node id '" + id + "'");
      labels[*v] = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), cls, external_id_less) -
                                    classes.begin());
    }
    for (std::size_t v = 0; v < n; ++v) {
      require(labels[v] >= 0, ErrorCode::kData,
              paths.labels + ": node '" + ds.ids.external(static_cast<NodeId>(v)) + "' has no label");
    }
    ds.labels = std::move(labels);
    ds.class_names = std::move(classes);
  }

  if (!paths.splits.empty()) {
    auto [train, test] = load_splits(paths.splits);
    Splits splits;
    for (const auto& id : train) splits.train.push_back(ds.ids.at(id));
    for (const auto& id : test) splits.test.push_back(ds.ids.at(id));
    std::sort(splits.train.begin(), splits.train.end());
    splits.train.erase(std::unique(splits.train.begin(), splits.train.end()), splits.train.end());
    std::sort(splits.test.begin(), splits.test.end());
    splits.test.erase(std::unique(splits.test.begin(), splits.test.end()), splits.test.end());
    ds.splits = std::move(splits);
  }
  return ds;
}

void save_dataset(const Dataset& ds, const DatasetPaths& paths) {
  const std::size_t n = ds.graph.num_nodes();
  if (!paths.hyperedges.empty()) {
    auto out = open_output(paths.hyperedges);
    for (std::size_t e = 0; e < ds.graph.num_edges(); ++e) {
      const char* sep = "";
      for (NodeId v : ds.graph.nodes_of(static_cast<EdgeId>(e))) {
        out << sep << ds.ids.external(v);
        sep = " ";
      }
      out << '\n';
    }
    finish_output(out, paths.hyperedges);
  }
  if (!paths.nodes.empty()) {
    auto out = open_output(paths.nodes);
    for (const auto& id : ds.ids.ids()) out << id << '\n';
    finish_output(out, paths.nodes);
  }
  if (!paths.features.empty()) {
    auto out = open_output(paths.features);
    for (std::size_t v = 0; v < n; ++v) {
      out << ds.ids.external(static_cast<NodeId>(v));
      for (double x : ds.features.row(v)) out << ',' << format_double(x);
      out << '\n';
    }
    finish_output(out, paths.features);
  }
  if (!paths.labels.empty() && ds.labels) {
    auto out = open_output(paths.labels);
    for (std::size_t v = 0; v < n; ++v) {
      out << ds.ids.external(static_cast<NodeId>(v)) << ',' << ds.class_names[static_cast<std::size_t>((*ds.labels)[v])]
          << '\n';
    }
    finish_output(out, paths.labels);
  }
  if (!paths.splits.empty() && ds.splits) {
    json doc;
    auto to_ids = [&](const std::vector<NodeId>& nodes) {
      json arr = json::array();
      for (NodeId v : nodes) arr.push_back(ds.ids.external(v));
      return arr;
    };
    doc["train"] = to_ids(ds.splits->train);
    doc["test"] = to_ids(ds.splits->test);
    auto out = open_output(paths.splits);
    out << doc.dump(2) << '\n';
    finish_output(out, paths.splits);
  }
}

std::string result_to_json(const SelectionResult& result, const IdMap& ids, const SelectionConfig& cfg) {
  json doc;
  doc["tool"] = "hyperseed";
  doc["version"] = kVersion;
  doc["budget"] = result.seeds.size();
  json seeds = json::array();
  json indices = json::array();
  for (NodeId v : result.seeds) {
    seeds.push_back(ids.external(v));
    indices.push_back(v);
  }
  doc["seeds"] = std::move(seeds);
  doc["seed_indices"] = std::move(indices);
  doc["gains"] = result.gains;
  json moi = json::array();
  json edv_values = json::array();
  json objective = json::array();
  for (const auto& step : result.trace) {
    moi.push_back(step.moi);
    edv_values.push_back(step.edv);
    objective.push_back(step.objective);
  }
  doc["trace"] = {{"moi", moi}, {"edv", edv_values}, {"objective", objective}};
  doc["params"] = {
      {"k", cfg.k},
      {"alpha", cfg.alpha},
      {"beta", cfg.beta},
      {"gamma", cfg.gamma},
      {"backend", std::string(backend_name(cfg.backend))},
      {"theta", result.params.theta},
      {"theta_auto", result.params.theta_auto},
      {"radius", result.params.radius},
      {"radius_auto", result.params.radius_auto},
      {"moi_hat", result.moi_hat},
      {"edv_hat", result.edv_hat},
      {"seed", cfg.seed},
  };
  if (result.params.theta_auto) doc["params"]["theta_quantile"] = cfg.theta_quantile;
  if (result.params.radius_auto) doc["params"]["radius_quantile"] = cfg.radius_quantile;
  return doc.dump(2) + "\n";
}

void write_result(const SelectionResult& result, const IdMap& ids, const SelectionConfig& cfg,
                  const std::string& path) {
  const std::string text = result_to_json(result, ids, cfg);
  auto out = open_output(path);
  out << text;
  finish_output(out, path);
}

ResultDocument read_result(const std::string& path) {
  auto in = open_input(path);
  ResultDocument r;
  try {
    const json doc = json::parse(in);
    r.seeds = doc.at("seeds").get<std::vector<std::string>>();
    r.gains = doc.at("gains").get<std::vector<double>>();
    const auto& trace = doc.at("trace");
    const auto moi = trace.at("moi").get<std::vector<std::size_t>>();
    const auto edv_values = trace.at("edv").get<std::vector<double>>();
    const auto objective = trace.at("objective").get<std::vector<double>>();
    require(moi.size() == edv_values.size() && moi.size() == objective.size(), ErrorCode::kParse,
            path + ": trace arrays differ in length");
    for (std::size_t i = 0; i < moi.size(); ++i) r.trace.push_back({moi[i], edv_values[i], objective[i]});
    const auto& params = doc.at("params");
    r.theta = params.at("theta").get<double>();
    r.radius = params.at("radius").get<double>();
    r.moi_hat = params.at("moi_hat").get<double>();
    r.edv_hat = params.at("edv_hat").get<double>();
    r.version = doc.at("version").get<std::string>();
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, path + ": " + e.what());
  }
  return r;
}

std::vector<std::string> read_seed_file(const std::string& path) {
  std::string text;
  {
    auto in = open_input(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    try {
      return json::parse(body).at("seeds").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      fail(ErrorCode::kParse, path + ": " + e.what());
    }
  }
  std::vector<std::string> ids;
  std::istringstream lines{std::string(body)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skip_line(line)) continue;
    for (auto tok : split_ws(line)) {
      require(valid_id(tok), ErrorCode::kParse, where(path, line_no) + "malformed node id '" + std::string(tok) + "'");
      ids.emplace_back(tok);
    }
  }
  return ids;
}

}  // namespace hyperseed
