// Copyright 2026 The AGT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Aggregate statistics of a genealogy graph.
//
// A root is a node without a known advisor and defines one tree: every node
// reachable from it. Trees overlap when a node has advisors in different
// trees. Two width-like averages are reported:
//   avg_branching   edges / nodes with at least one advisee
//   avg_out_degree  edges / all nodes
// They coincide only when every node advised someone.

#ifndef AGT_ANALYTICS_HPP
#define AGT_ANALYTICS_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "agt/corpus.hpp"
#include "agt/graph.hpp"

namespace agt {

struct TreeProfile {
  NodeId root;
  std::size_t size = 1;
  std::size_t depth = 0;
  std::size_t max_width = 1;

  friend bool operator==(const TreeProfile&, const TreeProfile&) = default;
};

using CountryTable = std::map<std::pair<std::string, DegreeLevel>, std::size_t>;

struct CountryRow {
  std::string country;
  std::size_t phd = 0;
  std::size_t masters = 0;

  friend bool operator==(const CountryRow&, const CountryRow&) = default;
};

struct MetricsReport {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::size_t num_trees = 0;
  std::size_t num_components = 0;
  double avg_tree_size = 0.0;
  double avg_branching = 0.0;
  double avg_out_degree = 0.0;
  double mean_width_depth_ratio = 0.0;
  std::vector<std::pair<std::size_t, double>> size_cdf;
  std::map<std::size_t, std::size_t> depth_histogram;
  CountryTable country_table;
};

inline std::vector<NodeId> roots(const GenealogyGraph& graph) {
  std::vector<NodeId> out;
  for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
    if (graph.in_degree(NodeId{v}) == 0) out.push_back(NodeId{v});
  }
  return out;
}

// Weakly connected components (union-find, edge direction ignored).
inline std::size_t components(const GenealogyGraph& graph) {
  std::vector<std::uint32_t> parent(graph.node_count());
  std::iota(parent.begin(), parent.end(), 0u);
  const auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::size_t count = graph.node_count();
  for (const auto& e : graph.edges()) {
    const auto a = find(e.advisor.value);
    const auto b = find(e.advisee.value);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --count;
    }
  }
  return count;
}

// Length in edges of the longest path leaving each node.
inline std::vector<std::size_t> node_heights(const GenealogyGraph& graph) {
  const auto order = topological_order(graph);
  if (!order) throw Error(ErrorCode::kInvalidValue, "graph has a cycle");
  std::vector<std::size_t> height(graph.node_count(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    for (const auto e : graph.out_edges(*it)) {
      height[it->value] = std::max(height[it->value], height[graph.edges()[e].advisee.value] + 1);
    }
  }
  return height;
}

namespace detail {

inline TreeProfile profile_with_heights(const GenealogyGraph& graph, NodeId root, const std::vector<std::size_t>& heights,
                                        std::vector<std::uint32_t>& stamp, std::uint32_t mark) {
  TreeProfile p{root, 0, heights[root.value], 0};
  std::vector<NodeId> level{root};
  stamp[root.value] = mark;
  while (!level.empty()) {
    p.size += level.size();
    p.max_width = std::max(p.max_width, level.size());
    std::vector<NodeId> next;
    for (const auto v : level) {
      for (const auto e : graph.out_edges(v)) {
        const auto w = graph.edges()[e].advisee;
        if (stamp[w.value] != mark) {
          stamp[w.value] = mark;
          next.push_back(w);
        }
      }
    }
    level = std::move(next);
  }
  return p;
}

}  // namespace detail

inline TreeProfile tree_profile(const GenealogyGraph& graph, NodeId root) {
  if (!graph.contains(root)) throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(root.value) + " does not exist");
  if (graph.in_degree(root) != 0) throw Error(ErrorCode::kNotARoot, "node " + std::to_string(root.value) + " has an advisor");
  std::vector<std::uint32_t> stamp(graph.node_count(), 0);
  return detail::profile_with_heights(graph, root, node_heights(graph), stamp, 1);
}

// Profiles of every tree, ordered by root id.
inline std::vector<TreeProfile> tree_profiles(const GenealogyGraph& graph) {
  const auto heights = node_heights(graph);
  std::vector<std::uint32_t> stamp(graph.node_count(), 0);
  std::vector<TreeProfile> out;
  std::uint32_t mark = 0;
  for (const auto root : roots(graph)) {
    out.push_back(detail::profile_with_heights(graph, root, heights, stamp, ++mark));
  }
  return out;
}

inline std::vector<std::pair<std::size_t, double>> size_cdf(const std::vector<TreeProfile>& profiles) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& p : profiles) ++counts[p.size];
  std::vector<std::pair<std::size_t, double>> cdf;
  std::size_t running = 0;
  for (const auto& [size, count] : counts) {
    running += count;
    cdf.emplace_back(size, running == profiles.size() ? 1.0
                                                     : static_cast<double>(running) / static_cast<double>(profiles.size()));
  }
  return cdf;
}

inline std::vector<std::pair<std::size_t, double>> size_cdf(const GenealogyGraph& graph) {
  const auto profiles = tree_profiles(graph);
  if (profiles.empty()) throw Error(ErrorCode::kNoTrees, "graph has no trees");
  return size_cdf(profiles);
}

inline bool is_home_country(std::string_view country, std::string_view home) {
  return fold_text(country) == fold_text(home);
}

inline void count_degrees(CountryTable& table, const std::vector<DegreeEntry>& degrees, std::string_view home) {
  for (const auto& d : degrees) {
    if (d.country.empty() || is_home_country(d.country, home)) continue;
    ++table[{d.country, d.level}];
  }
}

// Degrees earned outside the home country, keyed by (country, level).
inline CountryTable country_table(const Corpus& corpus, std::string_view home = "Brazil") {
  CountryTable table;
  for (const auto& r : corpus.records) count_degrees(table, r.degrees, home);
  return table;
}

// Same count over the curricula stored in a graph.
inline CountryTable country_table(const GenealogyGraph& graph, std::string_view home = "Brazil") {
  CountryTable table;
  for (const auto& n : graph.nodes()) {
    if (n.has_curriculum) count_degrees(table, n.degrees, home);
  }
  return table;
}

// Rows ordered by PhD count descending, then Master's count, then name.
inline std::vector<CountryRow> country_rows(const CountryTable& table) {
  std::map<std::string, CountryRow> by_country;
  for (const auto& [key, count] : table) {
    auto& row = by_country[key.first];
    row.country = key.first;
    (key.second == DegreeLevel::kPhd ? row.phd : row.masters) += count;
  }
  std::vector<CountryRow> rows;
  for (auto& [_, row] : by_country) rows.push_back(std::move(row));
  std::stable_sort(rows.begin(), rows.end(), [](const CountryRow& a, const CountryRow& b) {
    if (a.phd != b.phd) return a.phd > b.phd;
    return a.masters > b.masters;
  });
  return rows;
}

inline MetricsReport summarize(const GenealogyGraph& graph, const std::vector<TreeProfile>& profiles,
                               std::string_view home_country = "Brazil") {
  MetricsReport r;
  r.num_nodes = graph.node_count();
  r.num_edges = graph.edge_count();
  r.num_trees = profiles.size();
  r.num_components = components(graph);
  r.country_table = country_table(graph, home_country);
  if (r.num_nodes > 0) r.avg_out_degree = static_cast<double>(r.num_edges) / static_cast<double>(r.num_nodes);
  std::size_t advisors = 0;
  for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
    if (graph.out_degree(NodeId{v}) > 0) ++advisors;
  }
  if (advisors > 0) r.avg_branching = static_cast<double>(r.num_edges) / static_cast<double>(advisors);
  if (profiles.empty()) return r;

  std::size_t total_size = 0;
  double ratio_sum = 0.0;
  std::size_t ratio_trees = 0;
  for (const auto& p : profiles) {
    total_size += p.size;
    ++r.depth_histogram[p.depth];
    if (p.depth >= 1) {
      ratio_sum += static_cast<double>(p.max_width) / static_cast<double>(p.depth);
      ++ratio_trees;
    }
  }
  r.avg_tree_size = static_cast<double>(total_size) / static_cast<double>(profiles.size());
  if (ratio_trees > 0) r.mean_width_depth_ratio = ratio_sum / static_cast<double>(ratio_trees);
  r.size_cdf = size_cdf(profiles);
  return r;
}

inline MetricsReport summarize(const GenealogyGraph& graph, std::string_view home_country = "Brazil") {
  return summarize(graph, tree_profiles(graph), home_country);
}

inline nlohmann::ordered_json to_json(const MetricsReport& r) {
  nlohmann::ordered_json doc;
  doc["num_nodes"] = r.num_nodes;
  doc["num_edges"] = r.num_edges;
  doc["num_trees"] = r.num_trees;
  doc["num_components"] = r.num_components;
  doc["avg_tree_size"] = r.avg_tree_size;
  doc["avg_branching"] = r.avg_branching;
  doc["avg_out_degree"] = r.avg_out_degree;
  doc["mean_width_depth_ratio"] = r.mean_width_depth_ratio;
  doc["size_cdf"] = nlohmann::ordered_json::array();
  for (const auto& [size, fraction] : r.size_cdf) doc["size_cdf"].push_back({{"size", size}, {"fraction", fraction}});
  doc["depth_histogram"] = nlohmann::ordered_json::array();
  for (const auto& [depth, trees] : r.depth_histogram) doc["depth_histogram"].push_back({{"depth", depth}, {"trees", trees}});
  doc["country_table"] = nlohmann::ordered_json::array();
  for (const auto& row : country_rows(r.country_table)) {
    doc["country_table"].push_back({{"country", row.country}, {"phd", row.phd}, {"masters", row.masters}});
  }
  return doc;
}

inline nlohmann::ordered_json to_json(const TreeProfile& p, const GenealogyGraph& graph) {
  return {{"root", p.root.value},
          {"name", graph.node(p.root).display_name},
          {"size", p.size},
          {"depth", p.depth},
          {"max_width", p.max_width}};
}

inline std::string size_cdf_csv(const MetricsReport& r) {
  std::string out = "size,cumulative_fraction\n";
  for (const auto& [size, fraction] : r.size_cdf) {
    out += std::to_string(size) + "," + nlohmann::json(fraction).dump() + "\n";
  }
  return out;
}

inline std::string depth_histogram_csv(const MetricsReport& r) {
  std::string out = "depth,trees\n";
  for (const auto& [depth, trees] : r.depth_histogram) out += std::to_string(depth) + "," + std::to_string(trees) + "\n";
  return out;
}

// The largest `k` trees by size; ties go to the smaller root id.
inline std::vector<TreeProfile> largest_trees(std::vector<TreeProfile> profiles, std::size_t k) {
  std::stable_sort(profiles.begin(), profiles.end(), [](const TreeProfile& a, const TreeProfile& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.root < b.root;
  });
  if (profiles.size() > k) profiles.resize(k);
  return profiles;
}

}  // namespace agt

#endif  // AGT_ANALYTICS_HPP
