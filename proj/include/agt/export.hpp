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

#ifndef AGT_EXPORT_HPP
#define AGT_EXPORT_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "agt/graph.hpp"

namespace agt {

struct ViewNode {
  NodeId id;
  std::string name;
  int level = 0;  // < 0 advisors of the focus, 0 focus, > 0 advisees
  bool has_curriculum = false;

  friend bool operator==(const ViewNode&, const ViewNode&) = default;
};

struct ViewEdge {
  NodeId advisor;
  NodeId advisee;
  DegreeLevel level = DegreeLevel::kPhd;
  Role role = Role::kAdvisor;
  bool cross_level = false;  // endpoint levels do not differ by exactly 1

  friend bool operator==(const ViewEdge&, const ViewEdge&) = default;
};

// Nodes are ordered by (level, name, id); edges follow node order.
struct SubtreeView {
  std::optional<NodeId> focus;
  std::vector<ViewNode> nodes;
  std::vector<ViewEdge> edges;

  std::map<NodeId, int> level_of() const {
    std::map<NodeId, int> out;
    for (const auto& n : nodes) out.emplace(n.id, n.level);
    return out;
  }

  friend bool operator==(const SubtreeView&, const SubtreeView&) = default;
};

enum class ExportFormat : std::uint8_t { kDot, kGraphMl, kViewJson };

inline ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::kDot;
  if (text == "graphml") return ExportFormat::kGraphMl;
  if (text == "json") return ExportFormat::kViewJson;
  throw Error(ErrorCode::kInvalidEnum, "unknown export format '" + std::string(text) + "'");
}

namespace detail {

// Sorts nodes, then collects every graph edge whose endpoints are both in
// the view.
inline SubtreeView finish_view(const GenealogyGraph& graph, std::optional<NodeId> focus,
                               const std::unordered_map<NodeId, int>& levels) {
  SubtreeView view;
  view.focus = focus;
  for (const auto& [id, level] : levels) {
    const auto& n = graph.node(id);
    view.nodes.push_back({id, n.display_name, level, n.has_curriculum});
  }
  std::sort(view.nodes.begin(), view.nodes.end(), [](const ViewNode& a, const ViewNode& b) {
    return std::tie(a.level, a.name, a.id) < std::tie(b.level, b.name, b.id);
  });
  std::unordered_map<NodeId, std::size_t> position;
  for (std::size_t i = 0; i < view.nodes.size(); ++i) position.emplace(view.nodes[i].id, i);
  for (const auto& n : view.nodes) {
    for (const auto e : graph.out_edges(n.id)) {
      const auto& edge = graph.edges()[e];
      const auto it = levels.find(edge.advisee);
      if (it == levels.end()) continue;
      view.edges.push_back({edge.advisor, edge.advisee, edge.level, edge.role, it->second - n.level != 1});
    }
  }
  std::sort(view.edges.begin(), view.edges.end(), [&](const ViewEdge& a, const ViewEdge& b) {
    return std::make_tuple(position.at(a.advisor), position.at(a.advisee), a.level, a.role) <
           std::make_tuple(position.at(b.advisor), position.at(b.advisee), b.level, b.role);
  });
  return view;
}

}  // namespace detail

// Ancestors within `up` levels and descendants within `down` levels of the
// focus, levelled by BFS distance (negative above the focus).
inline SubtreeView export_subtree(const GenealogyGraph& graph, NodeId focus, std::size_t up, std::size_t down) {
  if (!graph.contains(focus)) throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(focus.value) + " does not exist");
  std::unordered_map<NodeId, int> levels{{focus, 0}};
  const auto walk = [&](bool upward, std::size_t bound) {
    std::vector<NodeId> frontier{focus};
    for (std::size_t d = 1; d <= bound && !frontier.empty(); ++d) {
      std::vector<NodeId> next;
      for (const auto v : frontier) {
        for (const auto e : upward ? graph.in_edges(v) : graph.out_edges(v)) {
          const auto w = upward ? graph.edges()[e].advisor : graph.edges()[e].advisee;
          if (levels.emplace(w, upward ? -static_cast<int>(d) : static_cast<int>(d)).second) next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
  };
  walk(true, up);
  walk(false, down);
  return detail::finish_view(graph, focus, levels);
}

// The whole graph; level is the distance from the nearest root.
inline SubtreeView whole_graph_view(const GenealogyGraph& graph) {
  std::unordered_map<NodeId, int> levels;
  std::vector<NodeId> frontier;
  for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
    if (graph.in_degree(NodeId{v}) == 0) {
      levels.emplace(NodeId{v}, 0);
      frontier.push_back(NodeId{v});
    }
  }
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<NodeId> next;
    for (const auto v : frontier) {
      for (const auto e : graph.out_edges(v)) {
        const auto w = graph.edges()[e].advisee;
        if (levels.emplace(w, d).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return detail::finish_view(graph, std::nullopt, levels);
}

inline nlohmann::ordered_json to_view_json(const SubtreeView& view) {
  nlohmann::ordered_json doc;
  doc["focus"] = view.focus ? nlohmann::ordered_json(view.focus->value) : nlohmann::ordered_json();
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : view.nodes) {
    doc["nodes"].push_back({{"id", n.id.value}, {"name", n.name}, {"level", n.level}, {"has_curriculum", n.has_curriculum}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : view.edges) {
    doc["edges"].push_back(
        {{"advisor", e.advisor.value}, {"advisee", e.advisee.value}, {"level", to_string(e.level)}, {"role", to_string(e.role)}});
  }
  return doc;
}

inline SubtreeView parse_view_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text.begin(), text.end());
  SubtreeView view;
  if (!doc.at("focus").is_null()) view.focus = NodeId{doc.at("focus").get<std::uint32_t>()};
  std::map<NodeId, int> levels;
  for (const auto& n : doc.at("nodes")) {
    ViewNode node{NodeId{n.at("id").get<std::uint32_t>()}, n.at("name").get<std::string>(), n.at("level").get<int>(),
                  n.at("has_curriculum").get<bool>()};
    levels.emplace(node.id, node.level);
    view.nodes.push_back(std::move(node));
  }
  for (const auto& e : doc.at("edges")) {
    ViewEdge edge{NodeId{e.at("advisor").get<std::uint32_t>()}, NodeId{e.at("advisee").get<std::uint32_t>()},
                  parse_degree_level(e.at("level").get<std::string>()), parse_role(e.at("role").get<std::string>()), false};
    edge.cross_level = levels.at(edge.advisee) - levels.at(edge.advisor) != 1;
    view.edges.push_back(edge);
  }
  return view;
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string export_dot(const SubtreeView& view) {
  std::string out = "digraph agt {\n  rankdir=TB;\n";
  for (const auto& n : view.nodes) {
    out += "  n" + std::to_string(n.id.value) + " [label=" + dot_quote(n.name) + ", level=" + std::to_string(n.level) +
           ", has_curriculum=" + (n.has_curriculum ? "true" : "false") + "];\n";
  }
  for (const auto& e : view.edges) {
    out += "  n" + std::to_string(e.advisor.value) + " -> n" + std::to_string(e.advisee.value) + " [degree=" +
           std::string(to_string(e.level)) + ", role=" + std::string(to_string(e.role));
    if (e.cross_level) out += ", cross_level=true, style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

inline std::string export_graphml(const SubtreeView& view) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
      "  <key id=\"level\" for=\"node\" attr.name=\"level\" attr.type=\"int\"/>\n"
      "  <key id=\"has_curriculum\" for=\"node\" attr.name=\"has_curriculum\" attr.type=\"boolean\"/>\n"
      "  <key id=\"degree\" for=\"edge\" attr.name=\"degree\" attr.type=\"string\"/>\n"
      "  <key id=\"role\" for=\"edge\" attr.name=\"role\" attr.type=\"string\"/>\n"
      "  <key id=\"cross_level\" for=\"edge\" attr.name=\"cross_level\" attr.type=\"boolean\"/>\n";
  out += "  <graph id=\"agt\" edgedefault=\"directed\"";
  if (view.focus) out += " focus=\"n" + std::to_string(view.focus->value) + "\"";
  out += ">\n";
  for (const auto& n : view.nodes) {
    out += "    <node id=\"n" + std::to_string(n.id.value) + "\">\n";
    out += "      <data key=\"name\">" + xml_escape(n.name) + "</data>\n";
    out += "      <data key=\"level\">" + std::to_string(n.level) + "</data>\n";
    out += std::string("      <data key=\"has_curriculum\">") + (n.has_curriculum ? "true" : "false") + "</data>\n";
    out += "    </node>\n";
  }
  std::size_t index = 0;
  for (const auto& e : view.edges) {
    out += "    <edge id=\"e" + std::to_string(index++) + "\" source=\"n" + std::to_string(e.advisor.value) + "\" target=\"n" +
           std::to_string(e.advisee.value) + "\">\n";
    out += "      <data key=\"degree\">" + std::string(to_string(e.level)) + "</data>\n";
    out += "      <data key=\"role\">" + std::string(to_string(e.role)) + "</data>\n";
    out += std::string("      <data key=\"cross_level\">") + (e.cross_level ? "true" : "false") + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

}  // namespace detail

inline std::string export_interchange(const SubtreeView& view, ExportFormat format) {
  switch (format) {
    case ExportFormat::kDot: return detail::export_dot(view);
    case ExportFormat::kGraphMl: return detail::export_graphml(view);
    case ExportFormat::kViewJson: return to_view_json(view).dump();
  }
  return {};
}

inline std::string export_interchange(const GenealogyGraph& graph, ExportFormat format) {
  return export_interchange(whole_graph_view(graph), format);
}

}  // namespace agt

#endif  // AGT_EXPORT_HPP
