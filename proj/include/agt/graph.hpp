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

#ifndef AGT_GRAPH_HPP
#define AGT_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "agt/corpus.hpp"
#include "agt/identity.hpp"
#include "agt/types.hpp"

namespace agt {

enum class NodeOrigin : std::uint8_t { kOwnCurriculum, kAdvisorMention, kAdviseeMention };

inline std::string_view to_string(NodeOrigin origin) {
  switch (origin) {
    case NodeOrigin::kOwnCurriculum: return "OWN_CURRICULUM";
    case NodeOrigin::kAdvisorMention: return "ADVISOR_MENTION";
    case NodeOrigin::kAdviseeMention: return "ADVISEE_MENTION";
  }
  return "OWN_CURRICULUM";
}

inline NodeOrigin parse_node_origin(std::string_view text) {
  if (text == "OWN_CURRICULUM") return NodeOrigin::kOwnCurriculum;
  if (text == "ADVISOR_MENTION") return NodeOrigin::kAdvisorMention;
  if (text == "ADVISEE_MENTION") return NodeOrigin::kAdviseeMention;
  throw Error(ErrorCode::kInvalidEnum, "unknown node origin '" + std::string(text) + "'");
}

struct Work {
  std::string title;
  int year = 0;

  friend auto operator<=>(const Work&, const Work&) = default;
};

struct ResearcherNode {
  NodeId id;
  std::string display_name;
  std::string platform_id;
  bool has_curriculum = false;
  std::set<std::string> name_variants;
  std::set<std::string> institutions;
  std::set<Work> works;
  std::vector<DegreeEntry> degrees;
  NodeOrigin created_from = NodeOrigin::kOwnCurriculum;

  friend bool operator==(const ResearcherNode&, const ResearcherNode&) = default;
};

struct AdvisingEdge {
  NodeId advisor;
  NodeId advisee;
  DegreeLevel level = DegreeLevel::kPhd;
  Role role = Role::kAdvisor;
  std::optional<int> year;
  Evidence evidence = Evidence::kAdviseeSide;

  friend bool operator==(const AdvisingEdge&, const AdvisingEdge&) = default;
};

enum class RejectReason : std::uint8_t { kSelfLoop, kCycle };

inline std::string_view to_string(RejectReason reason) {
  return reason == RejectReason::kSelfLoop ? "SELF_LOOP" : "CYCLE";
}

struct RejectedEdge {
  NodeId advisor;
  NodeId advisee;
  DegreeLevel level = DegreeLevel::kPhd;
  Role role = Role::kAdvisor;
  RejectReason reason = RejectReason::kCycle;

  friend bool operator==(const RejectedEdge&, const RejectedEdge&) = default;
};

// Non-fatal oddities met while building (defaulted fields and the like).
struct Anomaly {
  RecordOrigin origin;
  std::string message;

  friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

// One resolved name occurrence: which node a mention in a record became.
// field is "owner", "degree[i].advisor", "degree[i].coadvisor[j]" or
// "mentorship[i]".
struct MentionLink {
  RecordOrigin origin;
  std::string field;
  std::string text;
  NodeId node;

  friend bool operator==(const MentionLink&, const MentionLink&) = default;
};

struct EdgeOutcome {
  enum class Kind : std::uint8_t { kAdded, kDeduplicated, kRejected };

  Kind kind = Kind::kAdded;
  std::optional<RejectReason> reason;
  std::size_t edge_index = 0;  // valid unless rejected

  friend bool operator==(const EdgeOutcome&, const EdgeOutcome&) = default;
};

// Global advisor -> advisee DAG. Node ids are dense and stable; edges are
// unique per (advisor, advisee, level, role).
class GenealogyGraph {
 public:
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<ResearcherNode>& nodes() const { return nodes_; }
  const std::vector<AdvisingEdge>& edges() const { return edges_; }
  const ResearcherNode& node(NodeId id) const { return nodes_.at(id.value); }
  ResearcherNode& node(NodeId id) { return nodes_.at(id.value); }
  bool contains(NodeId id) const { return id.value < nodes_.size(); }

  const std::vector<std::size_t>& out_edges(NodeId id) const { return out_.at(id.value); }
  const std::vector<std::size_t>& in_edges(NodeId id) const { return in_.at(id.value); }
  std::size_t out_degree(NodeId id) const { return out_.at(id.value).size(); }
  std::size_t in_degree(NodeId id) const { return in_.at(id.value).size(); }

  const IdentityIndex& identity() const { return index_; }

  const std::vector<RejectedEdge>& rejected_edges() const { return rejected_; }
  const std::vector<Anomaly>& anomalies() const { return anomalies_; }
  const std::vector<MentionLink>& mentions() const { return mentions_; }

  NodeId add_node(std::string display_name, NodeOrigin origin) {
    NodeId id{static_cast<std::uint32_t>(nodes_.size())};
    ResearcherNode node;
    node.id = id;
    node.display_name = std::move(display_name);
    node.created_from = origin;
    nodes_.push_back(std::move(node));
    out_.emplace_back();
    in_.emplace_back();
    index_.track_nodes(nodes_.size());
    return id;
  }

  // Records identity attributes on the node and in the identity index.
  void register_attributes(NodeId id, const IdentityQuery& attrs) {
    auto& n = node(id);
    index_.register_node(id, attrs);
    if (const auto name = trim(attrs.name); !name.empty()) n.name_variants.insert(name);
    if (!attrs.platform_id.empty()) n.platform_id = attrs.platform_id;
    if (const auto inst = trim(attrs.institution); !inst.empty()) n.institutions.insert(inst);
    if (const auto title = trim(attrs.work_title); !title.empty() && attrs.year) n.works.insert({title, *attrs.year});
  }

  // Would advisor -> advisee close a directed cycle?
  bool reaches(NodeId from, NodeId to) const {
    if (from == to) return true;
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<NodeId> stack{from};
    seen[from.value] = 1;
    while (!stack.empty()) {
      const auto cur = stack.back();
      stack.pop_back();
      for (const auto e : out_[cur.value]) {
        const auto next = edges_[e].advisee;
        if (next == to) return true;
        if (!seen[next.value]) {
          seen[next.value] = 1;
          stack.push_back(next);
        }
      }
    }
    return false;
  }

  // Adds the edge unless it is a self-loop or would close a cycle; a repeat
  // of an existing (advisor, advisee, level, role) merges evidence.
  EdgeOutcome add_edge_checked(NodeId advisor, NodeId advisee, DegreeLevel level, Role role, Evidence evidence,
                               std::optional<int> year = std::nullopt) {
    if (!contains(advisor) || !contains(advisee)) {
      throw Error(ErrorCode::kUnknownNode, "edge endpoint is not in the graph");
    }
    if (advisor == advisee) {
      rejected_.push_back({advisor, advisee, level, role, RejectReason::kSelfLoop});
      return {EdgeOutcome::Kind::kRejected, RejectReason::kSelfLoop, 0};
    }
    const auto key = std::make_tuple(advisor, advisee, level, role);
    if (const auto it = edge_by_key_.find(key); it != edge_by_key_.end()) {
      auto& edge = edges_[it->second];
      edge.evidence = merge_evidence(edge.evidence, evidence);
      if (!edge.year) edge.year = year;
      return {EdgeOutcome::Kind::kDeduplicated, std::nullopt, it->second};
    }
    if (reaches(advisee, advisor)) {
      rejected_.push_back({advisor, advisee, level, role, RejectReason::kCycle});
      return {EdgeOutcome::Kind::kRejected, RejectReason::kCycle, 0};
    }
    const auto index = edges_.size();
    edges_.push_back({advisor, advisee, level, role, year, evidence});
    out_[advisor.value].push_back(index);
    in_[advisee.value].push_back(index);
    edge_by_key_.emplace(key, index);
    return {EdgeOutcome::Kind::kAdded, std::nullopt, index};
  }

  void add_anomaly(RecordOrigin origin, std::string message) {
    anomalies_.push_back({std::move(origin), std::move(message)});
  }

  void add_mention(RecordOrigin origin, std::string field, std::string text, NodeId node) {
    mentions_.push_back({std::move(origin), std::move(field), std::move(text), node});
  }

  // Restores a rejected-edge log entry verbatim (used when loading a saved graph).
  void restore_rejected(RejectedEdge rejected) { rejected_.push_back(rejected); }

  friend bool operator==(const GenealogyGraph& a, const GenealogyGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ && a.rejected_ == b.rejected_ &&
           a.anomalies_ == b.anomalies_ && a.mentions_ == b.mentions_;
  }

 private:
  std::vector<ResearcherNode> nodes_;
  std::vector<AdvisingEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::map<std::tuple<NodeId, NodeId, DegreeLevel, Role>, std::size_t> edge_by_key_;
  IdentityIndex index_;
  std::vector<RejectedEdge> rejected_;
  std::vector<Anomaly> anomalies_;
  std::vector<MentionLink> mentions_;
};

// Kahn's algorithm over the advisor -> advisee edges. Returns nullopt if the
// graph has a cycle.
inline std::optional<std::vector<NodeId>> topological_order(const GenealogyGraph& graph) {
  const auto n = graph.node_count();
  std::vector<std::size_t> in_degree(n);
  std::vector<NodeId> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    in_degree[v] = graph.in_degree(NodeId{v});
    if (in_degree[v] == 0) ready.push_back(NodeId{v});
  }
  std::vector<NodeId> order;
  order.reserve(n);
  for (std::size_t head = 0; head < ready.size(); ++head) {
    const auto v = ready[head];
    order.push_back(v);
    for (const auto e : graph.out_edges(v)) {
      const auto w = graph.edges()[e].advisee;
      if (--in_degree[w.value] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

inline bool is_acyclic(const GenealogyGraph& graph) { return topological_order(graph).has_value(); }

}  // namespace agt

#endif  // AGT_GRAPH_HPP
