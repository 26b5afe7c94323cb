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

// Tiered identity resolution of name mentions.
//
// Signals are tried strongest first:
//   T1  platform identifier
//   T2  name + work title + year of defense
//   T3  name + institution
//   T4  name alone, only when exactly one node carries that name
// A tier with exactly one candidate resolves; a tier with two or more
// candidates stops the walk as AMBIGUOUS. Nodes registered with a different
// platform identifier than the query's are never candidates.

#ifndef AGT_IDENTITY_HPP
#define AGT_IDENTITY_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agt/error.hpp"
#include "agt/text.hpp"
#include "agt/types.hpp"

namespace agt {

struct IdentityQuery {
  std::string name;
  std::string platform_id;
  std::string institution;
  std::string work_title;
  std::optional<int> year;
};

enum class MatchTier : std::uint8_t { kPlatformId = 1, kNameTitleYear = 2, kNameInstitution = 3, kUniqueName = 4 };

inline std::string_view to_string(MatchTier tier) {
  switch (tier) {
    case MatchTier::kPlatformId: return "T1_PLATFORM_ID";
    case MatchTier::kNameTitleYear: return "T2_NAME_TITLE_YEAR";
    case MatchTier::kNameInstitution: return "T3_NAME_INSTITUTION";
    case MatchTier::kUniqueName: return "T4_UNIQUE_NAME";
  }
  return "T4_UNIQUE_NAME";
}

struct MatchResult {
  enum class Outcome : std::uint8_t { kFound, kAmbiguous, kNotFound };

  Outcome outcome = Outcome::kNotFound;
  std::optional<MatchTier> tier;      // set for kFound and kAmbiguous
  std::vector<NodeId> candidates;     // one for kFound, >= 2 for kAmbiguous

  bool found() const { return outcome == Outcome::kFound; }
  NodeId node() const { return candidates.front(); }

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

class IdentityIndex {
 public:
  // Makes node ids [0, count) valid registration targets.
  void track_nodes(std::size_t count) {
    if (count > node_count_) {
      node_count_ = count;
      nodes_.resize(count);
    }
  }
  std::size_t tracked_nodes() const { return node_count_; }

  // Indexes every non-empty attribute of `attrs` under `node`. Registering
  // the same attributes again changes nothing.
  void register_node(NodeId node, const IdentityQuery& attrs) {
    if (node.value >= node_count_) throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(node.value) + " is not in the graph");
    auto& entry = nodes_[node.value];
    if (!attrs.platform_id.empty()) {
      if (!entry.platform_id.empty() && entry.platform_id != attrs.platform_id) {
        throw Error(ErrorCode::kInvalidValue, "node " + std::to_string(node.value) + " already has platform id " + entry.platform_id);
      }
      const auto [it, inserted] = by_platform_id_.emplace(attrs.platform_id, node);
      if (!inserted && it->second != node) {
        throw Error(ErrorCode::kInvalidValue, "platform id " + attrs.platform_id + " already belongs to another node");
      }
      entry.platform_id = attrs.platform_id;
    }
    if (!trim(attrs.name).empty()) {
      by_name_[normalize_name(attrs.name).normalized].insert(node);
    }
    if (auto inst = fold_text(attrs.institution); !inst.empty()) entry.institutions.insert(std::move(inst));
    if (auto title = fold_text(attrs.work_title); !title.empty() && attrs.year) {
      entry.works.emplace(std::move(title), *attrs.year);
    }
  }

  // Number of indexed (key, node) associations.
  std::size_t entry_count() const {
    std::size_t n = by_platform_id_.size();
    for (const auto& [_, ids] : by_name_) n += ids.size();
    for (const auto& e : nodes_) n += e.institutions.size() + e.works.size();
    return n;
  }

  const std::set<NodeId>* nodes_named(const std::string& normalized) const {
    const auto it = by_name_.find(normalized);
    return it == by_name_.end() ? nullptr : &it->second;
  }

  std::optional<NodeId> node_with_platform_id(const std::string& id) const {
    const auto it = by_platform_id_.find(id);
    if (it == by_platform_id_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& platform_id_of(NodeId node) const { return nodes_.at(node.value).platform_id; }

  bool has_institution(NodeId node, const std::string& folded) const {
    return nodes_.at(node.value).institutions.contains(folded);
  }

  bool has_work(NodeId node, const std::string& folded_title, int year) const {
    return nodes_.at(node.value).works.contains({folded_title, year});
  }

 private:
  struct NodeEntry {
    std::string platform_id;
    std::set<std::string> institutions;
    std::set<std::pair<std::string, int>> works;
  };

  std::size_t node_count_ = 0;
  std::map<std::string, NodeId> by_platform_id_;
  std::map<std::string, std::set<NodeId>> by_name_;
  std::vector<NodeEntry> nodes_;
};

// Resolves one person described by several signal sets (for example one per
// degree of a curriculum). All queries must share name and platform_id; per
// tier the candidates of every query are pooled.
inline MatchResult resolve(const IdentityIndex& index, std::span<const IdentityQuery> queries) {
  MatchResult result;
  if (queries.empty()) return result;
  const auto& first = queries.front();

  if (!first.platform_id.empty()) {
    if (const auto node = index.node_with_platform_id(first.platform_id)) {
      result.outcome = MatchResult::Outcome::kFound;
      result.tier = MatchTier::kPlatformId;
      result.candidates = {*node};
      return result;
    }
  }

  const auto key = normalize_name(first.name).normalized;
  const auto* named = index.nodes_named(key);
  if (named == nullptr) return result;

  const auto compatible = [&](NodeId node) {
    const auto& pid = index.platform_id_of(node);
    return first.platform_id.empty() || pid.empty() || pid == first.platform_id;
  };

  const auto decide = [&](const std::set<NodeId>& candidates, MatchTier tier) -> bool {
    if (candidates.empty()) return false;
    result.outcome = candidates.size() == 1 ? MatchResult::Outcome::kFound : MatchResult::Outcome::kAmbiguous;
    result.tier = tier;
    result.candidates.assign(candidates.begin(), candidates.end());
    return true;
  };

  std::set<NodeId> tier2;
  std::set<NodeId> tier3;
  for (const auto& q : queries) {
    const auto title = fold_text(q.work_title);
    const auto inst = fold_text(q.institution);
    for (const auto node : *named) {
      if (!compatible(node)) continue;
      if (!title.empty() && q.year && index.has_work(node, title, *q.year)) tier2.insert(node);
      if (!inst.empty() && index.has_institution(node, inst)) tier3.insert(node);
    }
  }
  if (decide(tier2, MatchTier::kNameTitleYear)) return result;
  if (decide(tier3, MatchTier::kNameInstitution)) return result;

  std::set<NodeId> tier4;
  for (const auto node : *named) {
    if (compatible(node)) tier4.insert(node);
  }
  decide(tier4, MatchTier::kUniqueName);
  return result;
}

inline MatchResult resolve(const IdentityIndex& index, const IdentityQuery& query) {
  return resolve(index, std::span<const IdentityQuery>(&query, 1));
}

}  // namespace agt

#endif  // AGT_IDENTITY_HPP
