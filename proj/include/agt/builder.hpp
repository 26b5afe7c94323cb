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

// Genealogy graph construction from a chronologically sorted corpus.
//
// Every curriculum contributes three steps: find or create the owner's node,
// find or create the nodes of the advisors named in the owner's degrees and
// connect them to the owner, and find or create the node of every advisee in
// the owner's mentorship list and connect the owner to it. All edges point
// advisor -> advisee.
//
// build_graph applies the first step to every record before linking any of
// them, so that a name shared by several curriculum owners is already known
// to be ambiguous when it shows up as a bare mention.

#ifndef AGT_BUILDER_HPP
#define AGT_BUILDER_HPP

#include <string>
#include <vector>

#include "agt/corpus.hpp"
#include "agt/graph.hpp"
#include "agt/identity.hpp"

namespace agt {

struct UpsertOutcome {
  NodeId node;
  bool created = false;
  MatchResult match;
};

namespace detail {

inline std::vector<IdentityQuery> owner_queries(const CurriculumRecord& record) {
  std::vector<IdentityQuery> queries;
  for (const auto& d : record.degrees) {
    queries.push_back({record.full_name, record.record_id, d.institution, d.thesis_title, d.year});
  }
  queries.push_back({record.full_name, record.record_id, record.institution, {}, std::nullopt});
  return queries;
}

// Resolves a mention, creating a node for NOT_FOUND and AMBIGUOUS outcomes.
inline NodeId resolve_or_create(GenealogyGraph& graph, const IdentityQuery& query, NodeOrigin origin) {
  const auto match = resolve(graph.identity(), query);
  const auto node = match.found() ? match.node() : graph.add_node(query.name, origin);
  graph.register_attributes(node, query);
  return node;
}

}  // namespace detail

inline UpsertOutcome upsert_researcher(GenealogyGraph& graph, const CurriculumRecord& record,
                                       const RecordOrigin& origin = {}) {
  const auto queries = detail::owner_queries(record);
  UpsertOutcome out;
  out.match = resolve(graph.identity(), queries);
  if (out.match.found()) {
    out.node = out.match.node();
  } else {
    out.node = graph.add_node(record.full_name, NodeOrigin::kOwnCurriculum);
    out.created = true;
  }

  auto& node = graph.node(out.node);
  node.display_name = record.full_name;
  node.has_curriculum = true;
  for (const auto& d : record.degrees) {
    if (std::find(node.degrees.begin(), node.degrees.end(), d) == node.degrees.end()) node.degrees.push_back(d);
  }
  for (const auto& q : queries) graph.register_attributes(out.node, q);
  for (const auto& alias : record.citation_names) {
    if (!fold_tokens(alias).empty()) graph.register_attributes(out.node, IdentityQuery{alias, {}, {}, {}, std::nullopt});
  }
  graph.add_mention(origin, "owner", record.full_name, out.node);
  return out;
}

// Advisors are matched on name plus the institution of the degree.
inline std::vector<EdgeOutcome> link_advisors(GenealogyGraph& graph, NodeId owner, const CurriculumRecord& record,
                                              const RecordOrigin& origin = {}) {
  std::vector<EdgeOutcome> outcomes;
  for (std::size_t i = 0; i < record.degrees.size(); ++i) {
    const auto& d = record.degrees[i];
    const auto link = [&](const std::string& name, Role role, std::string field) {
      const IdentityQuery query{name, {}, d.institution, {}, std::nullopt};
      const auto advisor = detail::resolve_or_create(graph, query, NodeOrigin::kAdvisorMention);
      graph.add_mention(origin, std::move(field), name, advisor);
      outcomes.push_back(graph.add_edge_checked(advisor, owner, d.level, role, Evidence::kAdviseeSide, d.year));
    };
    const auto prefix = "degree[" + std::to_string(i) + "]";
    if (!d.advisor_name.empty()) link(d.advisor_name, Role::kAdvisor, prefix + ".advisor");
    for (std::size_t j = 0; j < d.coadvisor_names.size(); ++j) {
      link(d.coadvisor_names[j], Role::kCoadvisor, prefix + ".coadvisor[" + std::to_string(j) + "]");
    }
  }
  return outcomes;
}

// Advisees are matched on every signal the mentorship entry carries.
// Entries without a level default to MASTERS and are logged.
inline std::vector<EdgeOutcome> link_advisees(GenealogyGraph& graph, NodeId owner, const CurriculumRecord& record,
                                              const RecordOrigin& origin = {}) {
  std::vector<EdgeOutcome> outcomes;
  for (std::size_t i = 0; i < record.mentorships.size(); ++i) {
    const auto& m = record.mentorships[i];
    const auto field = "mentorship[" + std::to_string(i) + "]";
    DegreeLevel level = DegreeLevel::kMasters;
    if (m.level) {
      level = *m.level;
    } else {
      graph.add_anomaly(origin, field + ": missing level for advisee '" + m.advisee_name + "', defaulted to MASTERS");
    }
    const IdentityQuery query{m.advisee_name, {}, m.institution, m.work_title, m.year};
    const auto advisee = detail::resolve_or_create(graph, query, NodeOrigin::kAdviseeMention);
    graph.add_mention(origin, field, m.advisee_name, advisee);
    outcomes.push_back(graph.add_edge_checked(owner, advisee, level, m.role, Evidence::kAdvisorSide, m.year));
  }
  return outcomes;
}

inline GenealogyGraph build_graph(const Corpus& corpus) {
  GenealogyGraph graph;
  const auto origin_of = [&](std::size_t i) {
    return i < corpus.origins.size() ? corpus.origins[i] : RecordOrigin{};
  };
  std::vector<NodeId> owners;
  owners.reserve(corpus.records.size());
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    owners.push_back(upsert_researcher(graph, corpus.records[i], origin_of(i)).node);
  }
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    link_advisors(graph, owners[i], corpus.records[i], origin_of(i));
    link_advisees(graph, owners[i], corpus.records[i], origin_of(i));
  }
  return graph;
}

}  // namespace agt

#endif  // AGT_BUILDER_HPP
