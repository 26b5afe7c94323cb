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


#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "agt/builder.hpp"
#include "fixtures.hpp"

namespace agt {
namespace {

using testing::degree;
using testing::mentorship;
using testing::minimal_record;
using testing::node_named;

std::set<std::tuple<std::string, std::string, DegreeLevel>> named_edges(const GenealogyGraph& g) {
  std::set<std::tuple<std::string, std::string, DegreeLevel>> out;
  for (const auto& e : g.edges()) out.emplace(g.node(e.advisor).display_name, g.node(e.advisee).display_name, e.level);
  return out;
}

TEST(BuildGraph, EmptyCorpus) {
  const auto g = build_graph(Corpus{});
  EXPECT_EQ(g.node_count(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, FiveNodeFixture) {
  const auto g = testing::five_node_graph();
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.edge_count(), 4u);
  const std::set<std::tuple<std::string, std::string, DegreeLevel>> expected = {
      {"P", "R", DegreeLevel::kPhd},
      {"M", "R", DegreeLevel::kMasters},
      {"R", "X", DegreeLevel::kPhd},
      {"R", "Y", DegreeLevel::kMasters}};
  EXPECT_EQ(named_edges(g), expected);
  EXPECT_TRUE(g.node(node_named(g, "R")).has_curriculum);
  EXPECT_FALSE(g.node(node_named(g, "P")).has_curriculum);
  EXPECT_TRUE(is_acyclic(g));
}

// An advisor's curriculum lists the advisee's thesis; the advisee's names the
// advisor. Both sides describe one edge.
TEST(BuildGraph, ReconcilesBothSidesOnTitleAndYear) {
  auto advisee = minimal_record("Ana Souza", "A");
  advisee.degrees.push_back(degree(DegreeLevel::kPhd, 2005, "USP", "Bruno Lima", "Sparse Graphs"));
  auto advisor = minimal_record("Bruno Lima", "B");
  advisor.degrees.push_back(degree(DegreeLevel::kPhd, 1990, "MIT", ""));
  advisor.mentorships.push_back(mentorship("Ana Souza", DegreeLevel::kPhd, 2005, "", "Sparse graphs"));
  const auto g = build_graph(make_corpus({advisee, advisor}));
  EXPECT_EQ(g.node_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].evidence, Evidence::kBoth);
  EXPECT_EQ(g.edges()[0].advisor, node_named(g, "Bruno Lima"));
}

TEST(BuildGraph, SameAdvisorForBothDegreesGivesTwoEdges) {
  auto r = minimal_record("R");
  r.degrees.push_back(degree(DegreeLevel::kMasters, 1995, "USP", "P"));
  r.degrees.push_back(degree(DegreeLevel::kPhd, 2000, "USP", "P"));
  const auto g = build_graph(make_corpus({r}));
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.out_degree(node_named(g, "P")), 2u);
}

TEST(BuildGraph, TwoCycleIsRejected) {
  auto a = minimal_record("A", "1");
  a.degrees.push_back(degree(DegreeLevel::kPhd, 2000, "", "B"));
  auto b = minimal_record("B", "2");
  b.degrees.push_back(degree(DegreeLevel::kPhd, 2001, "", "A"));
  const auto g = build_graph(make_corpus({a, b}));
  EXPECT_EQ(g.edge_count(), 1u);
  ASSERT_EQ(g.rejected_edges().size(), 1u);
  EXPECT_EQ(g.rejected_edges()[0].reason, RejectReason::kCycle);
  EXPECT_TRUE(is_acyclic(g));
}

TEST(BuildGraph, ThreeCycleIsRejected) {
  auto a = minimal_record("A", "1");
  a.mentorships.push_back(mentorship("B", DegreeLevel::kPhd));
  auto b = minimal_record("B", "2");
  b.mentorships.push_back(mentorship("C", DegreeLevel::kPhd));
  auto c = minimal_record("C", "3");
  c.mentorships.push_back(mentorship("A", DegreeLevel::kPhd));
  const auto g = build_graph(make_corpus({a, b, c}));
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  ASSERT_EQ(g.rejected_edges().size(), 1u);
  EXPECT_EQ(g.rejected_edges()[0].reason, RejectReason::kCycle);
}

TEST(BuildGraph, SelfLoopIsRejected) {
  auto a = minimal_record("A");
  a.mentorships.push_back(mentorship("A", DegreeLevel::kMasters));
  const auto g = build_graph(make_corpus({a}));
  EXPECT_EQ(g.edge_count(), 0u);
  ASSERT_EQ(g.rejected_edges().size(), 1u);
  EXPECT_EQ(g.rejected_edges()[0].reason, RejectReason::kSelfLoop);
}

TEST(BuildGraph, DuplicateMentorshipsDeduplicate) {
  auto a = minimal_record("A");
  a.mentorships.push_back(mentorship("B", DegreeLevel::kPhd, 2000));
  a.mentorships.push_back(mentorship("B", DegreeLevel::kPhd, 2000));
  const auto g = build_graph(make_corpus({a}));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].evidence, Evidence::kAdvisorSide);
}

TEST(BuildGraph, DifferentLevelsAreDistinctEdges) {
  auto a = minimal_record("A");
  a.mentorships.push_back(mentorship("B", DegreeLevel::kPhd));
  a.mentorships.push_back(mentorship("B", DegreeLevel::kMasters));
  EXPECT_EQ(build_graph(make_corpus({a})).edge_count(), 2u);
}

TEST(BuildGraph, MissingLevelDefaultsToMastersWithAnomaly) {
  auto a = minimal_record("A");
  MentorshipEntry m;
  m.advisee_name = "B";
  a.mentorships.push_back(m);
  const auto g = build_graph(make_corpus({a}));
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0].level, DegreeLevel::kMasters);
  ASSERT_EQ(g.anomalies().size(), 1u);
  EXPECT_NE(g.anomalies()[0].message.find("MASTERS"), std::string::npos);
}

TEST(BuildGraph, CitationNamesResolveMentions) {
  auto owner = minimal_record("Carlos Alberto Pereira", "C");
  owner.citation_names = {"C. A. Pereira"};
  auto student = minimal_record("Dora", "D");
  student.degrees.push_back(degree(DegreeLevel::kPhd, 2010, "", "C. A. Pereira"));
  const auto g = build_graph(make_corpus({owner, student}));
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(AddEdge, OutcomeKinds) {
  GenealogyGraph g;
  const auto a = g.add_node("A", NodeOrigin::kOwnCurriculum);
  const auto b = g.add_node("B", NodeOrigin::kOwnCurriculum);
  EXPECT_EQ(g.add_edge_checked(a, b, DegreeLevel::kPhd, Role::kAdvisor, Evidence::kAdviseeSide).kind,
            EdgeOutcome::Kind::kAdded);
  EXPECT_EQ(g.add_edge_checked(a, b, DegreeLevel::kPhd, Role::kAdvisor, Evidence::kAdvisorSide).kind,
            EdgeOutcome::Kind::kDeduplicated);
  EXPECT_EQ(g.edges()[0].evidence, Evidence::kBoth);
  const auto back = g.add_edge_checked(b, a, DegreeLevel::kMasters, Role::kAdvisor, Evidence::kAdvisorSide);
  EXPECT_EQ(back.kind, EdgeOutcome::Kind::kRejected);
  EXPECT_EQ(back.reason, RejectReason::kCycle);
}

TEST(AddEdge, UnknownNodeRaises) {
  GenealogyGraph g;
  g.add_node("A", NodeOrigin::kOwnCurriculum);
  try {
    g.add_edge_checked(NodeId{0}, NodeId{9}, DegreeLevel::kPhd, Role::kAdvisor, Evidence::kAdvisorSide);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownNode);
  }
}

}  // namespace
}  // namespace agt
