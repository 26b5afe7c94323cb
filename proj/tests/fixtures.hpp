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

// Shared fixtures and hand-rolled generators for the test suites.

#ifndef AGT_TESTS_FIXTURES_HPP
#define AGT_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "agt/agt.hpp"

namespace agt::testing {

// R holds a PhD advised by P and a Master's advised by M, and advised X (PhD)
// and Y (Master's).
inline CurriculumRecord five_node_record() {
  CurriculumRecord r;
  r.record_id = "R1";
  r.full_name = "R";
  r.institution = "UFMG";
  DegreeEntry masters;
  masters.level = DegreeLevel::kMasters;
  masters.year = 1995;
  masters.institution = "UNICAMP";
  masters.country = "Brazil";
  masters.thesis_title = "Masters work of R";
  masters.advisor_name = "M";
  DegreeEntry phd;
  phd.level = DegreeLevel::kPhd;
  phd.year = 2000;
  phd.institution = "Virginia Tech";
  phd.country = "USA";
  phd.thesis_title = "Thesis of R";
  phd.advisor_name = "P";
  r.degrees = {masters, phd};
  MentorshipEntry x;
  x.advisee_name = "X";
  x.level = DegreeLevel::kPhd;
  x.year = 2010;
  x.institution = "UFMG";
  x.work_title = "Thesis of X";
  MentorshipEntry y;
  y.advisee_name = "Y";
  y.level = DegreeLevel::kMasters;
  y.year = 2008;
  y.institution = "UFMG";
  y.work_title = "Dissertation of Y";
  r.mentorships = {x, y};
  return r;
}

inline Corpus five_node_corpus() { return make_corpus({five_node_record()}); }

inline GenealogyGraph five_node_graph() { return build_graph(five_node_corpus()); }

// Node id of the (unique) node whose display name is `name`.
inline NodeId node_named(const GenealogyGraph& g, const std::string& name) {
  for (const auto& n : g.nodes()) {
    if (n.display_name == name) return n.id;
  }
  throw std::runtime_error("no node named " + name);
}

inline CurriculumRecord minimal_record(std::string name, std::string id = {}) {
  CurriculumRecord r;
  r.full_name = std::move(name);
  r.record_id = std::move(id);
  return r;
}

inline DegreeEntry degree(DegreeLevel level, std::optional<int> year, std::string institution, std::string advisor,
                          std::string title = {}) {
  DegreeEntry d;
  d.level = level;
  d.year = year;
  d.institution = std::move(institution);
  d.advisor_name = std::move(advisor);
  d.thesis_title = std::move(title);
  return d;
}

inline MentorshipEntry mentorship(std::string advisee, DegreeLevel level, std::optional<int> year = std::nullopt,
                                  std::string institution = {}, std::string title = {}) {
  MentorshipEntry m;
  m.advisee_name = std::move(advisee);
  m.level = level;
  m.year = year;
  m.institution = std::move(institution);
  m.work_title = std::move(title);
  return m;
}

// Random DAG on n nodes: edges only go forward in a random permutation, so
// every insertion is accepted.
inline GenealogyGraph random_dag(std::mt19937_64& rng, std::size_t n, double edge_probability) {
  GenealogyGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("node " + std::to_string(i), NodeOrigin::kOwnCurriculum);
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(edge_probability);
  std::bernoulli_distribution phd(0.6);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!coin(rng)) continue;
      g.add_edge_checked(NodeId{perm[i]}, NodeId{perm[j]}, phd(rng) ? DegreeLevel::kPhd : DegreeLevel::kMasters,
                         Role::kAdvisor, Evidence::kAdvisorSide);
    }
  }
  return g;
}

// Text with spaces, diacritics and XML-hostile characters; never starts or
// ends with whitespace and never contains '|'.
inline std::string random_text(std::mt19937_64& rng, std::size_t max_words = 3) {
  static const std::vector<std::string> pieces = {"Ana", "João", "de", "Souza", "Ç", "ñ", "O'Neil", "\"q\"", "<b>",
                                                  "A&B", "x", "Müller", "Ærø", "42", "da", "São", "l'été", "Œuvre"};
  std::uniform_int_distribution<std::size_t> words(1, max_words);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string out;
  for (std::size_t w = words(rng); w > 0; --w) {
    if (!out.empty()) out += ' ';
    out += pieces[pick(rng)];
  }
  return out;
}

inline CurriculumRecord random_record(std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> year(1900, 2024);
  std::uniform_int_distribution<int> count(0, 3);
  CurriculumRecord r;
  if (coin(rng)) r.record_id = "id" + std::to_string(rng() % 100000);
  r.full_name = random_text(rng);
  for (int i = count(rng); i > 0; --i) r.citation_names.push_back(random_text(rng, 2));
  if (coin(rng)) r.institution = random_text(rng);
  for (int i = count(rng); i > 0; --i) {
    DegreeEntry d;
    d.level = coin(rng) ? DegreeLevel::kPhd : DegreeLevel::kMasters;
    if (coin(rng)) d.year = year(rng);
    if (coin(rng)) d.institution = random_text(rng);
    if (coin(rng)) d.country = coin(rng) ? "Brazil" : "Portugal";
    if (coin(rng)) d.thesis_title = random_text(rng, 6);
    if (coin(rng)) d.advisor_name = random_text(rng);
    for (int c = count(rng) / 2; c > 0; --c) d.coadvisor_names.push_back(random_text(rng));
    const bool duplicate = std::any_of(r.degrees.begin(), r.degrees.end(), [&](const DegreeEntry& e) {
      return e.level == d.level && e.year == d.year && e.institution == d.institution;
    });
    if (!duplicate) r.degrees.push_back(std::move(d));
  }
  for (int i = count(rng); i > 0; --i) {
    MentorshipEntry m;
    m.advisee_name = random_text(rng);
    if (coin(rng)) m.level = coin(rng) ? DegreeLevel::kPhd : DegreeLevel::kMasters;
    if (coin(rng)) m.year = year(rng);
    if (coin(rng)) m.institution = random_text(rng);
    if (coin(rng)) m.work_title = random_text(rng, 6);
    m.role = coin(rng) ? Role::kAdvisor : Role::kCoadvisor;
    r.mentorships.push_back(std::move(m));
  }
  return r;
}

}  // namespace agt::testing

#endif  // AGT_TESTS_FIXTURES_HPP
