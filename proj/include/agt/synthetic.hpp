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

// Seeded generator of ground-truth genealogies rendered as curriculum
// corpora, plus pairwise entity-resolution scoring against that truth.
//
// The true genealogy is a forest. Every entity holds a PhD; the degree its
// parent advised is a PhD or a Master's. Entities with advisees always own a
// curriculum, leaves own one with probability curriculum_rate. Every name
// occurrence written into a record is logged as a mention of its entity,
// located by "<1-based record line>:<field>".

#ifndef AGT_SYNTHETIC_HPP
#define AGT_SYNTHETIC_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "agt/analytics.hpp"
#include "agt/corpus.hpp"
#include "agt/graph.hpp"
#include "agt/text.hpp"

namespace agt {

struct SynthParams {
  std::size_t num_trees = 1;
  std::size_t max_depth = 2;
  double branching = 2.0;
  double name_collision_rate = 0.0;
  double field_dropout = 0.0;
  std::uint64_t seed = 1;
  double curriculum_rate = 1.0;
  bool name_only_mentions = false;
  std::size_t max_entities = 0;  // 0: unbounded
  double foreign_degree_rate = 0.15;
  std::string home_country = "Brazil";

  void validate() const {
    const auto probability = [](double p, const char* what) {
      if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidValue, std::string(what) + " must be in [0, 1]");
    };
    probability(name_collision_rate, "name_collision_rate");
    probability(field_dropout, "field_dropout");
    probability(curriculum_rate, "curriculum_rate");
    probability(foreign_degree_rate, "foreign_degree_rate");
    if (!(branching >= 0.0) || !std::isfinite(branching)) throw Error(ErrorCode::kInvalidValue, "branching must be >= 0");
  }
};

struct TruthEntity {
  std::uint32_t id = 0;
  std::string name;
  std::optional<std::uint32_t> parent;
  DegreeLevel advised_level = DegreeLevel::kPhd;  // meaningful when parent is set
  std::size_t depth = 0;
  bool has_curriculum = false;
  std::vector<DegreeEntry> degrees;  // before dropout
};

struct TruthMention {
  std::size_t line = 0;
  std::string field;
  std::string text;
  std::uint32_t entity = 0;
};

struct GroundTruth {
  std::vector<TruthEntity> entities;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (advisor, advisee)
  std::vector<TruthMention> mentions;
  std::string home_country = "Brazil";

  // Forest statistics from the generator's own bookkeeping.
  MetricsReport metrics() const;
};

struct SynthOutput {
  std::vector<CurriculumRecord> records;  // file order; line i+1 holds records[i]
  Corpus corpus;                          // the same records, sorted
  GroundTruth truth;
};

namespace detail {

// splitmix64; fixed so output is identical across standard libraries.
class SynthRng {
 public:
  explicit SynthRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  template <typename T, std::size_t N>
  const T& pick(const std::array<T, N>& items) { return items[below(N)]; }

 private:
  std::uint64_t state_;
};

inline constexpr std::array<std::string_view, 40> kFirstNames = {
    "João", "José", "Antônio", "Francisco", "Carlos", "Paulo", "Pedro", "Lucas", "Luiz", "Marcos",
    "Luís", "Gabriel", "Rafael", "Daniel", "Marcelo", "Bruno", "Eduardo", "Felipe", "Raimundo", "Rodrigo",
    "Maria", "Ana", "Francisca", "Antônia", "Adriana", "Juliana", "Márcia", "Fernanda", "Patrícia", "Aline",
    "Sandra", "Camila", "Amanda", "Bruna", "Jéssica", "Letícia", "Júlia", "Luciana", "Vanessa", "Mariana"};

inline constexpr std::array<std::string_view, 40> kSurnames = {
    "Silva", "Santos", "Oliveira", "Souza", "Rodrigues", "Ferreira", "Alves", "Pereira", "Lima", "Gomes",
    "Ribeiro", "Carvalho", "Almeida", "Lopes", "Soares", "Fernandes", "Vieira", "Barbosa", "Rocha", "Dias",
    "Nascimento", "Andrade", "Moreira", "Nunes", "Marques", "Machado", "Mendes", "Freitas", "Cardoso", "Ramos",
    "Gonçalves", "Araújo", "Magalhães", "Simões", "Conceição", "Guimarães", "Brandão", "Monteiro", "Teixeira", "Correia"};

inline constexpr std::array<std::string_view, 6> kParticles = {"de", "da", "do", "dos", "das", "e"};

inline constexpr std::array<std::string_view, 15> kDomesticInstitutions = {
    "Universidade Federal de Minas Gerais", "Universidade de São Paulo", "Universidade Estadual de Campinas",
    "Universidade Federal do Rio de Janeiro", "Universidade Federal do Rio Grande do Sul",
    "Universidade Federal de Pernambuco", "Universidade de Brasília", "Universidade Federal de Santa Catarina",
    "Universidade Federal da Bahia", "Universidade Federal do Ceará", "Pontifícia Universidade Católica do Rio de Janeiro",
    "Universidade Federal do Paraná", "Universidade Federal de São Carlos", "Universidade Federal Fluminense",
    "Universidade Federal de Viçosa"};

struct ForeignInstitution {
  std::string_view country;
  std::string_view name;
};

inline constexpr std::array<ForeignInstitution, 12> kForeignInstitutions = {{
    {"Portugal", "Universidade de Lisboa"},
    {"Portugal", "Universidade do Porto"},
    {"USA", "Virginia Tech"},
    {"USA", "Stanford University"},
    {"UK", "University of Oxford"},
    {"UK", "Imperial College London"},
    {"Spain", "Universidad de Granada"},
    {"Spain", "Universidad Complutense de Madrid"},
    {"France", "Sorbonne Université"},
    {"France", "Université Paris-Saclay"},
    {"Argentina", "Universidad de Buenos Aires"},
    {"Germany", "Technische Universität München"},
}};

inline constexpr std::array<std::string_view, 24> kTopicWords = {
    "graph", "lineage", "retrieval", "digital libraries", "entity resolution", "networks", "optimization",
    "genomics", "semantics", "learning", "citation analysis", "scientometrics", "databases", "hydrology",
    "soil chemistry", "epidemiology", "linguistics", "robotics", "compilers", "ecology", "fluid dynamics",
    "number theory", "crystallography", "neuroscience"};

struct Placement {
  std::string institution;
  std::string country;
};

inline std::string ascii_upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

class ForestGenerator {
 public:
  explicit ForestGenerator(const SynthParams& params) : p_(params), rng_(params.seed ^ 0xA6E1'7EEDULL) {}

  SynthOutput run() {
    p_.validate();
    grow_forest();
    assign_degrees();
    emit_records();
    SynthOutput out;
    out.records = records_;
    out.corpus = make_corpus(records_, "<synthetic>");
    out.truth.entities = std::move(entities_);
    out.truth.mentions = std::move(mentions_);
    out.truth.home_country = p_.home_country;
    for (const auto& e : out.truth.entities) {
      if (e.parent) out.truth.edges.emplace_back(*e.parent, e.id);
    }
    return out;
  }

 private:
  std::uint32_t new_entity(std::optional<std::uint32_t> parent) {
    TruthEntity e;
    e.id = static_cast<std::uint32_t>(entities_.size());
    e.parent = parent;
    e.depth = parent ? entities_[*parent].depth + 1 : 0;
    e.name = draw_name();
    entities_.push_back(std::move(e));
    placement_.push_back(draw_placement(parent.has_value()));
    return entities_.back().id;
  }

  std::string draw_name() {
    if (!entities_.empty() && rng_.chance(p_.name_collision_rate)) return entities_[rng_.below(entities_.size())].name;
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::string name(rng_.pick(kFirstNames));
      name += ' ';
      if (rng_.chance(0.3)) {
        name += rng_.pick(kParticles);
        name += ' ';
      }
      name += rng_.pick(kSurnames);
      name += ' ';
      name += rng_.pick(kSurnames);
      if (used_keys_.insert(normalize_name(name).normalized).second) return name;
    }
    // Pools exhausted: extend with surnames spelled from a unique counter.
    for (std::size_t counter = unique_fallback_++;; counter = unique_fallback_++) {
      std::string name(rng_.pick(kFirstNames));
      std::size_t c = counter;
      do {
        name += ' ';
        name += kSurnames[c % kSurnames.size()];
        c /= kSurnames.size();
      } while (c > 0);
      name += " Neto";
      if (used_keys_.insert(normalize_name(name).normalized).second) return name;
    }
  }

  Placement draw_placement(bool domestic_bias) {
    const double foreign = domestic_bias ? p_.foreign_degree_rate / 2 : p_.foreign_degree_rate;
    if (rng_.chance(foreign)) {
      const auto& f = rng_.pick(kForeignInstitutions);
      return {std::string(f.name), std::string(f.country)};
    }
    return {std::string(rng_.pick(kDomesticInstitutions)), p_.home_country};
  }

  void grow_forest() {
    std::deque<std::uint32_t> queue;
    for (std::size_t t = 0; t < p_.num_trees; ++t) queue.push_back(new_entity(std::nullopt));
    const double whole = std::floor(p_.branching);
    const double frac = p_.branching - whole;
    while (!queue.empty()) {
      const auto parent = queue.front();
      queue.pop_front();
      if (entities_[parent].depth >= p_.max_depth) continue;
      const auto children = static_cast<std::size_t>(whole) + (rng_.chance(frac) ? 1 : 0);
      for (std::size_t c = 0; c < children; ++c) {
        if (p_.max_entities > 0 && entities_.size() >= p_.max_entities) return;
        const auto child = new_entity(parent);
        entities_[child].advised_level = rng_.chance(0.7) ? DegreeLevel::kPhd : DegreeLevel::kMasters;
        queue.push_back(child);
      }
    }
  }

  std::string title_for(const TruthEntity& e, DegreeLevel level) {
    std::string t = level == DegreeLevel::kPhd ? "Essays on " : "A study of ";
    t += rng_.pick(kTopicWords);
    t += " and ";
    t += rng_.pick(kTopicWords);
    t += level == DegreeLevel::kPhd ? " (thesis " : " (dissertation ";
    t += std::to_string(e.id);
    t += ")";
    return t;
  }

  void assign_degrees() {
    std::vector<bool> has_children(entities_.size(), false);
    for (const auto& e : entities_) {
      if (e.parent) has_children[*e.parent] = true;
    }
    const int step = std::clamp(static_cast<int>(60 / (p_.max_depth + 1)), 1, 8);
    phd_year_.assign(entities_.size(), 0);
    for (auto& e : entities_) {
      const int base = e.parent ? phd_year_[*e.parent] + step : 1950 + static_cast<int>(rng_.below(16));
      phd_year_[e.id] = std::min(base + static_cast<int>(rng_.below(2)), 2024);
      // Nothing else mentions a root or an advisor, so both need their own curriculum.
      e.has_curriculum = !e.parent || has_children[e.id] || rng_.chance(p_.curriculum_rate);

      DegreeEntry phd;
      phd.level = DegreeLevel::kPhd;
      phd.year = phd_year_[e.id];
      phd.thesis_title = title_for(e, DegreeLevel::kPhd);
      std::optional<DegreeEntry> masters;
      if ((e.parent && e.advised_level == DegreeLevel::kMasters) || rng_.chance(0.4)) {
        masters.emplace();
        masters->level = DegreeLevel::kMasters;
        masters->year = std::max(1900, phd_year_[e.id] - 3);
        masters->thesis_title = title_for(e, DegreeLevel::kMasters);
      }
      const auto place = [&](DegreeEntry& d, bool advised) {
        const auto where = advised ? placement_[*e.parent] : draw_placement(false);
        d.institution = where.institution;
        d.country = where.country;
        if (advised) d.advisor_name = entities_[*e.parent].name;
      };
      const bool phd_advised = e.parent && e.advised_level == DegreeLevel::kPhd;
      place(phd, phd_advised);
      if (masters) place(*masters, e.parent && e.advised_level == DegreeLevel::kMasters);
      if (masters) e.degrees.push_back(std::move(*masters));
      e.degrees.push_back(std::move(phd));
    }
  }

  const DegreeEntry& advised_degree(const TruthEntity& e) const {
    for (const auto& d : e.degrees) {
      if (d.level == e.advised_level) return d;
    }
    return e.degrees.front();
  }

  std::string mention_text(const std::string& name) {
    return rng_.chance(0.15) ? ascii_upper(name) : name;
  }

  bool keep() { return !rng_.chance(p_.field_dropout); }

  void emit_records() {
    std::vector<std::vector<std::uint32_t>> children(entities_.size());
    for (const auto& e : entities_) {
      if (e.parent) children[*e.parent].push_back(e.id);
    }
    for (const auto& e : entities_) {
      if (!e.has_curriculum) continue;
      const auto line = records_.size() + 1;
      CurriculumRecord r;
      if (keep()) r.record_id = std::to_string(4'000'000'000ULL + e.id);
      r.full_name = e.name;
      if (keep()) r.institution = placement_[e.id].institution;
      mentions_.push_back({line, "owner", e.name, e.id});
      for (const auto& truth_degree : e.degrees) {
        DegreeEntry d = truth_degree;
        if (!keep()) d.year.reset();
        if (!keep()) d.institution.clear();
        if (!keep()) d.country.clear();
        if (!keep()) d.thesis_title.clear();
        if (!d.advisor_name.empty()) {
          if (p_.name_only_mentions) d.institution.clear();
          d.advisor_name = mention_text(d.advisor_name);
          mentions_.push_back({line, "degree[" + std::to_string(r.degrees.size()) + "].advisor", d.advisor_name, *e.parent});
        }
        r.degrees.push_back(std::move(d));
      }
      for (const auto child_id : children[e.id]) {
        const auto& child = entities_[child_id];
        const auto& degree = advised_degree(child);
        MentorshipEntry m;
        m.advisee_name = mention_text(child.name);
        m.level = child.advised_level;
        if (!p_.name_only_mentions) {
          if (keep()) m.year = degree.year;
          if (keep()) m.institution = degree.institution;
          if (keep()) m.work_title = degree.thesis_title;
        }
        if (!keep()) m.level.reset();
        mentions_.push_back({line, "mentorship[" + std::to_string(r.mentorships.size()) + "]", m.advisee_name, child_id});
        r.mentorships.push_back(std::move(m));
      }
      records_.push_back(std::move(r));
    }
  }

  SynthParams p_;
  SynthRng rng_;
  std::vector<TruthEntity> entities_;
  std::vector<Placement> placement_;
  std::vector<int> phd_year_;
  std::set<std::string> used_keys_;
  std::size_t unique_fallback_ = 0;
  std::vector<CurriculumRecord> records_;
  std::vector<TruthMention> mentions_;
};

}  // namespace detail

inline SynthOutput generate(const SynthParams& params) { return detail::ForestGenerator(params).run(); }

inline MetricsReport GroundTruth::metrics() const {
  MetricsReport r;
  const auto n = entities.size();
  r.num_nodes = n;
  r.num_edges = edges.size();
  std::vector<std::size_t> subtree(n, 1);
  std::vector<std::size_t> height(n, 0);
  std::vector<std::size_t> advisees(n, 0);
  // Entities are created breadth-first, so every child id exceeds its parent's.
  for (std::size_t i = n; i-- > 0;) {
    if (const auto parent = entities[i].parent) {
      subtree[*parent] += subtree[i];
      height[*parent] = std::max(height[*parent], height[i] + 1);
      ++advisees[*parent];
    }
  }
  std::map<std::uint32_t, std::map<std::size_t, std::size_t>> level_counts;  // root -> depth -> count
  std::vector<std::uint32_t> root_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    root_of[i] = entities[i].parent ? root_of[*entities[i].parent] : static_cast<std::uint32_t>(i);
    ++level_counts[root_of[i]][entities[i].depth];
  }
  std::size_t advisors = 0;
  for (const auto a : advisees) advisors += a > 0 ? 1 : 0;
  if (n > 0) r.avg_out_degree = static_cast<double>(r.num_edges) / static_cast<double>(n);
  if (advisors > 0) r.avg_branching = static_cast<double>(r.num_edges) / static_cast<double>(advisors);

  std::size_t total = 0;
  double ratio_sum = 0.0;
  std::size_t ratio_trees = 0;
  std::map<std::size_t, std::size_t> size_counts;
  for (const auto& [root, levels] : level_counts) {
    ++r.num_trees;
    total += subtree[root];
    ++size_counts[subtree[root]];
    ++r.depth_histogram[height[root]];
    std::size_t width = 0;
    for (const auto& [_, count] : levels) width = std::max(width, count);
    if (height[root] >= 1) {
      ratio_sum += static_cast<double>(width) / static_cast<double>(height[root]);
      ++ratio_trees;
    }
  }
  r.num_components = r.num_trees;
  if (r.num_trees > 0) {
    r.avg_tree_size = static_cast<double>(total) / static_cast<double>(r.num_trees);
    std::size_t running = 0;
    for (const auto& [size, count] : size_counts) {
      running += count;
      r.size_cdf.emplace_back(size, static_cast<double>(running) / static_cast<double>(r.num_trees));
    }
  }
  if (ratio_trees > 0) r.mean_width_depth_ratio = ratio_sum / static_cast<double>(ratio_trees);
  for (const auto& e : entities) {
    if (!e.has_curriculum) continue;
    for (const auto& d : e.degrees) {
      if (!d.country.empty() && fold_text(d.country) != fold_text(home_country)) ++r.country_table[{d.country, d.level}];
    }
  }
  return r;
}

// One corpus line per record, in file order.
inline std::string format_corpus(const std::vector<CurriculumRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += emit_record(r);
    out += '\n';
  }
  return out;
}

// Sidecar lines: "<line>:<field>\t<mention text>\t<entity id>".
inline std::string format_truth_sidecar(const GroundTruth& truth) {
  std::string out;
  for (const auto& m : truth.mentions) {
    out += std::to_string(m.line) + ":" + m.field + "\t" + m.text + "\t" + std::to_string(m.entity) + "\n";
  }
  return out;
}

inline std::vector<TruthMention> parse_truth_sidecar(std::string_view text) {
  std::vector<TruthMention> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    const auto tab1 = line.find('\t');
    const auto tab2 = line.rfind('\t');
    if (colon == std::string::npos || tab1 == std::string::npos || tab2 == tab1 || colon > tab1) {
      throw Error(ErrorCode::kMalformedRecord, "bad sidecar line: " + line);
    }
    TruthMention m;
    m.line = std::stoul(line.substr(0, colon));
    m.field = line.substr(colon + 1, tab1 - colon - 1);
    m.text = line.substr(tab1 + 1, tab2 - tab1 - 1);
    m.entity = static_cast<std::uint32_t>(std::stoul(line.substr(tab2 + 1)));
    out.push_back(std::move(m));
  }
  return out;
}

struct ResolutionScore {
  double precision = 1.0;
  double recall = 1.0;
};

// Pairwise precision/recall of the graph's mention -> node partition against
// the true mention -> entity partition. Pairs are unordered mention pairs;
// an empty pair set scores 1.0.
inline ResolutionScore score_resolution(const GenealogyGraph& graph, std::span<const TruthMention> truth) {
  std::map<std::pair<std::size_t, std::string>, NodeId> predicted;
  for (const auto& m : graph.mentions()) predicted.emplace(std::make_pair(m.origin.ordinal, m.field), m.node);
  if (predicted.size() != truth.size() || predicted.size() != graph.mentions().size()) {
    throw Error(ErrorCode::kTruthMismatch, "graph has " + std::to_string(graph.mentions().size()) + " mentions, truth has " +
                                               std::to_string(truth.size()));
  }
  std::map<std::pair<NodeId, std::uint32_t>, std::uint64_t> cells;
  std::map<NodeId, std::uint64_t> per_node;
  std::map<std::uint32_t, std::uint64_t> per_entity;
  for (const auto& t : truth) {
    const auto it = predicted.find({t.line, t.field});
    if (it == predicted.end()) throw Error(ErrorCode::kTruthMismatch, "no mention at " + std::to_string(t.line) + ":" + t.field);
    ++cells[{it->second, t.entity}];
    ++per_node[it->second];
    ++per_entity[t.entity];
  }
  const auto pairs = [](std::uint64_t k) { return k * (k - 1) / 2; };
  std::uint64_t together = 0, predicted_pairs = 0, true_pairs = 0;
  for (const auto& [_, k] : cells) together += pairs(k);
  for (const auto& [_, k] : per_node) predicted_pairs += pairs(k);
  for (const auto& [_, k] : per_entity) true_pairs += pairs(k);
  ResolutionScore s;
  if (predicted_pairs > 0) s.precision = static_cast<double>(together) / static_cast<double>(predicted_pairs);
  if (true_pairs > 0) s.recall = static_cast<double>(together) / static_cast<double>(true_pairs);
  return s;
}

inline ResolutionScore score_resolution(const GenealogyGraph& graph, const GroundTruth& truth) {
  return score_resolution(graph, std::span<const TruthMention>(truth.mentions));
}

}  // namespace agt

#endif  // AGT_SYNTHETIC_HPP
