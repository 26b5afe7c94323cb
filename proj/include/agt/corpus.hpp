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

// Curriculum records and the two on-disk corpus formats.
//
// Canonical format: one JSON object per line with the keys
//   id, name, citation_names, institution,
//   degrees[{level, year, institution, country, title, advisor, coadvisors}],
//   mentorships[{advisee, level, year, institution, title, role}].
// Optional fields may be omitted or null. An empty string is the same as an
// absent field.
//
// Lattes-like XML: <CURRICULO id> with children IDENTIFICACAO (nome,
// instituicao, citacoes), FORMACAO (nivel, ano, instituicao, pais, titulo,
// orientador, coorientadores) and ORIENTACAO (nome, nivel, ano, instituicao,
// titulo, papel). List-valued attributes are pipe-separated. A file may hold a
// single CURRICULO or any root element wrapping several of them.

#ifndef AGT_CORPUS_HPP
#define AGT_CORPUS_HPP

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "json.hpp"

#include "agt/error.hpp"
#include "agt/text.hpp"
#include "agt/types.hpp"

namespace agt {

struct DegreeEntry {
  DegreeLevel level = DegreeLevel::kPhd;
  std::optional<int> year;
  std::string institution;
  std::string country;
  std::string thesis_title;
  std::string advisor_name;
  std::vector<std::string> coadvisor_names;

  friend bool operator==(const DegreeEntry&, const DegreeEntry&) = default;
};

struct MentorshipEntry {
  std::string advisee_name;
  // Absent when the source omitted it; the graph builder applies the default.
  std::optional<DegreeLevel> level;
  std::optional<int> year;
  std::string institution;
  std::string work_title;
  Role role = Role::kAdvisor;

  friend bool operator==(const MentorshipEntry&, const MentorshipEntry&) = default;
};

struct CurriculumRecord {
  std::string record_id;
  std::string full_name;
  std::vector<std::string> citation_names;
  std::string institution;
  std::vector<DegreeEntry> degrees;
  std::vector<MentorshipEntry> mentorships;

  friend bool operator==(const CurriculumRecord&, const CurriculumRecord&) = default;
};

// Where a record came from: file path and 1-based line (canonical) or
// 1-based CURRICULO element index (XML).
struct RecordOrigin {
  std::string path;
  std::size_t ordinal = 0;

  friend auto operator<=>(const RecordOrigin&, const RecordOrigin&) = default;
};

struct ManifestEntry {
  std::string path;
  std::size_t record_count = 0;
  std::size_t error_count = 0;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Corpus {
  std::vector<CurriculumRecord> records;
  std::vector<RecordOrigin> origins;  // parallel to records
  std::vector<ManifestEntry> source_manifest;
};

inline int current_year() {
  const auto now = std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now());
  return static_cast<int>(std::chrono::year_month_day{now}.year());
}

// Earliest PhD year; records lacking one sort last.
inline std::optional<int> phd_year(const CurriculumRecord& record) {
  std::optional<int> best;
  for (const auto& d : record.degrees) {
    if (d.level == DegreeLevel::kPhd && d.year && (!best || *d.year < *best)) best = d.year;
  }
  return best;
}

inline void validate_record(const CurriculumRecord& record) {
  if (trim(record.full_name).empty()) throw Error(ErrorCode::kMissingField, "full_name is empty");
  const int max_year = current_year();
  std::set<std::tuple<DegreeLevel, std::optional<int>, std::string>> seen;
  for (const auto& d : record.degrees) {
    if (d.year && (*d.year < 1900 || *d.year > max_year)) {
      throw Error(ErrorCode::kInvalidValue, "degree year " + std::to_string(*d.year) + " out of range");
    }
    if (!seen.emplace(d.level, d.year, d.institution).second) {
      throw Error(ErrorCode::kInvalidValue, "duplicate degree entry for (level, year, institution)");
    }
  }
  for (const auto& m : record.mentorships) {
    if (trim(m.advisee_name).empty()) throw Error(ErrorCode::kMissingField, "mentorship advisee name is empty");
  }
}

// ---------------------------------------------------------------------------
// Canonical format

namespace detail {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view what) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::kMalformedRecord, "unknown key '" + key + "' in " + std::string(what));
    }
  }
}

inline std::string json_string(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) throw Error(ErrorCode::kMalformedRecord, std::string("field '") + key + "' must be a string");
  return trim(it->get<std::string>());
}

inline std::optional<int> json_year(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw Error(ErrorCode::kMalformedRecord, std::string("field '") + key + "' must be an integer");
  return it->get<int>();
}

inline std::vector<std::string> json_string_list(const Json& obj, const char* key) {
  std::vector<std::string> out;
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) throw Error(ErrorCode::kMalformedRecord, std::string("field '") + key + "' must be an array");
  for (const auto& v : *it) {
    if (!v.is_string()) throw Error(ErrorCode::kMalformedRecord, std::string("entries of '") + key + "' must be strings");
    auto s = trim(v.get<std::string>());
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

inline const Json* json_array(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  if (!it->is_array()) throw Error(ErrorCode::kMalformedRecord, std::string("field '") + key + "' must be an array");
  return &*it;
}

}  // namespace detail

inline CurriculumRecord parse_record(std::string_view text) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kMalformedRecord, e.what(), e.byte);
  }
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedRecord, "record must be an object", 0);
  detail::check_keys(doc, {"id", "name", "citation_names", "institution", "degrees", "mentorships"}, "record");

  CurriculumRecord record;
  record.record_id = detail::json_string(doc, "id");
  record.full_name = detail::json_string(doc, "name");
  if (record.full_name.empty()) throw Error(ErrorCode::kMissingField, "name is required");
  record.citation_names = detail::json_string_list(doc, "citation_names");
  record.institution = detail::json_string(doc, "institution");

  if (const auto* degrees = detail::json_array(doc, "degrees")) {
    for (const auto& d : *degrees) {
      if (!d.is_object()) throw Error(ErrorCode::kMalformedRecord, "degree must be an object");
      detail::check_keys(d, {"level", "year", "institution", "country", "title", "advisor", "coadvisors"}, "degree");
      const auto level = detail::json_string(d, "level");
      if (level.empty()) throw Error(ErrorCode::kMissingField, "degree level is required");
      DegreeEntry entry;
      entry.level = parse_degree_level(level);
      entry.year = detail::json_year(d, "year");
      entry.institution = detail::json_string(d, "institution");
      entry.country = detail::json_string(d, "country");
      entry.thesis_title = detail::json_string(d, "title");
      entry.advisor_name = detail::json_string(d, "advisor");
      entry.coadvisor_names = detail::json_string_list(d, "coadvisors");
      record.degrees.push_back(std::move(entry));
    }
  }
  if (const auto* mentorships = detail::json_array(doc, "mentorships")) {
    for (const auto& m : *mentorships) {
      if (!m.is_object()) throw Error(ErrorCode::kMalformedRecord, "mentorship must be an object");
      detail::check_keys(m, {"advisee", "level", "year", "institution", "title", "role"}, "mentorship");
      MentorshipEntry entry;
      entry.advisee_name = detail::json_string(m, "advisee");
      if (entry.advisee_name.empty()) throw Error(ErrorCode::kMissingField, "mentorship advisee is required");
      if (const auto level = detail::json_string(m, "level"); !level.empty()) entry.level = parse_degree_level(level);
      entry.year = detail::json_year(m, "year");
      entry.institution = detail::json_string(m, "institution");
      entry.work_title = detail::json_string(m, "title");
      if (const auto role = detail::json_string(m, "role"); !role.empty()) entry.role = parse_role(role);
      record.mentorships.push_back(std::move(entry));
    }
  }
  validate_record(record);
  return record;
}

// Single line, no trailing newline. Keys appear in the documented order;
// absent optional fields are omitted.
inline std::string emit_record(const CurriculumRecord& record) {
  detail::OrderedJson doc = detail::OrderedJson::object();
  if (!record.record_id.empty()) doc["id"] = record.record_id;
  doc["name"] = record.full_name;
  if (!record.citation_names.empty()) doc["citation_names"] = record.citation_names;
  if (!record.institution.empty()) doc["institution"] = record.institution;
  auto degrees = detail::OrderedJson::array();
  for (const auto& d : record.degrees) {
    detail::OrderedJson e = detail::OrderedJson::object();
    e["level"] = to_string(d.level);
    if (d.year) e["year"] = *d.year;
    if (!d.institution.empty()) e["institution"] = d.institution;
    if (!d.country.empty()) e["country"] = d.country;
    if (!d.thesis_title.empty()) e["title"] = d.thesis_title;
    if (!d.advisor_name.empty()) e["advisor"] = d.advisor_name;
    if (!d.coadvisor_names.empty()) e["coadvisors"] = d.coadvisor_names;
    degrees.push_back(std::move(e));
  }
  doc["degrees"] = std::move(degrees);
  auto mentorships = detail::OrderedJson::array();
  for (const auto& m : record.mentorships) {
    detail::OrderedJson e = detail::OrderedJson::object();
    e["advisee"] = m.advisee_name;
    if (m.level) e["level"] = to_string(*m.level);
    if (m.year) e["year"] = *m.year;
    if (!m.institution.empty()) e["institution"] = m.institution;
    if (!m.work_title.empty()) e["title"] = m.work_title;
    e["role"] = to_string(m.role);
    mentorships.push_back(std::move(e));
  }
  doc["mentorships"] = std::move(mentorships);
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Lattes-like XML

namespace detail {

using PTree = boost::property_tree::ptree;

inline std::string xml_attr(const PTree& element, const char* name) {
  const auto attrs = element.get_child_optional("<xmlattr>");
  if (!attrs) return {};
  const auto value = attrs->get_optional<std::string>(name);
  return value ? trim(*value) : std::string{};
}

inline std::vector<std::string> split_pipe(const std::string& joined) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= joined.size()) {
    const auto end = std::min(joined.find('|', start), joined.size());
    auto piece = trim(std::string_view(joined).substr(start, end - start));
    if (!piece.empty()) out.push_back(std::move(piece));
    start = end + 1;
  }
  return out;
}

inline std::optional<int> xml_year(const PTree& element, const char* name) {
  const auto text = xml_attr(element, name);
  if (text.empty()) return std::nullopt;
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) throw Error(ErrorCode::kInvalidValue, "year attribute '" + text + "' is not an integer");
  return value;
}

inline CurriculumRecord record_from_element(const PTree& root) {
  CurriculumRecord record;
  record.record_id = xml_attr(root, "id");
  bool have_identification = false;
  for (const auto& [tag, child] : root) {
    if (tag == "IDENTIFICACAO") {
      if (have_identification) throw Error(ErrorCode::kMalformedXml, "more than one IDENTIFICACAO element");
      have_identification = true;
      record.full_name = xml_attr(child, "nome");
      record.institution = xml_attr(child, "instituicao");
      record.citation_names = split_pipe(xml_attr(child, "citacoes"));
    } else if (tag == "FORMACAO") {
      const auto level = xml_attr(child, "nivel");
      if (level.empty()) throw Error(ErrorCode::kMissingField, "FORMACAO without nivel");
      DegreeEntry d;
      d.level = parse_degree_level(level);
      d.year = xml_year(child, "ano");
      d.institution = xml_attr(child, "instituicao");
      d.country = xml_attr(child, "pais");
      d.thesis_title = xml_attr(child, "titulo");
      d.advisor_name = xml_attr(child, "orientador");
      d.coadvisor_names = split_pipe(xml_attr(child, "coorientadores"));
      record.degrees.push_back(std::move(d));
    } else if (tag == "ORIENTACAO") {
      MentorshipEntry m;
      m.advisee_name = xml_attr(child, "nome");
      if (m.advisee_name.empty()) throw Error(ErrorCode::kMissingField, "ORIENTACAO without nome");
      if (const auto level = xml_attr(child, "nivel"); !level.empty()) m.level = parse_degree_level(level);
      m.year = xml_year(child, "ano");
      m.institution = xml_attr(child, "instituicao");
      m.work_title = xml_attr(child, "titulo");
      if (const auto role = xml_attr(child, "papel"); !role.empty()) m.role = parse_role(role);
      record.mentorships.push_back(std::move(m));
    }
  }
  if (record.full_name.empty()) throw Error(ErrorCode::kMissingField, "IDENTIFICACAO nome is required");
  validate_record(record);
  return record;
}

inline PTree read_xml_tree(std::string_view document) {
  PTree tree;
  std::istringstream in{std::string(document)};
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedXml, e.what());
  }
  return tree;
}

// The single top-level element of a parsed document.
inline std::pair<std::string, const PTree*> xml_root(const PTree& tree) {
  for (const auto& [tag, child] : tree) {
    if (tag != "<xmlcomment>" && tag != "<xmldecl>") return {tag, &child};
  }
  throw Error(ErrorCode::kMalformedXml, "document has no root element");
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string join_pipe(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out.push_back('|');
    out += p;
  }
  return out;
}

inline void put_attr(std::string& out, const char* name, std::string_view value) {
  if (value.empty()) return;
  out += ' ';
  out += name;
  out += "=\"";
  out += xml_escape(value);
  out += '"';
}

}  // namespace detail

inline CurriculumRecord parse_lattes_xml(std::string_view document) {
  const auto tree = detail::read_xml_tree(document);
  const auto [tag, root] = detail::xml_root(tree);
  if (tag != "CURRICULO") throw Error(ErrorCode::kMalformedXml, "root element must be CURRICULO, found " + tag);
  return detail::record_from_element(*root);
}

// Renders one CURRICULO element (no XML declaration), indented by `indent`.
inline std::string emit_lattes_xml(const CurriculumRecord& record, std::string_view indent = "") {
  std::string out{indent};
  out += "<CURRICULO";
  detail::put_attr(out, "id", record.record_id);
  out += ">\n";
  out += indent;
  out += "  <IDENTIFICACAO";
  detail::put_attr(out, "nome", record.full_name);
  detail::put_attr(out, "instituicao", record.institution);
  detail::put_attr(out, "citacoes", detail::join_pipe(record.citation_names));
  out += "/>\n";
  for (const auto& d : record.degrees) {
    out += indent;
    out += "  <FORMACAO";
    detail::put_attr(out, "nivel", to_string(d.level));
    if (d.year) detail::put_attr(out, "ano", std::to_string(*d.year));
    detail::put_attr(out, "instituicao", d.institution);
    detail::put_attr(out, "pais", d.country);
    detail::put_attr(out, "titulo", d.thesis_title);
    detail::put_attr(out, "orientador", d.advisor_name);
    detail::put_attr(out, "coorientadores", detail::join_pipe(d.coadvisor_names));
    out += "/>\n";
  }
  for (const auto& m : record.mentorships) {
    out += indent;
    out += "  <ORIENTACAO";
    detail::put_attr(out, "nome", m.advisee_name);
    if (m.level) detail::put_attr(out, "nivel", to_string(*m.level));
    if (m.year) detail::put_attr(out, "ano", std::to_string(*m.year));
    detail::put_attr(out, "instituicao", m.institution);
    detail::put_attr(out, "titulo", m.work_title);
    detail::put_attr(out, "papel", to_string(m.role));
    out += "/>\n";
  }
  out += indent;
  out += "</CURRICULO>\n";
  return out;
}

// Multi-record XML file: <CURRICULOS> wrapping one CURRICULO per record.
inline std::string emit_lattes_xml_file(std::span<const CurriculumRecord> records) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<CURRICULOS>\n";
  for (const auto& r : records) out += emit_lattes_xml(r, "  ");
  out += "</CURRICULOS>\n";
  return out;
}

// ---------------------------------------------------------------------------
// Corpus loading

// Sorts records by (earliest PhD year, record_id, full_name) with undated
// records last. Remaining ties fall back to the canonical serialization and
// then the origin so the order never depends on input order.
inline void sort_corpus(Corpus& corpus) {
  struct Key {
    bool undated;
    int year;
    std::string id;
    std::string name;
    std::string canonical;
    RecordOrigin origin;
    auto operator<=>(const Key&) const = default;
  };
  const auto n = corpus.records.size();
  if (corpus.origins.size() != n) corpus.origins.resize(n);
  std::vector<Key> keys;
  keys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = corpus.records[i];
    const auto year = phd_year(r);
    keys.push_back(Key{!year.has_value(), year.value_or(0), r.record_id, r.full_name, emit_record(r), corpus.origins[i]});
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Corpus sorted;
  sorted.source_manifest = std::move(corpus.source_manifest);
  sorted.records.reserve(n);
  sorted.origins.reserve(n);
  for (const auto i : order) {
    sorted.records.push_back(std::move(corpus.records[i]));
    sorted.origins.push_back(std::move(corpus.origins[i]));
  }
  corpus = std::move(sorted);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "error while reading " + path.string());
  return buffer.str();
}

namespace detail {

inline void load_canonical(const std::string& text, const std::string& path, Corpus& corpus, ManifestEntry& manifest) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    const std::string_view line(text.data() + start, end - start);
    start = end + 1;
    if (trim(line).empty()) continue;
    try {
      corpus.records.push_back(parse_record(line));
      corpus.origins.push_back({path, line_no});
      ++manifest.record_count;
    } catch (const Error&) {
      ++manifest.error_count;
    }
  }
}

inline void load_xml(const std::string& text, const std::string& path, Corpus& corpus, ManifestEntry& manifest) {
  PTree tree;
  std::pair<std::string, const PTree*> root;
  try {
    tree = read_xml_tree(text);
    root = xml_root(tree);
  } catch (const Error&) {
    ++manifest.error_count;
    return;
  }
  const auto add = [&](const PTree& element, std::size_t ordinal) {
    try {
      corpus.records.push_back(record_from_element(element));
      corpus.origins.push_back({path, ordinal});
      ++manifest.record_count;
    } catch (const Error&) {
      ++manifest.error_count;
    }
  };
  if (root.first == "CURRICULO") {
    add(*root.second, 1);
    return;
  }
  std::size_t ordinal = 0;
  for (const auto& [tag, child] : *root.second) {
    if (tag == "CURRICULO") add(child, ++ordinal);
  }
}

}  // namespace detail

// Loads every path (".xml" as Lattes-like XML, anything else as canonical
// lines). Unparseable records are skipped and counted in the manifest.
inline Corpus load_corpus(std::span<const std::filesystem::path> paths) {
  Corpus corpus;
  for (const auto& path : paths) {
    const auto text = read_file(path);
    ManifestEntry manifest{path.string(), 0, 0};
    if (path.extension() == ".xml") {
      detail::load_xml(text, path.string(), corpus, manifest);
    } else {
      detail::load_canonical(text, path.string(), corpus, manifest);
    }
    corpus.source_manifest.push_back(std::move(manifest));
  }
  sort_corpus(corpus);

  // record_id is unique across a corpus: keep the first in sorted order.
  std::set<std::string> ids;
  Corpus unique;
  unique.source_manifest = std::move(corpus.source_manifest);
  for (std::size_t i = 0; i < corpus.records.size(); ++i) {
    const auto& id = corpus.records[i].record_id;
    if (!id.empty() && !ids.insert(id).second) {
      for (auto& m : unique.source_manifest) {
        if (m.path == corpus.origins[i].path) {
          --m.record_count;
          ++m.error_count;
          break;
        }
      }
      continue;
    }
    unique.records.push_back(std::move(corpus.records[i]));
    unique.origins.push_back(std::move(corpus.origins[i]));
  }
  return unique;
}

inline Corpus load_corpus(std::initializer_list<std::filesystem::path> paths) {
  return load_corpus(std::span<const std::filesystem::path>(paths.begin(), paths.size()));
}

// In-memory corpus (origins are "<memory>" with 1-based positions), sorted.
inline Corpus make_corpus(std::vector<CurriculumRecord> records, std::string origin_path = "<memory>") {
  Corpus corpus;
  corpus.records = std::move(records);
  for (std::size_t i = 0; i < corpus.records.size(); ++i) corpus.origins.push_back({origin_path, i + 1});
  corpus.source_manifest.push_back({origin_path, corpus.records.size(), 0});
  sort_corpus(corpus);
  return corpus;
}

}  // namespace agt

#endif  // AGT_CORPUS_HPP
