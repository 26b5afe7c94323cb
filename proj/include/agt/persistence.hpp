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

// Graph save file:
//
//   offset  size  field
//   0       4     magic "AGT1"
//   4       2     major version (little endian)
//   6       2     minor version
//   8       8     payload length N
//   16      N     payload (CBOR)
//   16+N    4     CRC-32 of the payload
//
// The identity index is not stored; load rebuilds it from node attributes.

#ifndef AGT_PERSISTENCE_HPP
#define AGT_PERSISTENCE_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <boost/crc.hpp>

#include "json.hpp"

#include "agt/graph.hpp"

namespace agt {

inline constexpr std::array<char, 4> kSaveMagic = {'A', 'G', 'T', '1'};
inline constexpr std::uint16_t kSaveMajorVersion = 1;
inline constexpr std::uint16_t kSaveMinorVersion = 0;

namespace detail {

using Json = nlohmann::json;

inline Json degree_to_json(const DegreeEntry& d) {
  Json j;
  j["level"] = to_string(d.level);
  j["year"] = d.year ? Json(*d.year) : Json();
  j["institution"] = d.institution;
  j["country"] = d.country;
  j["title"] = d.thesis_title;
  j["advisor"] = d.advisor_name;
  j["coadvisors"] = d.coadvisor_names;
  return j;
}

inline DegreeEntry degree_from_json(const Json& j) {
  DegreeEntry d;
  d.level = parse_degree_level(j.at("level").get<std::string>());
  if (!j.at("year").is_null()) d.year = j.at("year").get<int>();
  d.institution = j.at("institution").get<std::string>();
  d.country = j.at("country").get<std::string>();
  d.thesis_title = j.at("title").get<std::string>();
  d.advisor_name = j.at("advisor").get<std::string>();
  d.coadvisor_names = j.at("coadvisors").get<std::vector<std::string>>();
  return d;
}

inline Json optional_year(const std::optional<int>& y) { return y ? Json(*y) : Json(); }

inline Json graph_to_json(const GenealogyGraph& g) {
  Json doc;
  doc["nodes"] = Json::array();
  for (const auto& n : g.nodes()) {
    Json works = Json::array();
    for (const auto& w : n.works) works.push_back({w.title, w.year});
    Json degrees = Json::array();
    for (const auto& d : n.degrees) degrees.push_back(degree_to_json(d));
    doc["nodes"].push_back({{"id", n.id.value},
                            {"name", n.display_name},
                            {"platform_id", n.platform_id},
                            {"has_curriculum", n.has_curriculum},
                            {"variants", n.name_variants},
                            {"institutions", n.institutions},
                            {"works", std::move(works)},
                            {"degrees", std::move(degrees)},
                            {"created_from", to_string(n.created_from)}});
  }
  doc["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"advisor", e.advisor.value},
                            {"advisee", e.advisee.value},
                            {"level", to_string(e.level)},
                            {"role", to_string(e.role)},
                            {"year", optional_year(e.year)},
                            {"evidence", to_string(e.evidence)}});
  }
  doc["rejected"] = Json::array();
  for (const auto& r : g.rejected_edges()) {
    doc["rejected"].push_back({{"advisor", r.advisor.value},
                               {"advisee", r.advisee.value},
                               {"level", to_string(r.level)},
                               {"role", to_string(r.role)},
                               {"reason", to_string(r.reason)}});
  }
  doc["anomalies"] = Json::array();
  for (const auto& a : g.anomalies()) {
    doc["anomalies"].push_back({{"path", a.origin.path}, {"ordinal", a.origin.ordinal}, {"message", a.message}});
  }
  doc["mentions"] = Json::array();
  for (const auto& m : g.mentions()) {
    doc["mentions"].push_back({{"path", m.origin.path},
                               {"ordinal", m.origin.ordinal},
                               {"field", m.field},
                               {"text", m.text},
                               {"node", m.node.value}});
  }
  return doc;
}

inline GenealogyGraph graph_from_json(const Json& doc) {
  GenealogyGraph g;
  for (const auto& jn : doc.at("nodes")) {
    const auto id = g.add_node(jn.at("name").get<std::string>(), parse_node_origin(jn.at("created_from").get<std::string>()));
    if (id.value != jn.at("id").get<std::uint32_t>()) throw Error(ErrorCode::kCorruptFile, "node ids are not dense");
    auto& n = g.node(id);
    n.has_curriculum = jn.at("has_curriculum").get<bool>();
    for (const auto& d : jn.at("degrees")) n.degrees.push_back(degree_from_json(d));
    const auto platform_id = jn.at("platform_id").get<std::string>();
    if (!platform_id.empty()) g.register_attributes(id, IdentityQuery{{}, platform_id, {}, {}, std::nullopt});
    for (const auto& v : jn.at("variants")) g.register_attributes(id, IdentityQuery{v.get<std::string>(), {}, {}, {}, std::nullopt});
    for (const auto& i : jn.at("institutions")) g.register_attributes(id, IdentityQuery{{}, {}, i.get<std::string>(), {}, std::nullopt});
    for (const auto& w : jn.at("works")) {
      g.register_attributes(id, IdentityQuery{{}, {}, {}, w.at(0).get<std::string>(), w.at(1).get<int>()});
    }
  }
  for (const auto& je : doc.at("edges")) {
    std::optional<int> year;
    if (!je.at("year").is_null()) year = je.at("year").get<int>();
    const auto outcome = g.add_edge_checked(NodeId{je.at("advisor").get<std::uint32_t>()},
                                            NodeId{je.at("advisee").get<std::uint32_t>()},
                                            parse_degree_level(je.at("level").get<std::string>()),
                                            parse_role(je.at("role").get<std::string>()),
                                            parse_evidence(je.at("evidence").get<std::string>()), year);
    if (outcome.kind != EdgeOutcome::Kind::kAdded) throw Error(ErrorCode::kCorruptFile, "stored edge list is not a DAG");
  }
  for (const auto& jr : doc.at("rejected")) {
    const auto reason = jr.at("reason").get<std::string>();
    g.restore_rejected({NodeId{jr.at("advisor").get<std::uint32_t>()}, NodeId{jr.at("advisee").get<std::uint32_t>()},
                        parse_degree_level(jr.at("level").get<std::string>()), parse_role(jr.at("role").get<std::string>()),
                        reason == "SELF_LOOP" ? RejectReason::kSelfLoop : RejectReason::kCycle});
  }
  for (const auto& ja : doc.at("anomalies")) {
    g.add_anomaly({ja.at("path").get<std::string>(), ja.at("ordinal").get<std::size_t>()}, ja.at("message").get<std::string>());
  }
  for (const auto& jm : doc.at("mentions")) {
    const NodeId node{jm.at("node").get<std::uint32_t>()};
    if (!g.contains(node)) throw Error(ErrorCode::kCorruptFile, "mention refers to a missing node");
    g.add_mention({jm.at("path").get<std::string>(), jm.at("ordinal").get<std::size_t>()}, jm.at("field").get<std::string>(),
                  jm.at("text").get<std::string>(), node);
  }
  return g;
}

template <typename T>
void put_le(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF));
}

template <typename T>
T get_le(std::string_view in, std::size_t offset) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[offset + i])) << (8 * i);
  return static_cast<T>(v);
}

inline std::uint32_t crc32(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

}  // namespace detail

inline std::string serialize_graph(const GenealogyGraph& graph) {
  const auto cbor = nlohmann::json::to_cbor(detail::graph_to_json(graph));
  const std::string payload(cbor.begin(), cbor.end());
  std::string out(kSaveMagic.begin(), kSaveMagic.end());
  detail::put_le<std::uint16_t>(out, kSaveMajorVersion);
  detail::put_le<std::uint16_t>(out, kSaveMinorVersion);
  detail::put_le<std::uint64_t>(out, payload.size());
  out += payload;
  detail::put_le<std::uint32_t>(out, detail::crc32(payload));
  return out;
}

inline GenealogyGraph deserialize_graph(std::string_view bytes) {
  constexpr std::size_t kHeader = 16;
  if (bytes.size() < kHeader + 4 || !std::equal(kSaveMagic.begin(), kSaveMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::kCorruptFile, "missing AGT1 header");
  }
  const auto major = detail::get_le<std::uint16_t>(bytes, 4);
  if (major != kSaveMajorVersion) {
    throw Error(ErrorCode::kVersionMismatch, "file format version " + std::to_string(major) + ", expected " +
                                                 std::to_string(kSaveMajorVersion));
  }
  const auto length = detail::get_le<std::uint64_t>(bytes, 8);
  if (length != bytes.size() - kHeader - 4) throw Error(ErrorCode::kCorruptFile, "payload length does not match file size");
  const auto payload = bytes.substr(kHeader, length);
  if (detail::crc32(payload) != detail::get_le<std::uint32_t>(bytes, kHeader + length)) {
    throw Error(ErrorCode::kCorruptFile, "checksum mismatch");
  }
  try {
    return detail::graph_from_json(nlohmann::json::from_cbor(payload.begin(), payload.end()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kCorruptFile, e.what());
  }
}

inline void save_graph(const GenealogyGraph& graph, const std::filesystem::path& path) {
  const auto bytes = serialize_graph(graph);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "error while writing " + path.string());
}

inline GenealogyGraph load_graph(const std::filesystem::path& path) { return deserialize_graph(read_file(path)); }

}  // namespace agt

#endif  // AGT_PERSISTENCE_HPP
