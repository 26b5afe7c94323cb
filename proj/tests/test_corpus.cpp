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

#include <filesystem>
#include <fstream>
#include <random>

#include "agt/corpus.hpp"
#include "fixtures.hpp"

namespace agt {
namespace {

namespace fs = std::filesystem;

ErrorCode parse_error_code(std::string_view line) {
  try {
    parse_record(line);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error: " << line;
  return ErrorCode::kIoError;
}

fs::path scratch(const std::string& name, const std::string& contents) {
  const fs::path dir = fs::path(AGT_SCRATCH_DIR) / "corpus";
  fs::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

TEST(ParseRecord, MinimalRecord) {
  const auto r = parse_record(R"({"name":"Ana Souza"})");
  EXPECT_EQ(r.full_name, "Ana Souza");
  EXPECT_TRUE(r.record_id.empty());
  EXPECT_TRUE(r.degrees.empty());
  EXPECT_TRUE(r.mentorships.empty());
}

TEST(ParseRecord, OneDegreeOneMentorship) {
  const auto r = parse_record(
      R"({"id":"7","name":"Ana","degrees":[{"level":"PHD","year":2001,"institution":"USP","advisor":"Bruno"}],)"
      R"("mentorships":[{"advisee":"Caio","level":"MASTERS","year":2010,"role":"COADVISOR"}]})");
  ASSERT_EQ(r.degrees.size(), 1u);
  EXPECT_EQ(r.degrees[0].level, DegreeLevel::kPhd);
  EXPECT_EQ(r.degrees[0].year, 2001);
  EXPECT_EQ(r.degrees[0].institution, "USP");
  EXPECT_EQ(r.degrees[0].advisor_name, "Bruno");
  ASSERT_EQ(r.mentorships.size(), 1u);
  EXPECT_EQ(r.mentorships[0].advisee_name, "Caio");
  EXPECT_EQ(r.mentorships[0].level, DegreeLevel::kMasters);
  EXPECT_EQ(r.mentorships[0].role, Role::kCoadvisor);
}

TEST(ParseRecord, MentorshipDefaults) {
  const auto r = parse_record(R"({"name":"Ana","mentorships":[{"advisee":"Caio"}]})");
  EXPECT_FALSE(r.mentorships[0].level.has_value());
  EXPECT_EQ(r.mentorships[0].role, Role::kAdvisor);
}

TEST(ParseRecord, UnknownLevelIsInvalidEnum) {
  EXPECT_EQ(parse_error_code(R"({"name":"Ana","degrees":[{"level":"DOCTORATE"}]})"), ErrorCode::kInvalidEnum);
}

TEST(ParseRecord, MissingNameIsMissingField) {
  EXPECT_EQ(parse_error_code(R"({"id":"1"})"), ErrorCode::kMissingField);
  EXPECT_EQ(parse_error_code(R"({"name":""})"), ErrorCode::kMissingField);
}

TEST(ParseRecord, UnknownKeyIsMalformed) {
  EXPECT_EQ(parse_error_code(R"({"name":"Ana","nickname":"A"})"), ErrorCode::kMalformedRecord);
}

TEST(ParseRecord, YearOutOfRangeAndDuplicateDegree) {
  EXPECT_EQ(parse_error_code(R"({"name":"Ana","degrees":[{"level":"PHD","year":1850}]})"), ErrorCode::kInvalidValue);
  EXPECT_EQ(parse_error_code(R"({"name":"Ana","degrees":[{"level":"PHD","year":2000},{"level":"PHD","year":2000}]})"),
            ErrorCode::kInvalidValue);
}

TEST(ParseRecord, MalformedJsonCarriesByteOffset) {
  try {
    parse_record(R"({"name":"Ana",,})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedRecord);
    ASSERT_TRUE(e.byte_offset().has_value());
    EXPECT_EQ(*e.byte_offset(), 15u);  // 1-based position of the second comma
  }
}

TEST(CanonicalFormat, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto r = testing::random_record(rng);
    const auto line = emit_record(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(parse_record(line), r) << line;
  }
}

TEST(CanonicalFormat, FixtureMatchesSampleFile) {
  const auto text = read_file(fs::path(AGT_SAMPLES_DIR) / "five_node.jsonl");
  EXPECT_EQ(emit_record(testing::five_node_record()) + "\n", text);
}

TEST(XmlFormat, CrossFormatProperty) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto r = testing::random_record(rng);
    const auto xml = emit_lattes_xml(r);
    EXPECT_EQ(parse_lattes_xml(xml), parse_record(emit_record(r))) << xml;
  }
}

TEST(XmlFormat, ParsesHandWrittenDocument) {
  const auto r = parse_lattes_xml(R"(<?xml version="1.0"?>
<CURRICULO id="9">
  <IDENTIFICACAO nome="Ana Souza" instituicao="UFRJ"/>
  <FORMACAO nivel="PHD" ano="1999" instituicao="MIT" pais="USA" orientador="Bob"/>
  <ORIENTACAO nome="Caio" nivel="MASTERS" ano="2004"/>
</CURRICULO>)");
  EXPECT_EQ(r.record_id, "9");
  EXPECT_EQ(r.full_name, "Ana Souza");
  ASSERT_EQ(r.degrees.size(), 1u);
  EXPECT_EQ(r.degrees[0].country, "USA");
  ASSERT_EQ(r.mentorships.size(), 1u);
  EXPECT_EQ(r.mentorships[0].year, 2004);
}

TEST(XmlFormat, MissingNomeIsMissingField) {
  try {
    parse_lattes_xml(R"(<CURRICULO><IDENTIFICACAO instituicao="X"/></CURRICULO>)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingField);
  }
}

TEST(XmlFormat, MalformedDocument) {
  try {
    parse_lattes_xml("<CURRICULO><IDENTIFICACAO");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedXml);
  }
}

TEST(LoadCorpus, EmptyPathList) {
  const auto c = load_corpus(std::span<const fs::path>{});
  EXPECT_TRUE(c.records.empty());
  EXPECT_TRUE(c.source_manifest.empty());
}

TEST(LoadCorpus, SortsByPhdYearUndatedLast) {
  auto a = testing::minimal_record("A");
  a.degrees.push_back(testing::degree(DegreeLevel::kPhd, 2010, "U", ""));
  auto b = testing::minimal_record("B");
  b.degrees.push_back(testing::degree(DegreeLevel::kPhd, 1995, "U", ""));
  auto c = testing::minimal_record("C");
  c.degrees.push_back(testing::degree(DegreeLevel::kMasters, 1990, "U", ""));
  const auto corpus = make_corpus({a, c, b});
  ASSERT_EQ(corpus.records.size(), 3u);
  EXPECT_EQ(corpus.records[0].full_name, "B");
  EXPECT_EQ(corpus.records[1].full_name, "A");
  EXPECT_EQ(corpus.records[2].full_name, "C");
}

TEST(LoadCorpus, TiesBreakByRecordId) {
  const auto corpus = make_corpus({testing::minimal_record("x", "B"), testing::minimal_record("y", "A")});
  EXPECT_EQ(corpus.records[0].record_id, "A");
  EXPECT_EQ(corpus.records[1].record_id, "B");
}

TEST(LoadCorpus, OrderInvariantAcrossFileOrder) {
  std::mt19937_64 rng(17);
  std::string first, second;
  for (int i = 0; i < 20; ++i) first += emit_record(testing::random_record(rng)) + "\n";
  for (int i = 0; i < 20; ++i) second += emit_record(testing::random_record(rng)) + "\n";
  const auto p1 = scratch("one.jsonl", first);
  const auto p2 = scratch("two.jsonl", second);
  const auto forward = load_corpus({p1, p2});
  const auto backward = load_corpus({p2, p1});
  EXPECT_EQ(forward.records, backward.records);
}

TEST(LoadCorpus, ManifestCountsErrors) {
  const auto path = scratch("mixed.jsonl", "{\"name\":\"A\"}\nnot json\n\n{\"name\":\"B\",\"degrees\":[{\"level\":\"X\"}]}\n"
                                           "{\"name\":\"C\"}\n");
  const auto corpus = load_corpus({path});
  ASSERT_EQ(corpus.source_manifest.size(), 1u);
  EXPECT_EQ(corpus.source_manifest[0].record_count, 2u);
  EXPECT_EQ(corpus.source_manifest[0].error_count, 2u);
  EXPECT_EQ(corpus.records.size(), 2u);
}

TEST(LoadCorpus, DuplicateRecordIdKeepsFirst) {
  const auto path = scratch("dup.jsonl", "{\"id\":\"1\",\"name\":\"B\"}\n{\"id\":\"1\",\"name\":\"A\"}\n");
  const auto corpus = load_corpus({path});
  ASSERT_EQ(corpus.records.size(), 1u);
  EXPECT_EQ(corpus.records[0].full_name, "A");
  EXPECT_EQ(corpus.source_manifest[0].error_count, 1u);
}

TEST(LoadCorpus, XmlAndCanonicalAgree) {
  std::mt19937_64 rng(19);
  std::vector<CurriculumRecord> records;
  for (int i = 0; i < 15; ++i) records.push_back(testing::random_record(rng));
  std::string lines;
  for (const auto& r : records) lines += emit_record(r) + "\n";
  const auto from_lines = load_corpus({scratch("same.jsonl", lines)});
  const auto from_xml = load_corpus({scratch("same.xml", emit_lattes_xml_file(records))});
  EXPECT_EQ(from_lines.records, from_xml.records);
}

TEST(LoadCorpus, MissingFileIsIoError) {
  try {
    load_corpus({fs::path(AGT_SCRATCH_DIR) / "does-not-exist.jsonl"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace agt
