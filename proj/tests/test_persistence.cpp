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
#include <random>

#include "agt/persistence.hpp"
#include "fixtures.hpp"

namespace agt {
namespace {

ErrorCode load_error(std::string_view bytes) {
  try {
    deserialize_graph(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "loaded without error";
  return ErrorCode::kIoError;
}

TEST(Persistence, EmptyGraphRoundTrip) {
  const GenealogyGraph empty;
  EXPECT_EQ(deserialize_graph(serialize_graph(empty)), empty);
}

TEST(Persistence, FixtureRoundTripThroughFile) {
  const auto g = testing::five_node_graph();
  const auto dir = std::filesystem::path(AGT_SCRATCH_DIR) / "persistence";
  std::filesystem::create_directories(dir);
  save_graph(g, dir / "fixture.agt");
  const auto loaded = load_graph(dir / "fixture.agt");
  EXPECT_EQ(loaded, g);
  EXPECT_EQ(serialize_graph(loaded), serialize_graph(g));
}

TEST(Persistence, LoadedIndexStillResolves) {
  const auto loaded = deserialize_graph(serialize_graph(testing::five_node_graph()));
  const auto r = resolve(loaded.identity(), IdentityQuery{"p", {}, {}, {}, std::nullopt});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(loaded.node(r.node()).display_name, "P");
  const auto owner = resolve(loaded.identity(), IdentityQuery{"Someone", "R1", {}, {}, std::nullopt});
  ASSERT_TRUE(owner.found());
  EXPECT_EQ(owner.tier, MatchTier::kPlatformId);
}

TEST(Persistence, RandomGraphsRoundTrip) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    std::vector<CurriculumRecord> records;
    for (int k = 0; k < 10; ++k) records.push_back(testing::random_record(rng));
    const auto g = build_graph(make_corpus(records));
    EXPECT_EQ(deserialize_graph(serialize_graph(g)), g);
  }
}

TEST(Persistence, HeaderLayout) {
  const auto bytes = serialize_graph(GenealogyGraph{});
  ASSERT_GE(bytes.size(), 20u);
  EXPECT_EQ(bytes.substr(0, 4), "AGT1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 1u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[5]), 0u);
  std::uint64_t length = 0;
  for (int i = 7; i >= 0; --i) length = (length << 8) | static_cast<unsigned char>(bytes[8 + i]);
  EXPECT_EQ(length, bytes.size() - 20);
}

TEST(Persistence, TruncatedFileIsCorrupt) {
  const auto bytes = serialize_graph(testing::five_node_graph());
  for (const std::size_t keep : {std::size_t{0}, std::size_t{3}, std::size_t{19}, bytes.size() / 2, bytes.size() - 1}) {
    EXPECT_EQ(load_error(std::string_view(bytes).substr(0, keep)), ErrorCode::kCorruptFile) << keep;
  }
}

TEST(Persistence, FlippedPayloadByteIsCorrupt) {
  auto bytes = serialize_graph(testing::five_node_graph());
  bytes[bytes.size() / 2] ^= 0x5A;
  EXPECT_EQ(load_error(bytes), ErrorCode::kCorruptFile);
}

TEST(Persistence, OtherMajorVersionIsMismatch) {
  auto bytes = serialize_graph(testing::five_node_graph());
  bytes[4] = 2;
  EXPECT_EQ(load_error(bytes), ErrorCode::kVersionMismatch);
}

TEST(Persistence, BadMagicIsCorrupt) {
  auto bytes = serialize_graph(testing::five_node_graph());
  bytes[0] = 'X';
  EXPECT_EQ(load_error(bytes), ErrorCode::kCorruptFile);
}

}  // namespace
}  // namespace agt
