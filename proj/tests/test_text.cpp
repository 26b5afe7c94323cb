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

#include <random>

#include "agt/text.hpp"
#include "fixtures.hpp"

namespace agt {
namespace {

TEST(NormalizeName, StripsDiacriticsAndParticles) {
  EXPECT_EQ(normalize_name("João de Souza").normalized, "joao souza");
  EXPECT_EQ(normalize_name("Maria das Graças e Silva").normalized, "maria gracas silva");
}

TEST(NormalizeName, CollapsesWhitespaceAndCase) {
  EXPECT_EQ(normalize_name("  MARIA  SILVA ").normalized, "maria silva");
  EXPECT_EQ(normalize_name("maria\tsilva").normalized, "maria silva");
}

TEST(NormalizeName, HyphenSeparatesOtherPunctuationDeletes) {
  EXPECT_EQ(normalize_name("Ana-Lúcia O'Neil").normalized, "ana lucia oneil");
  EXPECT_EQ(normalize_name("J. R. R. Tolkien").normalized, "j r r tolkien");
}

TEST(NormalizeName, ParticleOnlyNameKeepsParticles) {
  EXPECT_EQ(normalize_name("De Da").normalized, "de da");
}

TEST(NormalizeName, EmptyNameRaises) {
  for (const char* raw : {"", "   ", "...", "«»"}) {
    try {
      normalize_name(raw);
      ADD_FAILURE() << "no error for '" << raw << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyName);
    }
  }
}

TEST(NormalizeName, LatinExtendedLetters) {
  EXPECT_EQ(normalize_name("Łukasz Żółć").normalized, "lukasz zolc");
  EXPECT_EQ(normalize_name("Ærø Straße").normalized, "aero strasse");
}

TEST(NormalizeName, IsIdempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto raw = testing::random_text(rng, 5);
    const auto once = normalize_name(raw).normalized;
    EXPECT_EQ(normalize_name(once).normalized, once) << raw;
  }
}

TEST(FoldText, KeepsOnlyAsciiTokens) {
  EXPECT_EQ(fold_text("Universidade de São Paulo"), "universidade de sao paulo");
  EXPECT_EQ(fold_text("  "), "");
}

}  // namespace
}  // namespace agt
