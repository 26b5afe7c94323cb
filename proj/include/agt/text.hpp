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

#ifndef AGT_TEXT_HPP
#define AGT_TEXT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "agt/error.hpp"

namespace agt {

inline std::string trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(kSpace);
  return std::string(s.substr(begin, end - begin + 1));
}

namespace detail {

// Decodes one UTF-8 sequence starting at s[i]; advances i. Invalid or
// truncated sequences decode to U+FFFD and consume a single byte.
inline char32_t next_code_point(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char lead = byte(i);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++i;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    if (i + k >= s.size() || (byte(i + k) & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  i += static_cast<std::size_t>(extra) + 1;
  return cp;
}

inline bool is_separator(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case U'-': case U'_': case U'/':
    case 0x00A0: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200A) || (cp >= 0x2010 && cp <= 0x2015);
  }
}

// ASCII replacement for U+00C0..U+017F; "" means the code point is dropped.
inline std::string_view fold_latin(char32_t cp) {
  static constexpr std::string_view kLatin1 =
      "aaaaaa" "Acee" "eeii" "iidn" "ooooo" "*ou" "uuuy" "TS"
      "aaaaaa" "Acee" "eeii" "iidn" "ooooo" "*ou" "uuuy" "Ty";
  static constexpr std::string_view kExtendedA =
      "aaaaaa" "cccccccc" "dddd" "eeeeeeeeee" "gggggggg" "hhhh" "iiiiiiiiii" "12"
      "jj" "kkk" "llllllllll" "nnnnnnnnn" "oooooo" "34" "rrrrrr" "ssssssss"
      "tttttt" "uuuuuuuuuuuu" "ww" "yyy" "zzzzzz" "s";
  static_assert(kLatin1.size() == 0x40 && kExtendedA.size() == 0x80);
  char code = 0;
  if (cp >= 0xC0 && cp <= 0xFF) {
    code = kLatin1[cp - 0xC0];
  } else if (cp >= 0x100 && cp <= 0x17F) {
    code = kExtendedA[cp - 0x100];
  } else {
    return {};
  }
  switch (code) {
    case '*': return {};
    case 'A': return "ae";
    case 'T': return "th";
    case 'S': return "ss";
    case '1': case '2': return "ij";
    case '3': case '4': return "oe";
    default: break;
  }
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";
  return kLetters.substr(static_cast<std::size_t>(code - 'a'), 1);
}

}  // namespace detail

// Case-folds, strips diacritics, deletes punctuation and collapses
// whitespace. Output holds only [a-z0-9] tokens separated by single spaces.
inline std::vector<std::string> fold_tokens(std::string_view raw) {
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  std::size_t i = 0;
  while (i < raw.size()) {
    const char32_t cp = detail::next_code_point(raw, i);
    if (detail::is_separator(cp)) {
      flush();
    } else if (cp >= U'a' && cp <= U'z') {
      current.push_back(static_cast<char>(cp));
    } else if (cp >= U'A' && cp <= U'Z') {
      current.push_back(static_cast<char>(cp - U'A' + U'a'));
    } else if (cp >= U'0' && cp <= U'9') {
      current.push_back(static_cast<char>(cp));
    } else if (cp >= 0xC0) {
      current.append(detail::fold_latin(cp));
    }
  }
  flush();
  return tokens;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

// Folded form used as a key for institutions and work titles.
inline std::string fold_text(std::string_view raw) { return join_tokens(fold_tokens(raw)); }

struct NameKey {
  std::string normalized;

  friend auto operator<=>(const NameKey&, const NameKey&) = default;
};

inline bool is_name_particle(std::string_view token) {
  static constexpr std::array<std::string_view, 6> kParticles = {"de", "da", "do", "dos", "das", "e"};
  return std::find(kParticles.begin(), kParticles.end(), token) != kParticles.end();
}

// Particles are dropped unless the name consists of particles only.
inline NameKey normalize_name(std::string_view raw) {
  auto tokens = fold_tokens(raw);
  if (tokens.empty()) throw Error(ErrorCode::kEmptyName, "name '" + std::string(raw) + "' has no letters or digits");
  std::vector<std::string> kept;
  for (auto& t : tokens) {
    if (!is_name_particle(t)) kept.push_back(t);
  }
  return NameKey{join_tokens(kept.empty() ? tokens : kept)};
}

}  // namespace agt

#endif  // AGT_TEXT_HPP
