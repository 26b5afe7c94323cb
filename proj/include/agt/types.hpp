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

#ifndef AGT_TYPES_HPP
#define AGT_TYPES_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "agt/error.hpp"

namespace agt {

enum class DegreeLevel : std::uint8_t { kMasters, kPhd };
enum class Role : std::uint8_t { kAdvisor, kCoadvisor };
enum class Evidence : std::uint8_t { kAdviseeSide, kAdvisorSide, kBoth };

inline std::string_view to_string(DegreeLevel level) {
  return level == DegreeLevel::kPhd ? "PHD" : "MASTERS";
}

inline std::string_view to_string(Role role) {
  return role == Role::kCoadvisor ? "COADVISOR" : "ADVISOR";
}

inline std::string_view to_string(Evidence evidence) {
  switch (evidence) {
    case Evidence::kAdviseeSide: return "ADVISEE_SIDE";
    case Evidence::kAdvisorSide: return "ADVISOR_SIDE";
    case Evidence::kBoth: return "BOTH";
  }
  return "BOTH";
}

inline DegreeLevel parse_degree_level(std::string_view text) {
  if (text == "PHD") return DegreeLevel::kPhd;
  if (text == "MASTERS") return DegreeLevel::kMasters;
  throw Error(ErrorCode::kInvalidEnum, "unknown degree level '" + std::string(text) + "'");
}

inline Role parse_role(std::string_view text) {
  if (text == "ADVISOR") return Role::kAdvisor;
  if (text == "COADVISOR") return Role::kCoadvisor;
  throw Error(ErrorCode::kInvalidEnum, "unknown mentorship role '" + std::string(text) + "'");
}

inline Evidence parse_evidence(std::string_view text) {
  if (text == "ADVISEE_SIDE") return Evidence::kAdviseeSide;
  if (text == "ADVISOR_SIDE") return Evidence::kAdvisorSide;
  if (text == "BOTH") return Evidence::kBoth;
  throw Error(ErrorCode::kInvalidEnum, "unknown evidence '" + std::string(text) + "'");
}

inline Evidence merge_evidence(Evidence a, Evidence b) {
  return a == b ? a : Evidence::kBoth;
}

// Dense index of a researcher node inside one GenealogyGraph.
struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend std::ostream& operator<<(std::ostream& os, NodeId id) { return os << id.value; }
};

}  // namespace agt

template <>
struct std::hash<agt::NodeId> {
  std::size_t operator()(agt::NodeId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

#endif  // AGT_TYPES_HPP
