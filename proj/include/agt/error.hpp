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

#ifndef AGT_ERROR_HPP
#define AGT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace agt {

enum class ErrorCode {
  kMalformedRecord,
  kMalformedXml,
  kMissingField,
  kInvalidEnum,
  kInvalidValue,
  kIoError,
  kEmptyName,
  kUnknownNode,
  kNotARoot,
  kNoTrees,
  kVersionMismatch,
  kCorruptFile,
  kTruthMismatch,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kInvalidEnum: return "InvalidEnum";
    case ErrorCode::kInvalidValue: return "InvalidValue";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEmptyName: return "EmptyName";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kNotARoot: return "NotARoot";
    case ErrorCode::kNoTrees: return "NoTrees";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kCorruptFile: return "CorruptFile";
    case ErrorCode::kTruthMismatch: return "TruthMismatch";
  }
  return "Unknown";
}

// All library failures surface as agt::Error. byte_offset is set for
// syntax errors in the canonical record format.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> byte_offset = std::nullopt)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        byte_offset_(byte_offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> byte_offset() const noexcept { return byte_offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> byte_offset_;
};

}  // namespace agt

#endif  // AGT_ERROR_HPP
