// Copyright 2026 The sebikg Authors.
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


#ifndef SEBIKG_ERROR_HPP_
#define SEBIKG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sebikg {

// Every error raised by the library carries a kind so callers (the pipeline
// run report, the CLI exit-code logic) can classify failures without parsing
// messages.
enum class ErrorKind {
  kIo,
  kEncoding,
  kSidecar,
  kEmptyCorpus,
  kUnknownLabel,
  kTransport,
  kSchemaViolation,
  kRateLimited,
  kFixtureMiss,
  kBackend,
  kQuotaExceeded,
  kMapping,
  kEmptySlug,
  kParse,
  kFatalStage,
  kRehydration,
  kJudgeFormat,
  kConfig,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Turtle-star parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, size_t line, size_t column);

  size_t line() const { return line_; }
  size_t column() const { return column_; }

 private:
  size_t line_;
  size_t column_;
};

}  // namespace sebikg

#endif  // SEBIKG_ERROR_HPP_
