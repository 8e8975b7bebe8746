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


#include "sebikg/error.hpp"

namespace sebikg {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kEncoding: return "EncodingError";
    case ErrorKind::kSidecar: return "SidecarError";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kTransport: return "TransportError";
    case ErrorKind::kSchemaViolation: return "SchemaViolation";
    case ErrorKind::kRateLimited: return "RateLimited";
    case ErrorKind::kFixtureMiss: return "FixtureMiss";
    case ErrorKind::kBackend: return "BackendError";
    case ErrorKind::kQuotaExceeded: return "QuotaExceeded";
    case ErrorKind::kMapping: return "MappingError";
    case ErrorKind::kEmptySlug: return "EmptySlug";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kFatalStage: return "FatalStageError";
    case ErrorKind::kRehydration: return "RehydrationError";
    case ErrorKind::kJudgeFormat: return "JudgeFormatError";
    case ErrorKind::kConfig: return "ConfigError";
  }
  return "Error";
}

ParseError::ParseError(const std::string& message, size_t line, size_t column)
    : Error(ErrorKind::kParse, std::to_string(line) + ":" +
                                   std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace sebikg
