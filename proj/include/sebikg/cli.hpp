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


#ifndef SEBIKG_CLI_HPP_
#define SEBIKG_CLI_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sebikg/linker.hpp"
#include "sebikg/llm_gateway.hpp"
#include "sebikg/rdfgen.hpp"

namespace sebikg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitFatal = 2;

// Settings shared by the subcommands. Values come from a key = value config
// file first, then from command-line flags.
struct RunConfig {
  std::vector<std::string> inputs;
  std::string out_dir;
  // LLM backend: a fixture file wins over a live endpoint.
  std::string fixtures;
  llm::BackendConfig backend;
  std::string prompts_path;
  // NER: an external endpoint wins over the gazetteer file.
  std::string gazetteer;
  std::string ner_endpoint;
  linker::LinkerConfig linker;
  rdfgen::MapConfig map;
  std::string feature_aliases;
  std::string equivalences;
  std::string gold;
  int stage_from = 1;
  int stage_to = 6;
  size_t jobs = 1;
  size_t entity_jobs = 1;
};

// Parses "key = value" lines; '#' starts a comment. Throws Error{kConfig}.
std::map<std::string, std::string> ParseConfigText(std::string_view text);

// Applies parsed keys to `config`; unknown keys throw Error{kConfig}.
void ApplyConfig(const std::map<std::string, std::string>& values, RunConfig& config);

// Entry point behind the sebikg binary. Returns 0 on success, 1 when some
// documents or entities failed, 2 on fatal and usage errors.
int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sebikg::cli

#endif  // SEBIKG_CLI_HPP_
