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


#ifndef SEBIKG_TEXT_HPP_
#define SEBIKG_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared across modules. All functions operate on UTF-8
// bytes; case folding only touches ASCII letters.
namespace sebikg::text {

bool IsValidUtf8(std::string_view s);

std::string ToLowerAscii(std::string_view s);

std::string_view Trim(std::string_view s);

// Collapses runs of whitespace to a single space and trims both ends.
std::string NormalizeWhitespace(std::string_view s);

// Lowercase, whitespace-normalized form used for label and mention matching.
std::string FoldForMatch(std::string_view s);

std::vector<std::string> SplitWhitespace(std::string_view s);

bool IsSpace(char c);
bool IsWordChar(char c);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

}  // namespace sebikg::text

#endif  // SEBIKG_TEXT_HPP_
