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


#ifndef SEBIKG_SRC_EMBEDDED_DATA_HPP_
#define SEBIKG_SRC_EMBEDDED_DATA_HPP_

#include <string_view>

// Contents of the files under data/, compiled in at configure time.
namespace sebikg::embedded {

extern const std::string_view kFeatureAliases;
extern const std::string_view kScholarlyOccupations;
extern const std::string_view kPrefixes;
extern const std::string_view kItemTypeLookup;
extern const std::string_view kSchemas;
extern const std::string_view kPrompts;

}  // namespace sebikg::embedded

#endif  // SEBIKG_SRC_EMBEDDED_DATA_HPP_
