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


#ifndef SEBIKG_JSON_SCHEMA_HPP_
#define SEBIKG_JSON_SCHEMA_HPP_

#include <string>
#include <vector>

#include <json.hpp>

namespace sebikg::schema {

// Validates `value` against a JSON schema subset: type (string or list),
// properties, required, additionalProperties (boolean), items, enum,
// minimum, maximum, minItems and anyOf. Returns one message per violation,
// each prefixed with the JSON pointer of the offending value. An empty
// result means the value conforms.
std::vector<std::string> Validate(const nlohmann::json& schema, const nlohmann::json& value);

}  // namespace sebikg::schema

#endif  // SEBIKG_JSON_SCHEMA_HPP_
