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


#include "sebikg/json_schema.hpp"

#include <algorithm>
#include <cmath>

namespace sebikg::schema {

using nlohmann::json;

namespace {

bool HasType(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "number") return value.is_number();
  if (type == "integer") {
    if (value.is_number_integer()) return true;
    if (!value.is_number_float()) return false;
    const double d = value.get<double>();
    return std::isfinite(d) && std::floor(d) == d;
  }
  return false;
}

std::string Where(const std::string& pointer) { return pointer.empty() ? "/" : pointer; }

void Check(const json& schema, const json& value, const std::string& pointer,
           std::vector<std::string>& errors) {
  if (!schema.is_object()) return;

  if (schema.contains("type")) {
    const json& type = schema.at("type");
    std::vector<std::string> allowed;
    if (type.is_string()) {
      allowed.push_back(type.get<std::string>());
    } else {
      for (const auto& t : type) allowed.push_back(t.get<std::string>());
    }
    const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                [&](const std::string& t) { return HasType(value, t); });
    if (!ok) {
      errors.push_back(Where(pointer) + ": expected " + type.dump() + ", got " +
                       std::string(value.type_name()));
      return;
    }
  }

  if (schema.contains("enum")) {
    const json& options = schema.at("enum");
    if (std::find(options.begin(), options.end(), value) == options.end()) {
      errors.push_back(Where(pointer) + ": " + value.dump() + " is not one of " + options.dump());
    }
  }

  if (value.is_number()) {
    const double d = value.get<double>();
    if (schema.contains("minimum") && d < schema.at("minimum").get<double>()) {
      errors.push_back(Where(pointer) + ": " + value.dump() + " is below minimum " +
                       schema.at("minimum").dump());
    }
    if (schema.contains("maximum") && d > schema.at("maximum").get<double>()) {
      errors.push_back(Where(pointer) + ": " + value.dump() + " is above maximum " +
                       schema.at("maximum").dump());
    }
  }

  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          errors.push_back(Where(pointer) + ": missing required property \"" +
                           key.get<std::string>() + "\"");
        }
      }
    }
    const json properties = schema.value("properties", json::object());
    for (const auto& [key, child] : value.items()) {
      if (properties.contains(key)) {
        Check(properties.at(key), child, pointer + "/" + key, errors);
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema.at("additionalProperties");
        if (extra.is_boolean() && !extra.get<bool>()) {
          errors.push_back(Where(pointer) + ": unexpected property \"" + key + "\"");
        } else if (extra.is_object()) {
          Check(extra, child, pointer + "/" + key, errors);
        }
      }
    }
  }

  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema.at("minItems").get<size_t>()) {
      errors.push_back(Where(pointer) + ": expected at least " + schema.at("minItems").dump() +
                       " items");
    }
    if (schema.contains("items")) {
      for (size_t i = 0; i < value.size(); ++i) {
        Check(schema.at("items"), value[i], pointer + "/" + std::to_string(i), errors);
      }
    }
  }

  if (schema.contains("anyOf")) {
    bool matched = false;
    for (const auto& branch : schema.at("anyOf")) {
      std::vector<std::string> branch_errors;
      Check(branch, value, pointer, branch_errors);
      if (branch_errors.empty()) {
        matched = true;
        break;
      }
    }
    if (!matched) errors.push_back(Where(pointer) + ": matches none of the allowed shapes");
  }
}

}  // namespace

std::vector<std::string> Validate(const json& schema, const json& value) {
  std::vector<std::string> errors;
  Check(schema, value, "", errors);
  return errors;
}

}  // namespace sebikg::schema
