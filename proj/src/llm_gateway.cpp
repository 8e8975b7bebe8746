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


#include "sebikg/llm_gateway.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "embedded_data.hpp"
#include "http_client.hpp"
#include "sebikg/error.hpp"
#include "sebikg/json_schema.hpp"
#include "sebikg/text.hpp"

namespace sebikg::llm {

using nlohmann::json;

namespace {

json ResolveRefs(const json& node, const json& definitions, int depth = 0) {
  if (depth > 16) throw Error(ErrorKind::kConfig, "schema references nest too deeply");
  if (node.is_object()) {
    if (node.contains("$ref")) {
      const std::string name = node.at("$ref").get<std::string>();
      if (!definitions.contains(name)) {
        throw Error(ErrorKind::kConfig, "schema references unknown definition '" + name + "'");
      }
      return ResolveRefs(definitions.at(name), definitions, depth + 1);
    }
    json out = json::object();
    for (const auto& [key, value] : node.items()) out[key] = ResolveRefs(value, definitions, depth);
    return out;
  }
  if (node.is_array()) {
    json out = json::array();
    for (const auto& value : node) out.push_back(ResolveRefs(value, definitions, depth));
    return out;
  }
  return node;
}

const json& Registry() {
  static const json registry = [] {
    const json doc = json::parse(embedded::kSchemas);
    const json definitions = doc.value("definitions", json::object());
    json out = json::object();
    for (const auto& [id, schema] : doc.at("schemas").items()) {
      out[id] = ResolveRefs(schema, definitions);
    }
    return out;
  }();
  return registry;
}

// Accepts bare JSON, JSON inside a Markdown fence, or JSON preceded by
// free-form reasoning.
std::optional<json> ExtractJson(const std::string& raw) {
  const std::string trimmed(text::Trim(raw));
  if (auto parsed = json::parse(trimmed, nullptr, false); !parsed.is_discarded()) return parsed;
  const size_t fence = trimmed.find("```");
  if (fence != std::string::npos) {
    size_t body = trimmed.find('\n', fence);
    const size_t close = body == std::string::npos ? body : trimmed.find("```", body);
    if (body != std::string::npos && close != std::string::npos) {
      auto parsed = json::parse(trimmed.substr(body + 1, close - body - 1), nullptr, false);
      if (!parsed.is_discarded()) return parsed;
    }
  }
  const size_t open = trimmed.find_first_of("{[");
  const size_t close = trimmed.find_last_of("}]");
  if (open != std::string::npos && close != std::string::npos && close > open) {
    auto parsed = json::parse(trimmed.substr(open, close - open + 1), nullptr, false);
    if (!parsed.is_discarded()) return parsed;
  }
  return std::nullopt;
}

std::string Bullets(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += "- " + l + "\n";
  return out;
}

}  // namespace

bool SchemaRegistered(std::string_view schema_id) {
  return Registry().contains(std::string(schema_id));
}

const json& SchemaFor(std::string_view schema_id) {
  const std::string id(schema_id);
  if (!Registry().contains(id)) throw Error(ErrorKind::kConfig, "unregistered schema '" + id + "'");
  return Registry().at(id);
}

std::vector<std::string> RegisteredSchemas() {
  std::vector<std::string> out;
  for (const auto& [id, schema] : Registry().items()) out.push_back(id);
  return out;
}

void BackendConfig::Validate() const {
  if (max_retries < 0) throw Error(ErrorKind::kConfig, "max_retries must be >= 0");
  if (timeout_seconds <= 0) throw Error(ErrorKind::kConfig, "timeout_seconds must be > 0");
  if (requests_per_minute < 0) throw Error(ErrorKind::kConfig, "requests_per_minute must be >= 0");
}

std::vector<Message> BuildMessages(const PromptBundle& prompt) {
  const json& schema = SchemaFor(prompt.schema_id);
  std::vector<Message> messages;
  messages.push_back({"system", prompt.system_text +
                                    "\n\nThe reply must be a JSON value that conforms to this "
                                    "JSON schema:\n" +
                                    schema.dump()});
  for (const auto& ex : prompt.examples) {
    messages.push_back({"user", ex.input});
    messages.push_back({"assistant", ex.output});
  }
  messages.push_back({"user", prompt.user_text});
  return messages;
}

HttpChatBackend::HttpChatBackend(BackendConfig config) : config_(std::move(config)) {
  config_.Validate();
  if (config_.endpoint.empty()) throw Error(ErrorKind::kConfig, "chat backend endpoint is empty");
}

std::string HttpChatBackend::Complete(const PromptBundle& prompt,
                                      const std::vector<Message>& messages, const json& schema) {
  json request;
  request["model"] = config_.model;
  request["temperature"] = config_.temperature;
  request["messages"] = json::array();
  for (const auto& m : messages) request["messages"].push_back({{"role", m.role}, {"content", m.content}});
  request["response_format"] = {
      {"type", "json_schema"},
      {"json_schema", {{"name", prompt.schema_id}, {"schema", schema}}}};

  http::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key != nullptr && *key) {
      headers.emplace_back("Authorization", std::string("Bearer ") + key);
    }
  }
  const auto res = http::Post(config_.endpoint, request.dump(), "application/json", headers,
                              config_.timeout_seconds);
  if (res.status == 429) throw Error(ErrorKind::kRateLimited, "chat endpoint returned HTTP 429");
  if (res.status != 200) {
    throw Error(ErrorKind::kTransport,
                "chat endpoint returned HTTP " + std::to_string(res.status) + ": " + res.body);
  }
  try {
    const json doc = json::parse(res.body);
    return doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kTransport, std::string("malformed chat response: ") + e.what());
  }
}

std::string FixtureKey(std::string_view stage, std::string_view doc_id,
                       const std::optional<std::string>& entity_key) {
  std::string key = std::string(stage) + "/" + std::string(doc_id);
  if (entity_key) key += "/" + *entity_key;
  return key;
}

FixtureBackend::FixtureBackend(json fixtures) : fixtures_(std::move(fixtures)) {
  if (!fixtures_.is_object()) throw Error(ErrorKind::kConfig, "LLM fixture file must be a JSON object");
}

FixtureBackend FixtureBackend::Load(const std::string& path) {
  json doc = json::parse(text::ReadFile(path), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::kConfig, "malformed LLM fixture file " + path);
  return FixtureBackend(std::move(doc));
}

const json& FixtureBackend::Lookup(std::string_view stage, std::string_view doc_id,
                                   const std::optional<std::string>& entity_key) const {
  const std::string key = FixtureKey(stage, doc_id, entity_key);
  if (!fixtures_.contains(key)) throw Error(ErrorKind::kFixtureMiss, "no fixture for '" + key + "'");
  return fixtures_.at(key);
}

std::string FixtureBackend::Complete(const PromptBundle& prompt, const std::vector<Message>&,
                                     const json&) {
  const json& value = Lookup(prompt.stage, prompt.doc_id, prompt.entity_key);
  return value.is_string() ? value.get<std::string>() : value.dump();
}

ScriptedBackend::ScriptedBackend(std::vector<std::string> responses)
    : responses_(responses.begin(), responses.end()) {}

std::string ScriptedBackend::Complete(const PromptBundle&, const std::vector<Message>& messages,
                                      const json&) {
  std::lock_guard lock(mu_);
  calls_.push_back(messages);
  if (responses_.empty()) throw Error(ErrorKind::kFixtureMiss, "scripted backend exhausted");
  std::string next = std::move(responses_.front());
  responses_.pop_front();
  return next;
}

std::vector<std::vector<Message>> ScriptedBackend::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

RateLimiter::RateLimiter(double requests_per_minute)
    : rate_per_second_(requests_per_minute / 60.0),
      capacity_(std::max(1.0, requests_per_minute / 60.0)),
      tokens_(capacity_),
      last_(Clock::now()) {
  if (requests_per_minute <= 0) throw Error(ErrorKind::kConfig, "rate limit must be positive");
}

void RateLimiter::Refill(Clock::time_point now) {
  if (now <= last_) return;
  const double elapsed = std::chrono::duration<double>(now - last_).count();
  tokens_ = std::min(capacity_, tokens_ + elapsed * rate_per_second_);
  last_ = now;
}

bool RateLimiter::TryAcquire(Clock::time_point now) {
  std::lock_guard lock(mu_);
  Refill(now);
  if (tokens_ < 1.0) return false;
  tokens_ -= 1.0;
  return true;
}

void RateLimiter::Acquire() {
  for (;;) {
    double wait_seconds;
    {
      std::lock_guard lock(mu_);
      Refill(Clock::now());
      if (tokens_ >= 1.0) {
        tokens_ -= 1.0;
        return;
      }
      wait_seconds = (1.0 - tokens_) / rate_per_second_;
    }
    std::this_thread::sleep_for(std::chrono::duration<double>(wait_seconds));
  }
}

Gateway::Gateway(BackendConfig config, std::shared_ptr<ChatBackend> backend)
    : config_(std::move(config)), backend_(std::move(backend)) {
  config_.Validate();
  if (!backend_) throw Error(ErrorKind::kConfig, "gateway requires a backend");
  if (config_.requests_per_minute > 0) {
    limiter_ = std::make_shared<RateLimiter>(config_.requests_per_minute);
  }
}

json Gateway::CompleteStructured(const PromptBundle& prompt) const {
  const json& schema = SchemaFor(prompt.schema_id);
  std::vector<Message> messages = BuildMessages(prompt);
  std::vector<std::string> errors;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (limiter_) limiter_->Acquire();
    const std::string raw = backend_->Complete(prompt, messages, schema);
    const auto parsed = ExtractJson(raw);
    if (!parsed) {
      errors = {"the reply is not valid JSON"};
    } else {
      errors = schema::Validate(schema, *parsed);
      if (errors.empty()) return *parsed;
    }
    messages.push_back({"assistant", raw});
    messages.push_back({"user", "The previous reply failed validation:\n" + Bullets(errors) +
                                    "Return the corrected JSON only."});
  }
  throw Error(ErrorKind::kSchemaViolation,
              FixtureKey(prompt.stage, prompt.doc_id, prompt.entity_key) + ": response violates " +
                  prompt.schema_id + " schema after " + std::to_string(config_.max_retries) +
                  " retries: " + errors.front());
}

std::string RenderTemplate(std::string_view tmpl, const std::map<std::string, std::string>& vars) {
  std::string out;
  size_t pos = 0;
  while (pos < tmpl.size()) {
    const size_t open = tmpl.find("{{", pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    const size_t close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) {
      throw Error(ErrorKind::kConfig, "unterminated placeholder in prompt template");
    }
    out.append(tmpl.substr(pos, open - pos));
    const std::string name(text::Trim(tmpl.substr(open + 2, close - open - 2)));
    auto it = vars.find(name);
    if (it == vars.end()) throw Error(ErrorKind::kConfig, "no value for placeholder {{" + name + "}}");
    out += it->second;
    pos = close + 2;
  }
  return out;
}

PromptLibrary PromptLibrary::Default() { return FromJson(embedded::kPrompts); }

PromptLibrary PromptLibrary::FromJson(std::string_view json_text) {
  PromptLibrary lib;
  lib.doc_ = json::parse(json_text, nullptr, false);
  if (lib.doc_.is_discarded() || !lib.doc_.contains("stages")) {
    throw Error(ErrorKind::kConfig, "malformed prompt library");
  }
  return lib;
}

PromptLibrary PromptLibrary::Load(const std::string& path) { return FromJson(text::ReadFile(path)); }

PromptBundle PromptLibrary::Build(std::string_view stage,
                                  const std::map<std::string, std::string>& vars,
                                  std::string doc_id, std::optional<std::string> entity_key,
                                  size_t shots) const {
  const std::string id(stage);
  const json& stages = doc_.at("stages");
  if (!stages.contains(id)) throw Error(ErrorKind::kConfig, "no prompt template for '" + id + "'");
  if (!SchemaRegistered(id)) throw Error(ErrorKind::kConfig, "unregistered schema '" + id + "'");
  const json& t = stages.at(id);

  std::map<std::string, std::string> all = vars;
  if (doc_.contains("rubrics") && all.count("rubric_id")) {
    const std::string rubric = all.at("rubric_id");
    if (!doc_["rubrics"].contains(rubric)) {
      throw Error(ErrorKind::kConfig, "unknown judge rubric '" + rubric + "'");
    }
    all["rubric"] = doc_["rubrics"][rubric].get<std::string>();
  }

  PromptBundle bundle;
  bundle.stage = id;
  bundle.schema_id = id;
  bundle.system_text = RenderTemplate(t.value("system", ""), all);
  bundle.user_text = RenderTemplate(t.value("user", ""), all);
  const json examples = t.value("examples", json::array());
  if (examples.size() < shots) {
    throw Error(ErrorKind::kConfig, "prompt '" + id + "' has " + std::to_string(examples.size()) +
                                        " examples, " + std::to_string(shots) + " requested");
  }
  for (size_t i = 0; i < shots; ++i) {
    bundle.examples.push_back(
        {examples[i].at("input").get<std::string>(), examples[i].at("output").get<std::string>()});
  }
  bundle.doc_id = std::move(doc_id);
  bundle.entity_key = std::move(entity_key);
  return bundle;
}

}  // namespace sebikg::llm
