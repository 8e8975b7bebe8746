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


#ifndef SEBIKG_LLM_GATEWAY_HPP_
#define SEBIKG_LLM_GATEWAY_HPP_

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sebikg::llm {

// Stage identifiers double as schema ids and fixture key prefixes.
inline constexpr std::string_view kStage1 = "stage1";
inline constexpr std::string_view kStage2 = "stage2";
inline constexpr std::string_view kStage3 = "stage3";
inline constexpr std::string_view kStage4 = "stage4";
inline constexpr std::string_view kStage5 = "stage5";
inline constexpr std::string_view kStage6 = "stage6";
inline constexpr std::string_view kJudge = "judge";

// Registered response schemas: stage1..stage6 plus judge.
bool SchemaRegistered(std::string_view schema_id);
// Throws Error{kConfig} for unknown ids.
const nlohmann::json& SchemaFor(std::string_view schema_id);
std::vector<std::string> RegisteredSchemas();

struct Example {
  std::string input;
  std::string output;

  bool operator==(const Example&) const = default;
};

struct PromptBundle {
  std::string stage;
  std::string system_text;
  std::string user_text;
  std::vector<Example> examples;
  std::string schema_id;
  // Fixture addressing; ignored by live backends.
  std::string doc_id;
  std::optional<std::string> entity_key;
};

struct BackendConfig {
  std::string endpoint;  // chat-completions URL; empty in fixture mode
  std::string model;
  std::string api_key_env = "ATR4CH_API_KEY";
  int max_retries = 2;
  int timeout_seconds = 120;
  double temperature = 0.0;
  // Token bucket shared by every caller of one backend; 0 disables it.
  double requests_per_minute = 0;
  size_t shot_count = 3;

  // Throws Error{kConfig} when retries < 0 or timeout <= 0.
  void Validate() const;
};

struct Message {
  std::string role;
  std::string content;

  bool operator==(const Message&) const = default;
};

// Conversation sent for a prompt: system text with the schema, the few-shot
// pairs as alternating user/assistant turns, then the user text.
std::vector<Message> BuildMessages(const PromptBundle& prompt);

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  // Returns the raw assistant text for the conversation.
  virtual std::string Complete(const PromptBundle& prompt, const std::vector<Message>& messages,
                               const nlohmann::json& schema) = 0;
  virtual bool is_fixture() const { return false; }
};

// OpenAI-style chat completions over HTTP. The bearer token is read from the
// environment variable named in the config at call time and omitted when the
// variable is unset.
class HttpChatBackend : public ChatBackend {
 public:
  explicit HttpChatBackend(BackendConfig config);
  std::string Complete(const PromptBundle& prompt, const std::vector<Message>& messages,
                       const nlohmann::json& schema) override;

 private:
  BackendConfig config_;
};

std::string FixtureKey(std::string_view stage, std::string_view doc_id,
                       const std::optional<std::string>& entity_key);

// Canned responses keyed "<stage>/<doc_id>[/<entity_key>]". JSON values are
// returned serialized; string values are returned verbatim so fixtures can
// hold malformed output.
class FixtureBackend : public ChatBackend {
 public:
  explicit FixtureBackend(nlohmann::json fixtures);
  static FixtureBackend Load(const std::string& path);

  // Throws Error{kFixtureMiss}.
  const nlohmann::json& Lookup(std::string_view stage, std::string_view doc_id,
                               const std::optional<std::string>& entity_key = std::nullopt) const;
  bool Contains(const std::string& key) const { return fixtures_.contains(key); }

  std::string Complete(const PromptBundle& prompt, const std::vector<Message>& messages,
                       const nlohmann::json& schema) override;
  bool is_fixture() const override { return true; }

 private:
  nlohmann::json fixtures_;
};

// Replays queued responses in order, recording every conversation it sees.
// Intended for tests of the re-ask loop.
class ScriptedBackend : public ChatBackend {
 public:
  explicit ScriptedBackend(std::vector<std::string> responses);
  std::string Complete(const PromptBundle& prompt, const std::vector<Message>& messages,
                       const nlohmann::json& schema) override;
  bool is_fixture() const override { return true; }

  std::vector<std::vector<Message>> calls() const;

 private:
  mutable std::mutex mu_;
  std::deque<std::string> responses_;
  std::vector<std::vector<Message>> calls_;
};

// Token bucket with capacity equal to one minute's allowance divided by 60
// (at least one token). Acquire() blocks until a token is available.
class RateLimiter {
 public:
  using Clock = std::chrono::steady_clock;

  explicit RateLimiter(double requests_per_minute);
  void Acquire();
  // Non-blocking variant used by tests.
  bool TryAcquire(Clock::time_point now);

 private:
  void Refill(Clock::time_point now);

  std::mutex mu_;
  double rate_per_second_;
  double capacity_;
  double tokens_;
  Clock::time_point last_;
};

class Gateway {
 public:
  Gateway(BackendConfig config, std::shared_ptr<ChatBackend> backend);

  // Sends the prompt and returns a response that validates against the
  // prompt's schema. Invalid responses are re-asked with the validation
  // errors appended, up to max_retries times; then Error{kSchemaViolation}.
  // Transport errors propagate; HTTP 429 surfaces as Error{kRateLimited}.
  nlohmann::json CompleteStructured(const PromptBundle& prompt) const;

  const BackendConfig& config() const { return config_; }
  const ChatBackend& backend() const { return *backend_; }

 private:
  BackendConfig config_;
  std::shared_ptr<ChatBackend> backend_;
  std::shared_ptr<RateLimiter> limiter_;
};

// Editable prompt templates: per stage a system text, a user template with
// {{name}} placeholders and a list of few-shot examples.
class PromptLibrary {
 public:
  static PromptLibrary Default();
  static PromptLibrary FromJson(std::string_view json_text);
  static PromptLibrary Load(const std::string& path);

  // Throws Error{kConfig} for unknown stages, missing placeholders or when
  // fewer than `shots` examples are available.
  PromptBundle Build(std::string_view stage, const std::map<std::string, std::string>& vars,
                     std::string doc_id, std::optional<std::string> entity_key,
                     size_t shots = 3) const;

 private:
  nlohmann::json doc_;
};

// Replaces {{name}} placeholders; throws Error{kConfig} on unknown names.
std::string RenderTemplate(std::string_view tmpl, const std::map<std::string, std::string>& vars);

}  // namespace sebikg::llm

#endif  // SEBIKG_LLM_GATEWAY_HPP_
