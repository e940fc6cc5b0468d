// Copyright 2026 The OncoKG Authors.
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

#ifndef ONCOKG_LLM_CLIENT_H_
#define ONCOKG_LLM_CLIENT_H_

#include <memory>
#include <string>
#include <vector>

namespace onco::llm {

struct RequestParams {
  double temperature = 0.0;
  int timeout_seconds = 60;
  int max_retries = 3;
  int backoff_base_ms = 200;  // doubles per retry
};

// One transport attempt. Transient failures are retried by request();
// fatal ones abort immediately.
struct Completion {
  enum class Status { kOk, kTransient, kFatal };
  Status status = Status::kOk;
  std::string text;   // model text on kOk
  std::string error;  // diagnostic otherwise
};

class LlmClient {
 public:
  virtual ~LlmClient() = default;
  virtual Completion complete(const std::string& prompt, const RequestParams& params) = 0;
};

// Endpoint, model name, and credential, read from the environment:
// ONCOKG_LLM_ENDPOINT, ONCOKG_LLM_MODEL, ONCOKG_LLM_KEY. Throws ConfigError
// when something required is missing — before any network activity.
struct ClientConfig {
  std::string endpoint;
  std::string model;
  std::string credential;

  static ClientConfig from_env();
};

// Chat-completion shape over HTTP: messages array in, first choice text out.
std::unique_ptr<LlmClient> make_http_client(const ClientConfig& config);

// Deterministic scripted client for tests and replayable runs.
class MockClient : public LlmClient {
 public:
  // Responses are served in order; the last one repeats. An entry whose
  // status is kTransient/kFatal simulates that failure once.
  explicit MockClient(std::vector<Completion> script) : script_(std::move(script)) {}
  static std::unique_ptr<MockClient> canned(const std::string& text);

  Completion complete(const std::string& prompt, const RequestParams& params) override;

  std::size_t calls() const { return calls_; }
  const std::vector<std::string>& prompts() const { return prompts_; }

 private:
  std::vector<Completion> script_;
  std::size_t next_ = 0;
  std::size_t calls_ = 0;
  std::vector<std::string> prompts_;
};

// Runs the client with retry + exponential backoff on transient failures.
// Throws TransportError after max_retries transient failures or on a fatal
// response.
std::string request(LlmClient& client, const std::string& prompt,
                    const RequestParams& params = {});

}  // namespace onco::llm

#endif  // ONCOKG_LLM_CLIENT_H_
