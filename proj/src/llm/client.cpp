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

#include "onco/llm/client.hpp"

#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "onco/error.hpp"

#include <httplib.h>

namespace onco::llm {

using nlohmann::json;

ClientConfig ClientConfig::from_env() {
  ClientConfig config;
  const char* endpoint = std::getenv("ONCOKG_LLM_ENDPOINT");
  const char* model = std::getenv("ONCOKG_LLM_MODEL");
  const char* key = std::getenv("ONCOKG_LLM_KEY");
  if (endpoint == nullptr || *endpoint == '\0') {
    throw ConfigError("ONCOKG_LLM_ENDPOINT is not set");
  }
  if (model == nullptr || *model == '\0') {
    throw ConfigError("ONCOKG_LLM_MODEL is not set");
  }
  if (key == nullptr || *key == '\0') {
    throw ConfigError("ONCOKG_LLM_KEY is not set (credential required)");
  }
  config.endpoint = endpoint;
  config.model = model;
  config.credential = key;
  return config;
}

namespace {

class HttpClient : public LlmClient {
 public:
  explicit HttpClient(ClientConfig config) : config_(std::move(config)) {
    auto pos = config_.endpoint.find("://");
    std::string rest =
        (pos == std::string::npos) ? config_.endpoint : config_.endpoint.substr(pos + 3);
    auto slash = rest.find('/');
    base_ = "http://" + ((slash == std::string::npos) ? rest : rest.substr(0, slash));
    path_ = (slash == std::string::npos) ? "/v1/chat/completions" : rest.substr(slash);
  }

  Completion complete(const std::string& prompt, const RequestParams& params) override {
    json body;
    body["model"] = config_.model;
    body["temperature"] = params.temperature;
    body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});

    httplib::Client client(base_);
    client.set_read_timeout(params.timeout_seconds, 0);
    client.set_connection_timeout(params.timeout_seconds, 0);
    httplib::Headers headers{{"Authorization", "Bearer " + config_.credential}};
    auto result = client.Post(path_, headers, body.dump(), "application/json");
    if (!result) {
      return {Completion::Status::kTransient, "",
              "transport failure: " + httplib::to_string(result.error())};
    }
    if (result->status == 429 || result->status >= 500) {
      return {Completion::Status::kTransient, "",
              "status " + std::to_string(result->status) + ": " +
                  result->body.substr(0, 200)};
    }
    if (result->status != 200) {
      return {Completion::Status::kFatal, "",
              "status " + std::to_string(result->status) + ": " +
                  result->body.substr(0, 200)};
    }
    json parsed = json::parse(result->body, nullptr, false);
    if (parsed.is_discarded()) {
      return {Completion::Status::kFatal, "", "response body is not JSON"};
    }
    try {
      std::string text = parsed.at("choices").at(0).at("message").at("content");
      return {Completion::Status::kOk, text, ""};
    } catch (const json::exception& e) {
      return {Completion::Status::kFatal, "",
              std::string("unexpected response shape: ") + e.what()};
    }
  }

 private:
  ClientConfig config_;
  std::string base_;
  std::string path_;
};

}  // namespace

std::unique_ptr<LlmClient> make_http_client(const ClientConfig& config) {
  return std::make_unique<HttpClient>(config);
}

std::unique_ptr<MockClient> MockClient::canned(const std::string& text) {
  return std::make_unique<MockClient>(
      std::vector<Completion>{{Completion::Status::kOk, text, ""}});
}

Completion MockClient::complete(const std::string& prompt, const RequestParams&) {
  ++calls_;
  prompts_.push_back(prompt);
  if (script_.empty()) return {Completion::Status::kFatal, "", "empty mock script"};
  const Completion& entry = script_[std::min(next_, script_.size() - 1)];
  ++next_;
  return entry;
}

std::string request(LlmClient& client, const std::string& prompt,
                    const RequestParams& params) {
  int attempts = 0;
  std::string last_error;
  while (attempts <= params.max_retries) {
    Completion completion = client.complete(prompt, params);
    switch (completion.status) {
      case Completion::Status::kOk:
        return completion.text;
      case Completion::Status::kFatal:
        throw TransportError("llm request failed: " + completion.error);
      case Completion::Status::kTransient:
        last_error = completion.error;
        ++attempts;
        if (attempts <= params.max_retries) {
          auto delay = std::chrono::milliseconds(
              params.backoff_base_ms * (1L << (attempts - 1)));
          std::this_thread::sleep_for(delay);
        }
    }
  }
  throw TransportError("llm request failed after " + std::to_string(params.max_retries) +
                       " retries: " + last_error);
}

}  // namespace onco::llm
