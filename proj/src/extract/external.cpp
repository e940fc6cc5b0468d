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

#include "onco/extract/external.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <cstring>

#include <json.hpp>

#include "onco/error.hpp"

#define CPPHTTPLIB_THREAD_POOL_COUNT 4
#include <httplib.h>

namespace onco::extract {

using nlohmann::json;

std::string make_request_json(const Document& doc, const std::vector<Sentence>& sentences) {
  json request;
  request["doc_id"] = doc.id;
  json sent = json::array();
  for (const Sentence& s : sentences) {
    sent.push_back({{"index", s.index}, {"text", s.text}});
  }
  request["sentences"] = std::move(sent);
  return request.dump();
}

std::vector<std::string> normalize_wire_tags(const std::vector<std::string>& tags) {
  std::vector<std::string> out;
  std::string previous = "O";
  for (const std::string& tag : tags) {
    if (tag == "CLS" || tag == "SEP" || tag == "PAD" || tag == "[CLS]" ||
        tag == "[SEP]" || tag == "[PAD]") {
      continue;
    }
    if (tag == "X") {
      // Sub-word continuation: extend the previous token's tag.
      out.push_back(previous == "B" || previous == "I" ? "I" : "O");
    } else if (tag == "B" || tag == "I" || tag == "O") {
      out.push_back(tag);
    } else {
      out.push_back("O");
    }
    previous = out.back();
  }
  return out;
}

std::optional<ExtractorResponse> parse_response_json(const std::string& text,
                                                     std::string* error) {
  auto fail = [&](const std::string& message) -> std::optional<ExtractorResponse> {
    if (error != nullptr) *error = message;
    return std::nullopt;
  };
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) return fail("response is not valid JSON");
  if (!parsed.is_object()) return fail("response must be a JSON object");

  ExtractorResponse response;
  try {
    if (parsed.contains("mentions")) {
      if (!parsed["mentions"].is_array()) return fail("mentions must be an array");
      for (const auto& m : parsed["mentions"]) {
        WireMention mention;
        mention.sentence_index = m.at("sentence_index").get<std::size_t>();
        mention.begin = m.at("begin").get<std::size_t>();
        mention.end = m.at("end").get<std::size_t>();
        if (mention.begin >= mention.end) return fail("mention span begin >= end");
        for (const auto& c : m.at("candidates")) {
          double score = c.at("score").get<double>();
          if (score < 0.0 || score > 1.0) return fail("candidate score outside [0,1]");
          mention.candidates.emplace_back(c.at("category").get<std::string>(), score);
        }
        if (m.contains("tags")) {
          for (const auto& t : m["tags"]) mention.tags.push_back(t.get<std::string>());
        }
        response.mentions.push_back(std::move(mention));
      }
    }
    if (parsed.contains("relations")) {
      if (!parsed["relations"].is_array()) return fail("relations must be an array");
      for (const auto& r : parsed["relations"]) {
        WireRelation relation;
        relation.sentence_index = r.at("sentence_index").get<std::size_t>();
        auto subj = r.at("subj_span");
        auto obj = r.at("obj_span");
        relation.subj_span = {subj.at(0).get<std::size_t>(), subj.at(1).get<std::size_t>()};
        relation.obj_span = {obj.at(0).get<std::size_t>(), obj.at(1).get<std::size_t>()};
        relation.relation = r.at("relation").get<std::string>();
        relation.score = r.at("score").get<double>();
        if (relation.score < 0.0 || relation.score > 1.0) {
          return fail("relation score outside [0,1]");
        }
        response.relations.push_back(std::move(relation));
      }
    }
  } catch (const json::exception& e) {
    return fail(std::string("malformed response: ") + e.what());
  }
  return response;
}

namespace {

// Child process with line-oriented stdin/stdout pipes.
class SubprocessExtractor : public ExternalExtractor {
 public:
  explicit SubprocessExtractor(std::string command) : command_(std::move(command)) {}

  ~SubprocessExtractor() override { stop(); }

  std::optional<ExtractorResponse> extract(const Document& doc,
                                           const std::vector<Sentence>& sentences,
                                           std::string* error) override {
    if (pid_ < 0 && !start(error)) return std::nullopt;
    std::string request = make_request_json(doc, sentences) + "\n";
    if (!write_all(request)) {
      if (error != nullptr) *error = "extractor pipe closed while writing";
      stop();
      return std::nullopt;
    }
    std::string line;
    if (!read_line(line)) {
      if (error != nullptr) *error = "extractor produced no response line";
      stop();
      return std::nullopt;
    }
    return parse_response_json(line, error);
  }

 private:
  bool start(std::string* error) {
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0) {
      if (error != nullptr) *error = "pipe() failed";
      return false;
    }
    pid_ = fork();
    if (pid_ < 0) {
      if (error != nullptr) *error = "fork() failed";
      return false;
    }
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    stdin_fd_ = to_child[1];
    stdout_fd_ = from_child[0];
    return true;
  }

  void stop() {
    if (stdin_fd_ >= 0) close(stdin_fd_);
    if (stdout_fd_ >= 0) close(stdout_fd_);
    stdin_fd_ = stdout_fd_ = -1;
    if (pid_ > 0) {
      int status = 0;
      waitpid(pid_, &status, 0);
      pid_ = -1;
    }
  }

  bool write_all(const std::string& data) {
    std::size_t written = 0;
    while (written < data.size()) {
      ssize_t n = ::write(stdin_fd_, data.data() + written, data.size() - written);
      if (n <= 0) return false;
      written += static_cast<std::size_t>(n);
    }
    return true;
  }

  bool read_line(std::string& line) {
    line.clear();
    char c = 0;
    for (;;) {
      ssize_t n = ::read(stdout_fd_, &c, 1);
      if (n <= 0) return !line.empty();
      if (c == '\n') return true;
      line += c;
    }
  }

  std::string command_;
  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
};

class HttpExtractor : public ExternalExtractor {
 public:
  explicit HttpExtractor(const std::string& url) {
    // Split scheme://host:port and path.
    auto pos = url.find("://");
    std::string rest = (pos == std::string::npos) ? url : url.substr(pos + 3);
    auto slash = rest.find('/');
    std::string hostport = (slash == std::string::npos) ? rest : rest.substr(0, slash);
    path_ = (slash == std::string::npos) ? "/" : rest.substr(slash);
    base_ = "http://" + hostport;
  }

  std::optional<ExtractorResponse> extract(const Document& doc,
                                           const std::vector<Sentence>& sentences,
                                           std::string* error) override {
    httplib::Client client(base_);
    client.set_read_timeout(30, 0);
    auto result = client.Post(path_, make_request_json(doc, sentences), "application/json");
    if (!result) {
      if (error != nullptr) *error = "HTTP request failed: " + httplib::to_string(result.error());
      return std::nullopt;
    }
    if (result->status != 200) {
      if (error != nullptr) *error = "HTTP status " + std::to_string(result->status);
      return std::nullopt;
    }
    return parse_response_json(result->body, error);
  }

 private:
  std::string base_;
  std::string path_;
};

}  // namespace

std::unique_ptr<ExternalExtractor> make_subprocess_extractor(const std::string& command) {
  return std::make_unique<SubprocessExtractor>(command);
}

std::unique_ptr<ExternalExtractor> make_http_extractor(const std::string& url) {
  return std::make_unique<HttpExtractor>(url);
}

}  // namespace onco::extract
