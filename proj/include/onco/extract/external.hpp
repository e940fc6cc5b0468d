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

#ifndef ONCOKG_EXTRACT_EXTERNAL_H_
#define ONCOKG_EXTRACT_EXTERNAL_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "onco/extract/document.hpp"

namespace onco::extract {

// Wire protocol shared by the subprocess pipe and HTTP POST transports:
// newline-delimited JSON, one request and one response per document.
//
// request  {"doc_id": ..., "sentences": [{"index": i, "text": ...}]}
// response {"mentions":  [{"sentence_index", "begin", "end",
//                          "candidates": [{"category", "score"}],
//                          "tags": [...]}],
//           "relations": [{"sentence_index", "subj_span": [b,e],
//                          "obj_span": [b,e], "relation", "score"}]}
struct WireMention {
  std::size_t sentence_index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<std::pair<std::string, double>> candidates;  // (category, score)
  std::vector<std::string> tags;
};

struct WireRelation {
  std::size_t sentence_index = 0;
  std::pair<std::size_t, std::size_t> subj_span;
  std::pair<std::size_t, std::size_t> obj_span;
  std::string relation;
  double score = 0.0;
};

struct ExtractorResponse {
  std::vector<WireMention> mentions;
  std::vector<WireRelation> relations;
};

std::string make_request_json(const Document& doc, const std::vector<Sentence>& sentences);

// Validates shape and ranges; a malformed message yields an error message
// instead of a response, and the pipeline falls back to the built-in
// extractor for that document.
std::optional<ExtractorResponse> parse_response_json(const std::string& text,
                                                     std::string* error);

// Model tag normalization: X extends the previous token's tag (B/I -> I,
// O -> O); CLS, SEP and PAD carry no span semantics and are dropped.
std::vector<std::string> normalize_wire_tags(const std::vector<std::string>& tags);

class ExternalExtractor {
 public:
  virtual ~ExternalExtractor() = default;
  virtual std::optional<ExtractorResponse> extract(const Document& doc,
                                                   const std::vector<Sentence>& sentences,
                                                   std::string* error) = 0;
};

// Runs `command` via /bin/sh once for the whole run; one NDJSON
// request/response round trip per document over its stdin/stdout.
std::unique_ptr<ExternalExtractor> make_subprocess_extractor(const std::string& command);

// POSTs each request to the given URL.
std::unique_ptr<ExternalExtractor> make_http_extractor(const std::string& url);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_EXTERNAL_H_
