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

#ifndef ONCOKG_EXTRACT_PIPELINE_H_
#define ONCOKG_EXTRACT_PIPELINE_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "onco/clock.hpp"
#include "onco/extract/external.hpp"
#include "onco/extract/link.hpp"
#include "onco/extract/mention.hpp"
#include "onco/ontology/gazetteer.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::extract {

enum class ExtractorMode { kBuiltin, kSubprocess, kHttp };

struct PipelineOptions {
  ExtractorMode mode = ExtractorMode::kBuiltin;
  std::string extractor_target;  // command line or URL
  double theta_link = 0.5;
  std::size_t jobs = 1;
};

struct DocumentReport {
  std::string doc_id;
  std::size_t mentions = 0;
  std::size_t linked = 0;
  std::size_t candidates = 0;
  std::size_t inserted = 0;
  std::size_t duplicates = 0;
  LinkReport link_report;
  std::vector<std::string> errors;  // external-extractor failures etc.
};

struct ExtractionResult {
  std::vector<DocumentReport> docs;
  std::size_t inserted_total = 0;
  std::size_t duplicate_total = 0;
  std::vector<Mention> mentions;  // resolved, for scoring
  std::map<std::string, std::vector<Sentence>> sentences_by_doc;
};

// Text -> triples. Documents are analyzed in parallel (up to jobs workers);
// triple emission runs sequentially in document-id order through the
// graph's single-writer contract, so the resulting triple set is
// independent of scheduling. A malformed external-extractor response is
// recorded per document and the built-in extractor takes over for it.
ExtractionResult run_extraction(rdf::Graph& kg, const std::vector<Document>& corpus,
                                const ontology::Gazetteer& gazetteer,
                                const PipelineOptions& options, const Clock& clock);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_PIPELINE_H_
