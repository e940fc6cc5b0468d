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

#ifndef ONCOKG_EXTRACT_LINK_H_
#define ONCOKG_EXTRACT_LINK_H_

#include <string>
#include <vector>

#include "onco/extract/mention.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::extract {

struct LinkReport {
  std::vector<std::string> unlinked;         // queued-for-review surfaces
  std::vector<std::string> missing_mappings;  // entities without external ids
};

// Entity linking. A unique candidate links directly with score = prior.
// With several candidate IRIs the score is prior * context_overlap, where
//   context_overlap = (1 + |context ∩ neighbor labels|) / (1 + |context|)
// over the sentence's non-mention tokens; argmax wins, ties break on
// lexicographic IRI, and a best score below theta_link leaves the mention
// unlinked (iri = NONE) and queued for review.
std::vector<LinkedEntity> link(const std::vector<Mention>& mentions,
                               const std::vector<Sentence>& sentences,
                               const rdf::Graph& graph, double theta_link,
                               LinkReport* report = nullptr);

// Multi-type normalization: genes map to their Entrez cross reference,
// diseases to DOID. Missing mappings leave normalized_id = NONE and are
// reported.
void normalize(std::vector<LinkedEntity>& entities, const rdf::Graph& graph,
               LinkReport* report = nullptr);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_LINK_H_
