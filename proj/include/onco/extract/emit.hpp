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

#ifndef ONCOKG_EXTRACT_EMIT_H_
#define ONCOKG_EXTRACT_EMIT_H_

#include <string>
#include <vector>

#include "onco/clock.hpp"
#include "onco/extract/mention.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::extract {

struct EmitResult {
  std::size_t inserted = 0;
  std::size_t duplicates = 0;
  std::vector<rdf::Triple> new_triples;
};

// Inserts validated relation candidates as triples with
// Provenance(source=doc id, extractor, confidence=score). Set semantics
// count duplicates; re-running the same document inserts nothing.
EmitResult emit_triples(const std::vector<RelationCandidate>& candidates,
                        rdf::Graph& graph, const std::string& extractor,
                        const Clock& clock);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_EMIT_H_
