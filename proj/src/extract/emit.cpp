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

#include "onco/extract/emit.hpp"

#include "onco/error.hpp"

namespace onco::extract {

EmitResult emit_triples(const std::vector<RelationCandidate>& candidates,
                        rdf::Graph& graph, const std::string& extractor,
                        const Clock& clock) {
  EmitResult result;
  for (const RelationCandidate& candidate : candidates) {
    if (!candidate.subject.iri.has_value() || !candidate.object.iri.has_value()) {
      throw StructuralError("relation candidate with unlinked entity");
    }
    rdf::Triple triple{*candidate.subject.iri, candidate.relation, *candidate.object.iri};
    rdf::Provenance prov{candidate.doc_id, extractor, candidate.score, clock()};
    if (graph.insert(triple, prov)) {
      ++result.inserted;
      result.new_triples.push_back(triple);
    } else {
      ++result.duplicates;
    }
  }
  return result;
}

}  // namespace onco::extract
