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

#ifndef ONCOKG_LLM_RESPONSE_H_
#define ONCOKG_LLM_RESPONSE_H_

#include <string>
#include <vector>

#include "onco/ontology/gazetteer.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::llm {

struct Reject {
  std::size_t line = 0;
  std::string text;
  std::string reason;
};

struct ParsedResponse {
  std::vector<rdf::Triple> triples;  // in response order, deduplicated
  std::vector<Reject> rejects;
};

struct ResponseOptions {
  // Unknown entities become rejects unless minting is explicitly enabled.
  bool mint_unknown = false;
};

// Total parser for model output: accepts subject|relation|object lines and
// N-Triples lines, skips blanks, and turns everything else into a reject
// with a reason (never aborts). Surface forms resolve through the
// gazetteer; relations must come from the accepted roster (isA maps to
// rdf:type); hasCitations objects parse as integers.
ParsedResponse parse_response(const std::string& text, const rdf::Graph& kg,
                              const ontology::Gazetteer& gazetteer,
                              const ResponseOptions& options = {});

}  // namespace onco::llm

#endif  // ONCOKG_LLM_RESPONSE_H_
