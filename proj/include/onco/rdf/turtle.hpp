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

#ifndef ONCOKG_RDF_TURTLE_H_
#define ONCOKG_RDF_TURTLE_H_

#include <string_view>

#include "onco/rdf/graph.hpp"
#include "onco/rdf/ntriples.hpp"

namespace onco::rdf {

// Turtle subset: @prefix directives, prefixed names, the 'a' keyword,
// ';' and ',' list forms, literals with ^^ and @lang, integer and boolean
// shorthand, blank node labels, '#' comments.
//
// Collections and blank-node property lists are rejected with an explicit
// "unsupported construct" error; an undefined prefix is a parse error with
// position. Prefix declarations are recorded on the returned graph.
Graph parse_turtle_subset(std::string_view text, const ParseOptions& options = {},
                          ParseReport* report = nullptr);

void parse_turtle_subset_into(Graph& graph, std::string_view text,
                              const ParseOptions& options = {},
                              ParseReport* report = nullptr);

}  // namespace onco::rdf

#endif  // ONCOKG_RDF_TURTLE_H_
