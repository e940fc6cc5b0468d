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

#ifndef ONCOKG_RDF_NTRIPLES_H_
#define ONCOKG_RDF_NTRIPLES_H_

#include <string>
#include <string_view>
#include <vector>

#include "onco/rdf/graph.hpp"

namespace onco::rdf {

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

struct ParseOptions {
  // Strict mode throws ParseError on the first malformed statement; lenient
  // mode skips it and records an issue.
  bool strict = true;
};

struct ParseReport {
  std::vector<ParseIssue> issues;
  std::size_t statements = 0;
};

// Line-oriented N-Triples. Blank lines and '#' comments are ignored;
// \t \b \n \r \f \" \\ \uXXXX \UXXXXXXXX escapes are decoded.
Graph parse_ntriples(std::string_view text, const ParseOptions& options = {},
                     ParseReport* report = nullptr);

// Same, inserting into an existing graph (duplicate statistics accumulate).
void parse_ntriples_into(Graph& graph, std::string_view text,
                         const ParseOptions& options = {}, ParseReport* report = nullptr);

// Canonical serialization: triples in (s, p, o) canonical-text order, one
// per line, LF endings, fully escaped. Content alone determines the bytes,
// and parse_ntriples(serialize_ntriples(g)) reproduces g's triple set.
std::string serialize_ntriples(const Graph& graph);

}  // namespace onco::rdf

#endif  // ONCOKG_RDF_NTRIPLES_H_
