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

#ifndef ONCOKG_REASON_CONSISTENCY_H_
#define ONCOKG_REASON_CONSISTENCY_H_

#include <string>
#include <utility>
#include <vector>

#include "onco/rdf/graph.hpp"

namespace onco::reason {

enum class InconsistencyKind {
  kDisjointViolation,
  kFunctionalKeyViolation,
  kRangeViolation,
  kCardinalityViolation,
};

const char* to_string(InconsistencyKind kind);

struct Inconsistency {
  InconsistencyKind kind;
  std::vector<rdf::Triple> offending;
  std::string message;
};

// Constraint declarations, normally extracted from the graph itself:
// owl:disjointWith pairs, owl:FunctionalProperty declarations, closed value
// vocabularies (functional properties whose range class is marked
// ono:closedVocabulary true, allowed values = the range's declared
// subclasses), and biomarker cardinality (citations >= 1, nonempty
// evidence) when the graph declares ono:Biomarker as a class.
struct Constraints {
  std::vector<std::pair<rdf::Term, rdf::Term>> disjoint_classes;
  std::vector<rdf::Term> functional_properties;
  std::vector<std::pair<rdf::Term, std::vector<rdf::Term>>> value_vocabularies;
  bool biomarker_cardinality = false;

  static Constraints from_graph(const rdf::Graph& graph);
};

// Expects a saturated graph so that subclass-implied types are visible.
// A default-constructed Constraints reports nothing.
std::vector<Inconsistency> check_consistency(const rdf::Graph& graph,
                                             const Constraints& constraints);

std::string render(const Inconsistency& item, const rdf::Graph& graph);

}  // namespace onco::reason

#endif  // ONCOKG_REASON_CONSISTENCY_H_
