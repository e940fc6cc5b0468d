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

#ifndef ONCOKG_DLQ_EVAL_H_
#define ONCOKG_DLQ_EVAL_H_

#include <chrono>
#include <string>
#include <vector>

#include "onco/dlq/ast.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::dlq {

struct QueryResult {
  std::vector<rdf::Term> individuals;  // canonical order
  std::size_t bindings_count = 0;      // size of the individual domain
  std::chrono::microseconds elapsed{0};
  // Individuals in the result that some `only` admitted with zero
  // r-successors (vacuous truth).
  std::size_t vacuous_only = 0;
  std::vector<std::string> warnings;
};

// Closed-world evaluation over a saturated graph.
//
// The individual domain is every IRI or blank node in subject or object
// position (classes are punned as individuals). A filler name F denotes
// F itself plus the instances typed F; for `only` a successor additionally
// qualifies when it is a (transitive) superclass of F, so entailed
// supertypes do not falsify `isA only F` on a saturated graph. `only` with
// zero successors admits vacuously and is counted. Unknown class/role IRIs
// produce a warning and an empty interpretation for that atom.
QueryResult evaluate(const ClassExpression& expr, const rdf::Graph& graph);

}  // namespace onco::dlq

#endif  // ONCOKG_DLQ_EVAL_H_
