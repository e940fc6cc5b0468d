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

#ifndef ONCOKG_REASON_SATURATE_H_
#define ONCOKG_REASON_SATURATE_H_

#include <map>
#include <vector>

#include "onco/clock.hpp"
#include "onco/rdf/graph.hpp"
#include "onco/reason/rule.hpp"

namespace onco::reason {

// How an inferred triple was first derived: the rule and the instantiated
// body triples it joined. Asserted triples have no entry.
struct Derivation {
  std::string rule;
  std::vector<rdf::Triple> body;
};

struct SaturationResult {
  rdf::Graph graph;                     // asserted plus inferred
  std::vector<rdf::Triple> inferred;    // in derivation order
  std::map<rdf::Triple, Derivation, rdf::TripleOrder> derivations;
  std::size_t rounds = 0;
};

// Least fixpoint of the built-in rules plus user rules, computed semi-naive
// (each round joins at least one body atom against the previous round's
// delta). Monotone and idempotent; the fixpoint does not depend on rule or
// insertion order. Inferred triples carry extractor="inferred" provenance.
//
// Rules are validated up front; a rule with an unbound head variable is
// rejected before anything runs. Derived heads that would place a literal
// in subject position are skipped.
SaturationResult saturate(const rdf::Graph& graph,
                          const std::vector<Rule>& user_rules = {},
                          const Clock& clock = system_clock());

}  // namespace onco::reason

#endif  // ONCOKG_REASON_SATURATE_H_
