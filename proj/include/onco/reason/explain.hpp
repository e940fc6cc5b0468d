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

#ifndef ONCOKG_REASON_EXPLAIN_H_
#define ONCOKG_REASON_EXPLAIN_H_

#include <optional>
#include <string>
#include <vector>

#include "onco/reason/saturate.hpp"

namespace onco::reason {

// Derivation tree node: asserted triples are leaves annotated with their
// provenance; inferred triples name the rule and recursively explain the
// body bindings. Acyclic by construction (bodies precede heads).
struct DerivationNode {
  rdf::Triple triple;
  bool asserted = true;
  std::optional<rdf::Provenance> provenance;
  std::string rule;
  std::vector<DerivationNode> children;
};

// Throws NotFoundError when the triple is not in the saturated graph.
DerivationNode explain(const SaturationResult& result, const rdf::Triple& triple);

// Longest root-to-leaf path length, counting nodes.
std::size_t depth(const DerivationNode& node);

std::string render(const DerivationNode& node, const rdf::Graph& graph);

}  // namespace onco::reason

#endif  // ONCOKG_REASON_EXPLAIN_H_
