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

#include "onco/reason/explain.hpp"

#include <algorithm>

#include "onco/error.hpp"

namespace onco::reason {

DerivationNode explain(const SaturationResult& result, const rdf::Triple& triple) {
  if (!result.graph.contains(triple)) {
    throw NotFoundError("triple not in saturated graph: " + triple.text());
  }
  DerivationNode node;
  node.triple = triple;
  auto it = result.derivations.find(triple);
  if (it == result.derivations.end()) {
    node.asserted = true;
    const rdf::Provenance* prov = result.graph.provenance(triple);
    if (prov != nullptr) node.provenance = *prov;
    return node;
  }
  node.asserted = false;
  node.rule = it->second.rule;
  for (const rdf::Triple& body : it->second.body) {
    node.children.push_back(explain(result, body));
  }
  return node;
}

std::size_t depth(const DerivationNode& node) {
  std::size_t best = 0;
  for (const auto& child : node.children) {
    best = std::max(best, depth(child));
  }
  return best + 1;
}

namespace {

void render_into(const DerivationNode& node, const rdf::Graph& graph, std::size_t indent,
                 std::string& out) {
  out.append(indent * 2, ' ');
  out += graph.compact(node.triple.subject) + " " + graph.compact(node.triple.predicate) +
         " " +
         (node.triple.object.is_literal() ? node.triple.object.canonical()
                                          : graph.compact(node.triple.object));
  if (node.asserted) {
    out += "   [asserted";
    if (node.provenance.has_value()) {
      out += ": " + node.provenance->source + "/" + node.provenance->extractor;
    }
    out += "]";
  } else {
    out += "   [rule: " + node.rule + "]";
  }
  out += '\n';
  for (const auto& child : node.children) {
    render_into(child, graph, indent + 1, out);
  }
}

}  // namespace

std::string render(const DerivationNode& node, const rdf::Graph& graph) {
  std::string out;
  render_into(node, graph, 0, out);
  return out;
}

}  // namespace onco::reason
