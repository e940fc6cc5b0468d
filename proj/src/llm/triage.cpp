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

#include "onco/llm/triage.hpp"

#include <optional>
#include <set>

#include "onco/ontology/vocab.hpp"

namespace onco::llm {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

// True when the instance carries the class (directly, via a subclass, or
// when the instance IS the class or one of its subclasses — classes are
// punned as instances here).
bool satisfies_class(const Graph& graph, const Term& instance, const Term& cls) {
  if (instance == cls) return true;
  if (graph.contains({instance, ontology::rdf_type(), cls})) return true;
  if (graph.contains({instance, ontology::rdfs_subclass_of(), cls})) return true;
  return false;
}

std::optional<std::string> domain_range_violation(const Graph& graph, const Triple& t) {
  if (t.predicate == ontology::rdf_type()) {
    // isA assertions: the object must be a declared class.
    if (!graph.contains({t.object, ontology::rdf_type(), ontology::rdfs_class()})) {
      return "object of isA is not a declared class: " + t.object.canonical();
    }
    return std::nullopt;
  }
  for (const auto& dt : graph.match(t.predicate, ontology::rdfs_domain(), std::nullopt)) {
    if (!satisfies_class(graph, t.subject, dt.object)) {
      return "domain violation: subject " + t.subject.canonical() + " is not a " +
             dt.object.canonical();
    }
  }
  for (const auto& rt : graph.match(t.predicate, ontology::rdfs_range(), std::nullopt)) {
    if (t.object.is_literal()) {
      if (rt.object.is_iri() && rt.object.value() != t.object.datatype() &&
          rt.object.value().rfind(std::string(ontology::ns::kXsd), 0) == 0) {
        return "range violation: literal datatype " + t.object.datatype() +
               " does not match " + rt.object.canonical();
      }
      continue;
    }
    if (!satisfies_class(graph, t.object, rt.object)) {
      return "range violation: object " + t.object.canonical() + " is not a " +
             rt.object.canonical();
    }
  }
  return std::nullopt;
}

// Would inserting the triple create a new key or disjointness violation?
std::optional<std::string> conflict_reason(const Triple& t,
                                           const reason::SaturationResult& base,
                                           const std::vector<reason::Rule>& user_rules,
                                           const std::set<std::string>& baseline) {
  Graph scratch = base.graph;
  scratch.insert(t);
  reason::SaturationResult trial = reason::saturate(scratch, user_rules);
  auto constraints = reason::Constraints::from_graph(trial.graph);
  for (const auto& item : reason::check_consistency(trial.graph, constraints)) {
    if (item.kind != reason::InconsistencyKind::kFunctionalKeyViolation &&
        item.kind != reason::InconsistencyKind::kDisjointViolation) {
      continue;
    }
    std::string key = std::string(reason::to_string(item.kind)) + "|" + item.message;
    if (baseline.count(key) == 0) return item.message;
  }
  return std::nullopt;
}

}  // namespace

DiffReport triage(const ParsedResponse& parsed, const reason::SaturationResult& base,
                  const std::vector<reason::Rule>& user_rules) {
  DiffReport report;
  report.rejects = parsed.rejects;

  // Violations already present in the base KG do not implicate new triples.
  std::set<std::string> baseline;
  auto base_constraints = reason::Constraints::from_graph(base.graph);
  for (const auto& item : reason::check_consistency(base.graph, base_constraints)) {
    baseline.insert(std::string(reason::to_string(item.kind)) + "|" + item.message);
  }

  for (const Triple& triple : parsed.triples) {
    if (auto violation = domain_range_violation(base.graph, triple)) {
      report.invalid.push_back({triple, *violation});
      continue;
    }
    if (base.graph.contains(triple)) {
      const rdf::Provenance* prov = base.graph.provenance(triple);
      bool inferred = prov != nullptr && prov->extractor == "inferred";
      report.confirmed.push_back(
          {triple, inferred ? "already entailed (inferred)" : "already asserted"});
      continue;
    }
    if (auto conflict = conflict_reason(triple, base, user_rules, baseline)) {
      report.conflicting.push_back({triple, *conflict});
      continue;
    }
    report.fresh.push_back({triple, "new"});
  }
  return report;
}

}  // namespace onco::llm
