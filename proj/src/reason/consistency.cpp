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

#include "onco/reason/consistency.hpp"

#include <set>

#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::reason {

using ontology::rdf_type;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

const char* to_string(InconsistencyKind kind) {
  switch (kind) {
    case InconsistencyKind::kDisjointViolation: return "DisjointViolation";
    case InconsistencyKind::kFunctionalKeyViolation: return "FunctionalKeyViolation";
    case InconsistencyKind::kRangeViolation: return "RangeViolation";
    case InconsistencyKind::kCardinalityViolation: return "CardinalityViolation";
  }
  return "";
}

Constraints Constraints::from_graph(const Graph& graph) {
  namespace v = ontology::vocab;
  Constraints out;
  for (const auto& t :
       graph.match(std::nullopt, ontology::owl_disjoint_with(), std::nullopt)) {
    if (t.object.is_iri()) out.disjoint_classes.emplace_back(t.subject, t.object);
  }
  for (const auto& t :
       graph.match(std::nullopt, rdf_type(), ontology::owl_functional_property())) {
    out.functional_properties.push_back(t.subject);
    // Closed value vocabulary: the range class opted in and enumerates its
    // values as subclasses.
    for (const auto& rt : graph.match(t.subject, ontology::rdfs_range(), std::nullopt)) {
      if (!graph.contains({rt.object, v::closedVocabulary(), Term::boolean(true)})) {
        continue;
      }
      std::vector<Term> allowed;
      for (const auto& st :
           graph.match(std::nullopt, ontology::rdfs_subclass_of(), rt.object)) {
        if (st.subject != rt.object) allowed.push_back(st.subject);
      }
      if (!allowed.empty()) out.value_vocabularies.emplace_back(t.subject, allowed);
    }
  }
  out.biomarker_cardinality =
      graph.contains({v::Biomarker(), rdf_type(), ontology::rdfs_class()});
  return out;
}

std::vector<Inconsistency> check_consistency(const Graph& graph,
                                             const Constraints& constraints) {
  namespace v = ontology::vocab;
  std::vector<Inconsistency> out;

  for (const auto& [left, right] : constraints.disjoint_classes) {
    auto in_left = graph.match(std::nullopt, rdf_type(), left);
    for (const auto& lt : in_left) {
      Triple rt{lt.subject, rdf_type(), right};
      if (graph.contains(rt)) {
        out.push_back({InconsistencyKind::kDisjointViolation,
                       {lt, rt},
                       lt.subject.canonical() + " typed by disjoint classes " +
                           left.canonical() + " and " + right.canonical()});
      }
    }
  }

  for (const auto& prop : constraints.functional_properties) {
    std::map<Term, std::vector<Triple>> by_subject;
    for (const auto& t : graph.match(std::nullopt, prop, std::nullopt)) {
      by_subject[t.subject].push_back(t);
    }
    for (const auto& [subject, triples] : by_subject) {
      if (triples.size() > 1) {
        out.push_back({InconsistencyKind::kFunctionalKeyViolation, triples,
                       subject.canonical() + " has " + std::to_string(triples.size()) +
                           " distinct values for functional property " +
                           prop.canonical()});
      }
    }
  }

  for (const auto& [prop, allowed] : constraints.value_vocabularies) {
    for (const auto& t : graph.match(std::nullopt, prop, std::nullopt)) {
      bool ok = false;
      for (const auto& value : allowed) {
        if (t.object == value) ok = true;
      }
      if (!ok) {
        out.push_back({InconsistencyKind::kRangeViolation,
                       {t},
                       t.object.canonical() + " is not an allowed value of " +
                           prop.canonical()});
      }
    }
  }

  if (constraints.biomarker_cardinality) {
    for (const Term& gene : ontology::biomarker_instances(graph)) {
      auto citations = graph.match(gene, v::hasCitations(), std::nullopt);
      for (const auto& ct : citations) {
        long long n = 0;
        bool numeric = true;
        try {
          n = std::stoll(ct.object.value());
        } catch (...) {
          numeric = false;
        }
        if (!numeric || n < 1) {
          out.push_back({InconsistencyKind::kCardinalityViolation,
                         {ct},
                         gene.canonical() + " must cite at least 1 article"});
        }
      }
      if (graph.match(gene, v::evidenceType(), std::nullopt).empty()) {
        auto types = graph.match(gene, rdf_type(), std::nullopt);
        std::vector<Triple> offending;
        if (!types.empty()) offending.push_back(types.front());
        if (!offending.empty()) {
          out.push_back({InconsistencyKind::kCardinalityViolation, offending,
                         gene.canonical() + " has no evidence source"});
        }
      }
    }
  }

  return out;
}

std::string render(const Inconsistency& item, const Graph& graph) {
  std::string out = std::string(to_string(item.kind)) + ": " + item.message;
  for (const auto& t : item.offending) {
    out += "\n  " + graph.compact(t.subject) + " " + graph.compact(t.predicate) + " " +
           (t.object.is_literal() ? t.object.canonical() : graph.compact(t.object));
  }
  return out;
}

}  // namespace onco::reason
