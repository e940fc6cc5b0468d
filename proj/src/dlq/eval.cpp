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

#include "onco/dlq/eval.hpp"

#include <algorithm>
#include <set>

#include "onco/ontology/vocab.hpp"

namespace onco::dlq {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

using TermSet = std::set<Term>;

struct EvalContext {
  const Graph& graph;
  TermSet individuals;
  std::vector<std::string> warnings;

  bool known(const Term& t) {
    if (graph.mentions(t)) return true;
    warnings.push_back("unknown IRI " + t.canonical() + "; empty interpretation");
    return false;
  }

  // F itself plus everything typed F.
  bool member(const Term& y, const Term& filler) const {
    if (y == filler) return true;
    return graph.contains({y, ontology::rdf_type(), filler});
  }

  // For `only`: a successor that is a (transitive) superclass of the filler
  // also qualifies.
  bool member_only(const Term& y, const Term& filler) const {
    if (member(y, filler)) return true;
    return subclass_path(filler, y);
  }

  // True when from ⊑+ to (BFS over subClassOf edges; works on saturated and
  // raw graphs alike).
  bool subclass_path(const Term& from, const Term& to) const {
    std::set<Term> visited;
    std::vector<Term> frontier{from};
    while (!frontier.empty()) {
      Term current = frontier.back();
      frontier.pop_back();
      for (const auto& t :
           graph.match(current, ontology::rdfs_subclass_of(), std::nullopt)) {
        if (t.object == to) return true;
        if (visited.insert(t.object).second) frontier.push_back(t.object);
      }
    }
    return false;
  }
};

struct EvalOutput {
  TermSet members;
  TermSet vacuous;  // admitted by an `only` with zero successors
};

EvalOutput eval_node(const ClassExpression& expr, EvalContext& ctx) {
  using Kind = ClassExpression::Kind;
  EvalOutput out;
  switch (expr.kind) {
    case Kind::kAtom: {
      if (!ctx.known(expr.name)) return out;
      for (const auto& t :
           ctx.graph.match(std::nullopt, ontology::rdf_type(), expr.name)) {
        out.members.insert(t.subject);
      }
      return out;
    }
    case Kind::kValue: {
      if (!ctx.known(expr.name) || !ctx.known(expr.filler)) return out;
      for (const auto& t : ctx.graph.match(std::nullopt, expr.name, expr.filler)) {
        out.members.insert(t.subject);
      }
      return out;
    }
    case Kind::kSome: {
      if (!ctx.known(expr.name)) return out;
      ctx.known(expr.filler);  // warn only
      for (const auto& t : ctx.graph.match(std::nullopt, expr.name, std::nullopt)) {
        if (ctx.member(t.object, expr.filler)) out.members.insert(t.subject);
      }
      return out;
    }
    case Kind::kOnly: {
      if (!ctx.known(expr.name)) return out;
      ctx.known(expr.filler);  // warn only
      for (const Term& x : ctx.individuals) {
        auto successors = ctx.graph.match(x, expr.name, std::nullopt);
        if (successors.empty()) {
          out.members.insert(x);
          out.vacuous.insert(x);
          continue;
        }
        bool all = true;
        for (const auto& t : successors) {
          if (!ctx.member_only(t.object, expr.filler)) {
            all = false;
            break;
          }
        }
        if (all) out.members.insert(x);
      }
      return out;
    }
    case Kind::kAnd: {
      bool first = true;
      for (const auto& child : expr.children) {
        EvalOutput part = eval_node(child, ctx);
        if (first) {
          out = std::move(part);
          first = false;
          continue;
        }
        TermSet merged;
        std::set_intersection(out.members.begin(), out.members.end(),
                              part.members.begin(), part.members.end(),
                              std::inserter(merged, merged.begin()));
        out.members = std::move(merged);
        out.vacuous.insert(part.vacuous.begin(), part.vacuous.end());
      }
      return out;
    }
  }
  return out;
}

}  // namespace

QueryResult evaluate(const ClassExpression& expr, const Graph& graph) {
  auto started = std::chrono::steady_clock::now();
  EvalContext ctx{graph, {}, {}};
  for (const auto& [triple, prov] : graph.entries()) {
    ctx.individuals.insert(triple.subject);
    if (!triple.object.is_literal()) ctx.individuals.insert(triple.object);
  }
  EvalOutput out = eval_node(expr, ctx);

  QueryResult result;
  result.bindings_count = ctx.individuals.size();
  result.individuals.assign(out.members.begin(), out.members.end());
  for (const Term& t : result.individuals) {
    if (out.vacuous.count(t) > 0) ++result.vacuous_only;
  }
  result.warnings = std::move(ctx.warnings);
  result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - started);
  return result;
}

}  // namespace onco::dlq
