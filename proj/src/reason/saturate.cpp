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

#include "onco/reason/saturate.hpp"

#include <unordered_map>

namespace onco::reason {

using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

using Binding = std::unordered_map<std::string, Term>;

// Unifies one pattern slot against a term, extending the binding.
bool unify(const PatternTerm& slot, const Term& term, Binding& binding) {
  if (!slot.is_var) return slot.term == term;
  auto it = binding.find(slot.name);
  if (it == binding.end()) {
    binding.emplace(slot.name, term);
    return true;
  }
  return it->second == term;
}

bool unify_triple(const TriplePattern& pattern, const Triple& triple, Binding& binding) {
  Binding scratch = binding;
  if (unify(pattern.subject, triple.subject, scratch) &&
      unify(pattern.predicate, triple.predicate, scratch) &&
      unify(pattern.object, triple.object, scratch)) {
    binding = std::move(scratch);
    return true;
  }
  return false;
}

std::optional<Term> bound_term(const PatternTerm& slot, const Binding& binding) {
  if (!slot.is_var) return slot.term;
  auto it = binding.find(slot.name);
  if (it == binding.end()) return std::nullopt;
  return it->second;
}

Term instantiate(const PatternTerm& slot, const Binding& binding) {
  if (!slot.is_var) return slot.term;
  return binding.at(slot.name);
}

class Engine {
 public:
  Engine(SaturationResult& result, const std::vector<Rule>& rules, const Clock& clock)
      : result_(result), rules_(rules), clock_(clock) {}

  void run() {
    // Round zero treats every asserted triple as delta.
    std::vector<Triple> delta;
    for (const auto& [triple, prov] : result_.graph.entries()) delta.push_back(triple);
    while (!delta.empty()) {
      ++result_.rounds;
      next_delta_.clear();
      for (const Rule& rule : rules_) {
        apply_rule(rule, delta);
      }
      delta = next_delta_;
    }
  }

 private:
  void apply_rule(const Rule& rule, const std::vector<Triple>& delta) {
    // Seed each join from a delta triple at body position j; remaining
    // atoms match against the full (growing) graph.
    for (std::size_t j = 0; j < rule.body.size(); ++j) {
      for (const Triple& seed : delta) {
        Binding binding;
        if (!unify_triple(rule.body[j], seed, binding)) continue;
        std::vector<Triple> body_instance(rule.body.size());
        body_instance[j] = seed;
        solve(rule, j, 0, binding, body_instance);
      }
    }
  }

  void solve(const Rule& rule, std::size_t skip, std::size_t position, Binding& binding,
             std::vector<Triple>& body_instance) {
    if (position == rule.body.size()) {
      derive(rule, binding, body_instance);
      return;
    }
    if (position == skip) {
      solve(rule, skip, position + 1, binding, body_instance);
      return;
    }
    const TriplePattern& pattern = rule.body[position];
    auto candidates = result_.graph.match(bound_term(pattern.subject, binding),
                                          bound_term(pattern.predicate, binding),
                                          bound_term(pattern.object, binding));
    for (const Triple& candidate : candidates) {
      Binding extended = binding;
      if (!unify_triple(pattern, candidate, extended)) continue;
      body_instance[position] = candidate;
      solve(rule, skip, position + 1, extended, body_instance);
    }
  }

  void derive(const Rule& rule, const Binding& binding,
              const std::vector<Triple>& body_instance) {
    Triple head{instantiate(rule.head.subject, binding),
                instantiate(rule.head.predicate, binding),
                instantiate(rule.head.object, binding)};
    // RDF cannot state facts about literals in subject position.
    if (head.subject.is_literal() || !head.predicate.is_iri()) return;
    if (result_.graph.contains(head)) return;
    rdf::Provenance prov{"inference", "inferred", 1.0, clock_()};
    result_.graph.insert(head, prov);
    result_.inferred.push_back(head);
    result_.derivations.emplace(head, Derivation{rule.name, body_instance});
    next_delta_.push_back(head);
  }

  SaturationResult& result_;
  const std::vector<Rule>& rules_;
  const Clock& clock_;
  std::vector<Triple> next_delta_;
};

}  // namespace

SaturationResult saturate(const Graph& graph, const std::vector<Rule>& user_rules,
                          const Clock& clock) {
  std::vector<Rule> rules = builtin_rules();
  for (const Rule& rule : user_rules) {
    validate_rule(rule);
    rules.push_back(rule);
  }
  SaturationResult result;
  result.graph = graph;
  Engine(result, rules, clock).run();
  return result;
}

}  // namespace onco::reason
