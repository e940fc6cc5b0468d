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

#ifndef ONCOKG_REASON_RULE_H_
#define ONCOKG_REASON_RULE_H_

#include <string>
#include <string_view>
#include <vector>

#include "onco/rdf/graph.hpp"

namespace onco::reason {

// One slot of a triple pattern: either a variable or a ground term.
struct PatternTerm {
  static PatternTerm var(std::string name) { return {true, std::move(name), {}}; }
  static PatternTerm ground(rdf::Term term) { return {false, {}, std::move(term)}; }

  bool is_var = false;
  std::string name;  // without the '?'
  rdf::Term term;
};

struct TriplePattern {
  PatternTerm subject, predicate, object;
};

// IF body THEN head. Every head variable must occur in the body (no value
// invention), which keeps saturation finite.
struct Rule {
  std::string name;
  std::vector<TriplePattern> body;
  TriplePattern head;
};

// Throws StructuralError for an unbound head variable or empty body.
void validate_rule(const Rule& rule);

// Rule file: one rule per line,
//   name: (?x ono:p ?y), (?y ono:q ?z) => (?x ono:r ?z)
// Terms are variables, prefixed names, <iri>s, or "literal"s; '#' starts a
// comment. Prefixed names resolve against the given prefix map.
std::vector<Rule> parse_rules(std::string_view text, const rdf::PrefixMap& prefixes);

// RDFS-style built-ins: subclass transitivity, type propagation,
// subproperty transitivity and propagation, domain and range typing.
const std::vector<Rule>& builtin_rules();

}  // namespace onco::reason

#endif  // ONCOKG_REASON_RULE_H_
