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

#include "onco/reason/rule.hpp"

#include <cctype>
#include <set>

#include "onco/error.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::reason {

using rdf::Term;

void validate_rule(const Rule& rule) {
  if (rule.body.empty()) {
    throw StructuralError("rule '" + rule.name + "' has an empty body");
  }
  std::set<std::string> bound;
  for (const auto& pattern : rule.body) {
    for (const PatternTerm* pt : {&pattern.subject, &pattern.predicate, &pattern.object}) {
      if (pt->is_var) bound.insert(pt->name);
    }
  }
  for (const PatternTerm* pt :
       {&rule.head.subject, &rule.head.predicate, &rule.head.object}) {
    if (pt->is_var && bound.count(pt->name) == 0) {
      throw StructuralError("rule '" + rule.name + "' head variable ?" + pt->name +
                            " does not occur in the body");
    }
  }
}

namespace {

class RuleLineParser {
 public:
  RuleLineParser(std::string_view line, std::size_t line_no, const rdf::PrefixMap& prefixes)
      : line_(line), line_no_(line_no), prefixes_(prefixes) {}

  Rule parse() {
    Rule rule;
    rule.name = take_until(':');
    expect(':');
    skip_ws();
    while (true) {
      rule.body.push_back(parse_pattern());
      skip_ws();
      if (try_take(',')) {
        skip_ws();
        continue;
      }
      break;
    }
    expect('=');
    expect('>');
    skip_ws();
    rule.head = parse_pattern();
    skip_ws();
    if (pos_ < line_.size()) fail("trailing content after head pattern");
    validate_rule(rule);
    return rule;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_no_, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool try_take(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string take_until(char stop) {
    std::string out;
    while (pos_ < line_.size() && line_[pos_] != stop) out += line_[pos_++];
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
      out.pop_back();
    }
    return out;
  }

  TriplePattern parse_pattern() {
    expect('(');
    skip_ws();
    PatternTerm s = parse_term();
    skip_ws();
    PatternTerm p = parse_term();
    skip_ws();
    PatternTerm o = parse_term();
    skip_ws();
    expect(')');
    return {std::move(s), std::move(p), std::move(o)};
  }

  PatternTerm parse_term() {
    char c = peek();
    if (c == '?') {
      ++pos_;
      std::string name;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
        name += line_[pos_++];
      }
      if (name.empty()) fail("empty variable name");
      return PatternTerm::var(std::move(name));
    }
    if (c == '<') {
      ++pos_;
      std::string iri;
      while (pos_ < line_.size() && line_[pos_] != '>') iri += line_[pos_++];
      expect('>');
      return PatternTerm::ground(Term::iri(std::move(iri)));
    }
    if (c == '"') {
      ++pos_;
      std::string lex;
      while (pos_ < line_.size() && line_[pos_] != '"') {
        if (line_[pos_] == '\\' && pos_ + 1 < line_.size()) ++pos_;
        lex += line_[pos_++];
      }
      expect('"');
      return PatternTerm::ground(Term::literal(std::move(lex)));
    }
    // Prefixed name; 'a' abbreviates rdf:type.
    std::string token;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
           line_[pos_] != ')' && line_[pos_] != ',') {
      token += line_[pos_++];
    }
    if (token.empty()) fail("expected a term");
    if (token == "a") return PatternTerm::ground(ontology::rdf_type());
    auto colon = token.find(':');
    if (colon == std::string::npos) fail("expected prefixed name, got '" + token + "'");
    std::string prefix = token.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undefined prefix '" + prefix + ":'");
    return PatternTerm::ground(Term::iri(it->second + token.substr(colon + 1)));
  }

  std::string_view line_;
  std::size_t line_no_;
  const rdf::PrefixMap& prefixes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Rule> parse_rules(std::string_view text, const rdf::PrefixMap& prefixes) {
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, end - start);
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t content = line.find_first_not_of(" \t\r");
    if (content != std::string_view::npos) {
      rules.push_back(RuleLineParser(line, line_no, prefixes).parse());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return rules;
}

const std::vector<Rule>& builtin_rules() {
  using ontology::rdf_type;
  using ontology::rdfs_domain;
  using ontology::rdfs_range;
  using ontology::rdfs_subclass_of;
  using ontology::rdfs_subproperty_of;
  static const std::vector<Rule> rules = [] {
    auto v = [](const char* name) { return PatternTerm::var(name); };
    auto g = [](const Term& t) { return PatternTerm::ground(t); };
    std::vector<Rule> out;
    out.push_back({"subclass-transitivity",
                   {{v("c"), g(rdfs_subclass_of()), v("d")},
                    {v("d"), g(rdfs_subclass_of()), v("e")}},
                   {v("c"), g(rdfs_subclass_of()), v("e")}});
    out.push_back({"type-propagation",
                   {{v("x"), g(rdf_type()), v("c")},
                    {v("c"), g(rdfs_subclass_of()), v("d")}},
                   {v("x"), g(rdf_type()), v("d")}});
    out.push_back({"subproperty-transitivity",
                   {{v("p"), g(rdfs_subproperty_of()), v("q")},
                    {v("q"), g(rdfs_subproperty_of()), v("r")}},
                   {v("p"), g(rdfs_subproperty_of()), v("r")}});
    out.push_back({"subproperty-propagation",
                   {{v("x"), v("p"), v("y")},
                    {v("p"), g(rdfs_subproperty_of()), v("q")}},
                   {v("x"), v("q"), v("y")}});
    out.push_back({"domain-typing",
                   {{v("x"), v("p"), v("y")}, {v("p"), g(rdfs_domain()), v("c")}},
                   {v("x"), g(rdf_type()), v("c")}});
    out.push_back({"range-typing",
                   {{v("x"), v("p"), v("y")}, {v("p"), g(rdfs_range()), v("c")}},
                   {v("y"), g(rdf_type()), v("c")}});
    for (const auto& rule : out) validate_rule(rule);
    return out;
  }();
  return rules;
}

}  // namespace onco::reason
