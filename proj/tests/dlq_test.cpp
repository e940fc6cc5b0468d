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

#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "onco/dlq/eval.hpp"
#include "onco/dlq/parse.hpp"
#include "onco/dlq/repl.hpp"
#include "onco/error.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/rdf/turtle.hpp"
#include "onco/reason/saturate.hpp"
#include "oracles.hpp"

using namespace onco;
using namespace onco::ontology;
using dlq::ClassExpression;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

// The documented restriction fixture: TP53 is the only POTSF-typed gene
// that causes BRCA; MYC causes BRCA but is typed Oncogene.
Graph restriction_fixture() {
  Graph g = rdf::parse_turtle_subset(
      "@prefix ono: <http://onconet.example/ono#> .\n"
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      "ono:POTSF rdfs:subClassOf ono:BiomarkerType .\n"
      "ono:POTSF rdfs:subClassOf ono:Biomarker .\n"
      "ono:Oncogene rdfs:subClassOf ono:BiomarkerType .\n"
      "ono:Oncogene rdfs:subClassOf ono:Biomarker .\n"
      "ono:BRCA a ono:Cancer .\n"
      "ono:TP53 a ono:POTSF .\n"
      "ono:TP53 ono:causes ono:BRCA .\n"
      "ono:MYC a ono:Oncogene .\n"
      "ono:MYC ono:causes ono:BRCA .\n");
  g.register_prefixes(default_prefixes());
  return g;
}

}  // namespace

TEST_CASE("parser builds the flagship conjunction") {
  auto expr = dlq::parse("Biomarker and causes some BRCA and isA only POTSF",
                         default_prefixes());
  REQUIRE(expr.kind == ClassExpression::Kind::kAnd);
  REQUIRE(expr.children.size() == 3);
  CHECK(expr.children[0].kind == ClassExpression::Kind::kAtom);
  CHECK(expr.children[0].name == vocab::Biomarker());
  CHECK(expr.children[1].kind == ClassExpression::Kind::kSome);
  CHECK(expr.children[1].name == vocab::causes());
  CHECK(expr.children[1].filler == ono("BRCA"));
  CHECK(expr.children[2].kind == ClassExpression::Kind::kOnly);
  CHECK(expr.children[2].name == rdf_type());  // isA aliases rdf:type
  CHECK(expr.children[2].filler == vocab::Potsf());
}

TEST_CASE("parser accepts bare atoms, keywords in any case, and errors with position") {
  auto atom = dlq::parse("Biomarker", default_prefixes());
  CHECK(atom.kind == ClassExpression::Kind::kAtom);

  auto mixed = dlq::parse("Biomarker AND causes SOME BRCA", default_prefixes());
  CHECK(mixed.kind == ClassExpression::Kind::kAnd);

  CHECK_THROWS_AS(dlq::parse("", default_prefixes()), ParseError);
  CHECK_THROWS_AS(dlq::parse("causes some", default_prefixes()), ParseError);
  CHECK_THROWS_AS(dlq::parse("nope:X", default_prefixes()), ParseError);
  try {
    dlq::parse("causes some", default_prefixes());
  } catch (const ParseError& e) {
    CHECK(e.column() >= 11);  // points at the missing filler
  }
}

TEST_CASE("atoms and existential restrictions on a toy graph") {
  Graph g;
  g.register_prefixes(default_prefixes());
  g.insert({ono("g1"), vocab::causes(), ono("BRCA")});
  g.insert({ono("g2"), vocab::causes(), ono("BRCA")});
  g.insert({ono("g3"), vocab::causes(), ono("OV")});

  auto some = dlq::evaluate(dlq::parse("causes some BRCA", default_prefixes()), g);
  REQUIRE(some.individuals.size() == 2);
  CHECK(some.individuals[0] == ono("g1"));
  CHECK(some.individuals[1] == ono("g2"));

  // Exhaustive-scan oracle agrees.
  test::DlqOracle oracle(g);
  auto expected = oracle.evaluate(dlq::parse("causes some BRCA", default_prefixes()));
  CHECK(std::set<Term>(some.individuals.begin(), some.individuals.end()) == expected);

  auto value = dlq::evaluate(dlq::parse("causes value OV", default_prefixes()), g);
  REQUIRE(value.individuals.size() == 1);
  CHECK(value.individuals[0] == ono("g3"));
}

TEST_CASE("the flagship query returns exactly TP53 on the documented fixture") {
  auto saturated = reason::saturate(restriction_fixture());
  auto result = dlq::evaluate(
      dlq::parse("Biomarker and causes some BRCA and isA only POTSF", default_prefixes()),
      saturated.graph);
  REQUIRE(result.individuals.size() == 1);
  CHECK(result.individuals[0] == ono("TP53"));
  CHECK(result.vacuous_only == 0);
}

TEST_CASE("conjunction is commutative and idempotent") {
  auto saturated = reason::saturate(restriction_fixture());
  auto a = dlq::evaluate(
      dlq::parse("Biomarker and causes some BRCA", default_prefixes()), saturated.graph);
  auto b = dlq::evaluate(
      dlq::parse("causes some BRCA and Biomarker", default_prefixes()), saturated.graph);
  CHECK(a.individuals == b.individuals);
  auto c = dlq::evaluate(dlq::parse("Biomarker and Biomarker", default_prefixes()),
                         saturated.graph);
  auto d = dlq::evaluate(dlq::parse("Biomarker", default_prefixes()), saturated.graph);
  CHECK(c.individuals == d.individuals);
}

TEST_CASE("vacuous only admits successor-free individuals and is counted") {
  Graph g;
  g.register_prefixes(default_prefixes());
  g.insert({ono("g1"), vocab::causes(), ono("BRCA")});
  g.insert({ono("lonely"), rdf_type(), vocab::Biomarker()});

  auto result = dlq::evaluate(dlq::parse("causes only BRCA", default_prefixes()), g);
  // Every individual without causes-successors is admitted vacuously:
  // lonely, BRCA itself, and Biomarker (punned); g1 non-vacuously.
  std::set<Term> members(result.individuals.begin(), result.individuals.end());
  CHECK(members.count(ono("g1")) == 1);
  CHECK(members.count(ono("lonely")) == 1);
  CHECK(result.vacuous_only == result.individuals.size() - 1);

  test::DlqOracle oracle(g);
  CHECK(members == oracle.evaluate(dlq::parse("causes only BRCA", default_prefixes())));
}

TEST_CASE("unknown IRIs warn and evaluate to the empty set") {
  Graph g;
  g.register_prefixes(default_prefixes());
  g.insert({ono("g1"), vocab::causes(), ono("BRCA")});
  auto result = dlq::evaluate(dlq::parse("NoSuchClass", default_prefixes()), g);
  CHECK(result.individuals.empty());
  REQUIRE_FALSE(result.warnings.empty());
  CHECK(result.warnings[0].find("NoSuchClass") != std::string::npos);
}

TEST_CASE("random expressions agree with the individual-by-individual oracle") {
  std::mt19937 rng(37);
  static const char* kClasses[] = {"Biomarker", "POTSF", "Oncogene", "Cancer", "C9"};
  static const char* kRoles[] = {"causes", "hasType", "crossResponsibility"};
  static const char* kNames[] = {"TP53", "FAS", "MYC", "BRCA", "OV", "POTSF"};
  std::uniform_int_distribution<int> cls(0, 4), role(0, 2), name(0, 5), kind(0, 4);

  for (int round = 0; round < 50; ++round) {
    Graph g = test::random_graph(rng, 50);
    for (int i = 0; i < 4; ++i) {
      g.insert({ono(kClasses[cls(rng)]), rdfs_subclass_of(), ono(kClasses[cls(rng)])});
      g.insert({ono(kNames[name(rng)]), rdf_type(), ono(kClasses[cls(rng)])});
    }
    auto saturated = reason::saturate(g);

    auto random_term = [&]() -> ClassExpression {
      switch (kind(rng)) {
        case 0: return ClassExpression::atom(ono(kClasses[cls(rng)]));
        case 1:
          return ClassExpression::restriction(ClassExpression::Kind::kSome,
                                              ono(kRoles[role(rng)]),
                                              ono(kNames[name(rng)]));
        case 2:
          return ClassExpression::restriction(ClassExpression::Kind::kOnly,
                                              ono(kRoles[role(rng)]),
                                              ono(kClasses[cls(rng)]));
        case 3:
          return ClassExpression::restriction(ClassExpression::Kind::kValue,
                                              ono(kRoles[role(rng)]),
                                              ono(kNames[name(rng)]));
        default:
          return ClassExpression::restriction(ClassExpression::Kind::kOnly,
                                              ono("isAlias"), ono(kNames[name(rng)]));
      }
    };
    ClassExpression expr = random_term();
    if (kind(rng) > 1) {
      std::vector<ClassExpression> children{expr, random_term()};
      expr = ClassExpression::conjunction(std::move(children));
    }

    auto result = dlq::evaluate(expr, saturated.graph);
    test::DlqOracle oracle(saturated.graph);
    auto expected = oracle.evaluate(expr);
    CHECK(std::set<Term>(result.individuals.begin(), result.individuals.end()) ==
          expected);
  }
}

TEST_CASE("results are canonically ordered and repeatable") {
  auto saturated = reason::saturate(restriction_fixture());
  auto expr = dlq::parse("Biomarker", default_prefixes());
  auto first = dlq::evaluate(expr, saturated.graph);
  auto second = dlq::evaluate(expr, saturated.graph);
  CHECK(first.individuals == second.individuals);
  for (std::size_t i = 1; i < first.individuals.size(); ++i) {
    CHECK(first.individuals[i - 1] < first.individuals[i]);
  }
}

TEST_CASE("repl answers, survives bad input, explains, and quits") {
  auto saturated = reason::saturate(restriction_fixture());
  std::istringstream in(
      "not a ! query ???\n"
      "Biomarker and causes some BRCA and isA only POTSF\n"
      ":explain TP53\n"
      ":quit\n");
  std::ostringstream out, err;
  int code = dlq::repl(saturated, in, out, err);
  CHECK(code == 0);
  CHECK(err.str().find("error:") != std::string::npos);
  CHECK(out.str().find("ono:TP53") != std::string::npos);
  CHECK(out.str().find("count=1") != std::string::npos);
  CHECK(out.str().find("vacuous_only=0") != std::string::npos);
  CHECK(out.str().find("[asserted") != std::string::npos);  // :explain output
}

TEST_CASE("the value form answers evidence queries") {
  Graph g = load_seed(test::data_dir() / "seed");
  auto saturated = reason::saturate(g);
  auto result = dlq::evaluate(
      dlq::parse("POTSF and evidenceType value PubMed", default_prefixes()),
      saturated.graph);
  CHECK(result.individuals.size() > 50);  // every seed gene carries PubMed
}
