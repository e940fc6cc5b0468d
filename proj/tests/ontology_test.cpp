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

#include "helpers.hpp"
#include "onco/error.hpp"
#include "onco/ontology/axioms.hpp"
#include "onco/ontology/gazetteer.hpp"
#include "onco/ontology/gene.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/rdf/turtle.hpp"

using namespace onco;
using namespace onco::ontology;
using rdf::Term;
using rdf::Triple;

namespace {

GeneRecord tp53_record() {
  GeneRecord rec;
  rec.symbol = "TP53";
  rec.gene_types = {GeneType::kPotsf};
  rec.cross_responsibility = {"BRCA", "OV", "PRAD", "MED"};
  rec.significance = {{"BRCA", SignificanceLevel::kHigh},
                      {"OV", SignificanceLevel::kHigh},
                      {"PRAD", SignificanceLevel::kMedium},
                      {"MED", SignificanceLevel::kLow}};
  rec.evidence = {Evidence::kPubMed, Evidence::kMesh, Evidence::kCancerIndex};
  rec.citations = 8500;
  rec.external_refs = {"http://identifiers.org/ncbigene/7157"};
  return rec;
}

}  // namespace

TEST_CASE("cancer roster has the 33 TCGA codes plus flagged MED") {
  const auto& roster = cancer_roster();
  CHECK(roster.size() == 34);
  std::size_t tcga = 0;
  for (const auto& c : roster) {
    if (c.tcga) ++tcga;
  }
  CHECK(tcga == 33);
  CHECK(is_cancer_code("BRCA"));
  CHECK(is_cancer_code("MED"));
  CHECK_FALSE(is_tcga_code("MED"));
  CHECK_FALSE(is_cancer_code("XXX"));
}

TEST_CASE("POTFS is accepted as an alias of POTSF") {
  CHECK(parse_gene_type("POTFS") == GeneType::kPotsf);
  CHECK(parse_gene_type("POTSF") == GeneType::kPotsf);
  CHECK(std::string(to_token(GeneType::kPotsf)) == "POTSF");
}

TEST_CASE("expand_record matches the hand expansion of TP53") {
  GeneRecord rec = tp53_record();
  auto triples = expand_record(rec);

  // 2 + 6*|codes| + |evidence| + |refs| with 4 codes, 3 sources, 1 ref.
  CHECK(triples.size() == 2 + 6 * 4 + 3 + 1);

  rdf::Graph g;
  for (const auto& t : triples) g.insert(t);
  CHECK(g.contains({ono("TP53"), rdf_type(), vocab::Potsf()}));
  CHECK(g.contains({ono("TP53"), vocab::hasCitations(), Term::integer(8500)}));
  CHECK(g.contains(
      {feature_iri("TP53", "BRCA"), vocab::hasSignificance(), vocab::High()}));
  CHECK(g.contains({feature_iri("TP53", "MED"), vocab::hasSignificance(), vocab::Low()}));
  CHECK(g.contains({feature_iri("TP53", "BRCA"), vocab::forGene(), ono("TP53")}));
  CHECK(g.contains({ono("TP53"), rdfs_see_also(),
                    Term::iri("http://identifiers.org/ncbigene/7157")}));

  // Deterministic: identical records expand to identical triples.
  CHECK(expand_record(tp53_record()) == triples);
}

TEST_CASE("expand_record without responsibilities emits no feature nodes") {
  GeneRecord rec;
  rec.symbol = "FAS";
  rec.gene_types = {GeneType::kPotsf};
  rec.evidence = {Evidence::kPubMed};
  rec.citations = 5;
  auto triples = expand_record(rec);
  CHECK(triples.size() == 3);  // type + citations + evidence
  for (const auto& t : triples) {
    CHECK(t.subject == ono("FAS"));
  }
}

TEST_CASE("record invariants are enforced") {
  GeneRecord rec = tp53_record();
  rec.citations = 0;
  CHECK_FALSE(record_issues(rec).empty());
  CHECK_THROWS_AS(expand_record(rec), StructuralError);

  rec = tp53_record();
  rec.significance["LUAD"] = SignificanceLevel::kHigh;  // not a responsibility
  CHECK_FALSE(record_issues(rec).empty());

  rec = tp53_record();
  rec.cross_responsibility.push_back("NOPE");
  CHECK_FALSE(record_issues(rec).empty());

  CHECK(record_issues(tp53_record()).empty());
}

TEST_CASE("shipped seed loads, validates, and carries the reference facts") {
  SeedReport report;
  rdf::Graph g = load_seed(test::data_dir() / "seed", &report);

  CHECK(report.issues.empty());
  CHECK(report.cancer_instances == 34);
  CHECK(report.tcga_instances == 33);
  CHECK(report.gene_instances == 83);

  CHECK(g.contains({ono("TP53"), vocab::crossResponsibility(), ono("BRCA")}));
  CHECK(g.contains({ono("TP53"), vocab::crossResponsibility(), ono("OV")}));
  CHECK(g.contains({ono("TP53"), vocab::crossResponsibility(), ono("MED")}));
  CHECK(g.contains({ono("TP53"), vocab::crossResponsibility(), ono("PRAD")}));
  CHECK(g.contains({ono("TP53"), rdf_type(), vocab::Potsf()}));
  CHECK(g.contains({ono("FAS"), rdf_type(), vocab::Potsf()}));

  // Significance per pair: HIGH/HIGH/MEDIUM/LOW.
  CHECK(g.contains({feature_iri("TP53", "BRCA"), vocab::hasSignificance(), vocab::High()}));
  CHECK(g.contains({feature_iri("TP53", "OV"), vocab::hasSignificance(), vocab::High()}));
  CHECK(
      g.contains({feature_iri("TP53", "PRAD"), vocab::hasSignificance(), vocab::Medium()}));
  CHECK(g.contains({feature_iri("TP53", "MED"), vocab::hasSignificance(), vocab::Low()}));

  // Re-loading is idempotent on cardinality.
  rdf::Graph again = load_seed(test::data_dir() / "seed");
  CHECK(again.size() == g.size());
}

TEST_CASE("seed validation reports a zero-citation gene with its IRI") {
  test::TempDir dir("seed");
  test::write_file(dir.file("bad.ttl"),
                   "@prefix ono: <http://onconet.example/ono#> .\n"
                   "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
                   "ono:BADGENE a ono:POTSF ;\n"
                   "  ono:hasCitations \"0\"^^xsd:integer ;\n"
                   "  ono:evidenceType ono:PubMed .\n");
  SeedReport report;
  load_seed(dir.file("bad.ttl"), &report);
  REQUIRE_FALSE(report.issues.empty());
  CHECK(report.issues[0].subject == "ono:BADGENE");
  CHECK(report.issues[0].message.find("citations") != std::string::npos);
}

TEST_CASE("committed seed equals regenerated seed") {
  test::TempDir dir("seedgen");
  write_seed(dir.path());
  for (const char* name : {"schema.ttl", "cancers.ttl", "genes.ttl"}) {
    CHECK(read_file(dir.file(name)) == read_file(test::data_dir() / "seed" / name));
  }
}

TEST_CASE("gazetteer covers symbols, codes, labels, and aliases") {
  rdf::Graph g = load_seed(test::data_dir() / "seed");
  Gazetteer gaz = Gazetteer::from_graph(g);

  auto tp53 = gaz.lookup("TP53");
  REQUIRE(tp53.size() == 1);
  CHECK(tp53[0].iri == ono("TP53"));
  CHECK(tp53[0].category == Category::kGene);
  CHECK(tp53[0].prior == doctest::Approx(1.0));

  // Gene symbols are case-sensitive.
  CHECK(gaz.lookup("tp53").empty());

  // Both the code and the common name reach the cancer instance.
  auto brca = gaz.lookup("BRCA");
  REQUIRE(brca.size() == 1);
  CHECK(brca[0].iri == ono("BRCA"));
  auto breast = gaz.lookup("breast cancer");
  REQUIRE(breast.size() == 1);
  CHECK(breast[0].iri == ono("BRCA"));
  CHECK(gaz.lookup("Breast  Cancer").size() == 1);  // whitespace collapses

  // Every biomarker symbol resolves back to its IRI.
  for (const Term& gene : biomarker_instances(g)) {
    auto hits = gaz.lookup(gene.local_name());
    REQUIRE_FALSE(hits.empty());
    CHECK(hits[0].iri == gene);
  }

  gaz.load_aliases(test::data_dir() / "aliases.tsv");
  auto alias = gaz.lookup("Li-Fraumeni syndrome");
  REQUIRE(alias.size() == 1);
  CHECK(alias[0].iri == ono("TP53"));
  CHECK(alias[0].prior == doctest::Approx(0.9));
}

TEST_CASE("gazetteer priors per surface sum to at most one") {
  Gazetteer gaz;
  gaz.add({"p53", ono("TP53"), Category::kGene, 0, true, false});
  gaz.add({"p53", ono("TP63"), Category::kGene, 0, true, false});
  test::TempDir dir("gaz");
  test::write_file(dir.file("a.tsv"),
                   "p53\thttp://onconet.example/ono#TP73\tGene\t0.5\n");
  gaz.load_aliases(dir.file("a.tsv"));
  auto hits = gaz.lookup("p53");
  REQUIRE(hits.size() == 3);
  double sum = 0;
  for (const auto& h : hits) sum += h.prior;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(hits[0].iri == ono("TP73"));  // pinned 0.5 beats shared 0.25
}

TEST_CASE("instance axioms mint fresh association instances") {
  InstanceMinter minter;
  Term akt1 = ono("AKT1");
  Term go_class = Term::iri("http://purl.obolibrary.org/obo/GO_0000060");
  auto [a1, a2] = instance_axioms(akt1, vocab::hasGOAssociation(), go_class, minter);
  CHECK(a1.subject == akt1);
  CHECK(a1.predicate == vocab::hasGOAssociation());
  CHECK(a2.subject == a1.object);
  CHECK(a2.predicate == rdf_type());
  CHECK(a2.object == go_class);

  auto [b1, b2] = instance_axioms(akt1, vocab::hasGOAssociation(), go_class, minter);
  CHECK(a1.object != b1.object);  // fresh minting
  CHECK(rdf::is_valid_iri(b1.object.value()));
  CHECK(b1.object.value().rfind(std::string(ns::kOno), 0) == 0);
}
