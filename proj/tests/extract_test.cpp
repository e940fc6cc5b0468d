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

#include <algorithm>

#include "helpers.hpp"
#include "onco/error.hpp"
#include "onco/extract/emit.hpp"
#include "onco/extract/external.hpp"
#include "onco/extract/link.hpp"
#include "onco/extract/pipeline.hpp"
#include "onco/extract/recognize.hpp"
#include "onco/extract/relations.hpp"
#include "onco/extract/score.hpp"
#include "onco/extract/segment.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"

using namespace onco;
using namespace onco::extract;
using namespace onco::ontology;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

const char* kWorked =
    "TP53 is responsible for a disease called Breast Cancer. TP53 has POTSF "
    "functionality, which is mentioned in numerous PubMed articles.";

Graph seed_graph() { return load_seed(test::data_dir() / "seed"); }

std::vector<LinkedEntity> link_all(const std::string& doc_id, const Graph& kg,
                                   const Gazetteer& gaz,
                                   const std::vector<Sentence>& sentences) {
  auto mentions = recognize(doc_id, sentences, gaz);
  for (auto& m : mentions) m = resolve_types(std::move(m));
  auto entities = link(mentions, sentences, kg, 0.5);
  normalize(entities, kg);
  return entities;
}

}  // namespace

TEST_CASE("segmentation splits on terminators followed by uppercase") {
  auto sentences = segment(std::string_view("TP53 is a POTSF. It causes cancer."));
  REQUIRE(sentences.size() == 2);
  CHECK(sentences[0].text == "TP53 is a POTSF.");
  CHECK(sentences[1].text == "It causes cancer.");

  CHECK(segment(std::string_view("e.g., TP53 acts.")).size() == 1);
  CHECK(segment(std::string_view("See e.g. TP53 for details.")).size() == 1);
  CHECK(segment(std::string_view("Is it TP53? Yes! It is.")).size() == 3);
  CHECK(segment(std::string_view("")).empty());
}

TEST_CASE("tokenizer keeps hyphenated compounds and digit symbols whole") {
  std::string text = "The proteins regulating cell-cycle are BAD and BRCA1.";
  auto tokens = tokenize(text);
  std::vector<std::string> words;
  for (const auto& t : tokens) words.push_back(text.substr(t.begin, t.end - t.begin));
  CHECK(std::count(words.begin(), words.end(), "cell-cycle") == 1);
  CHECK(std::count(words.begin(), words.end(), "BRCA1") == 1);
  CHECK(std::count(words.begin(), words.end(), "cell") == 0);
}

TEST_CASE("recognizer finds the named entities of the reference sentence") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  auto sentences = segment(std::string_view("TP53 and FAS are the top two POTSF genes"));
  auto mentions = recognize("d", sentences, gaz);
  std::vector<std::string> surfaces;
  for (const auto& m : mentions) surfaces.push_back(m.surface);
  CHECK(surfaces == std::vector<std::string>{"TP53", "FAS", "POTSF"});

  // B/I tags cover the mention tokens.
  for (const auto& m : mentions) {
    REQUIRE_FALSE(m.tags.empty());
    CHECK(m.tags[0] == "B");
  }
}

TEST_CASE("recognizer prefers the longest match") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  auto sentences = segment(std::string_view("Mutations drive breast cancer progression."));
  auto mentions = recognize("d", sentences, gaz);
  REQUIRE(mentions.size() == 1);
  CHECK(mentions[0].surface == "breast cancer");
  CHECK(mentions[0].candidates[0].iri == ono("BRCA"));

  // No gazetteer hits -> no mentions.
  CHECK(recognize("d", segment(std::string_view("Nothing to see here.")), gaz).empty());
}

TEST_CASE("resolve_types picks argmax with the declared tie-break, order-independent") {
  Mention mention;
  mention.surface = "x";
  mention.candidates = {{ono("a"), Category::kDisease, 0.2, false},
                        {ono("b"), Category::kGene, 0.8, false}};
  CHECK(resolve_types(mention).resolved == Category::kGene);

  // Tie: Gene beats Disease by category priority.
  mention.candidates = {{ono("a"), Category::kDisease, 0.5, false},
                        {ono("b"), Category::kGene, 0.5, false}};
  CHECK(resolve_types(mention).resolved == Category::kGene);

  // Uniform scores over three categories: priority decides, for every
  // permutation of the input order.
  std::vector<MentionCandidate> candidates = {
      {ono("a"), Category::kEvidenceSource, 0.3, false},
      {ono("b"), Category::kBiomarkerType, 0.3, false},
      {ono("c"), Category::kDisease, 0.3, false}};
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.iri < b.iri; });
  do {
    Mention m;
    m.surface = "x";
    m.candidates = candidates;
    CHECK(resolve_types(m).resolved == Category::kDisease);
  } while (std::next_permutation(
      candidates.begin(), candidates.end(),
      [](const auto& a, const auto& b) { return a.iri < b.iri; }));

  Mention empty;
  CHECK_THROWS_AS(resolve_types(empty), StructuralError);
}

TEST_CASE("linking: unique candidates link directly, aliases resolve") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  gaz.load_aliases(test::data_dir() / "aliases.tsv");

  auto sentences = segment(std::string_view("Li-Fraumeni syndrome mutations affect BRCA."));
  auto entities = link_all("d", kg, gaz, sentences);
  REQUIRE(entities.size() >= 2);
  const LinkedEntity* alias_hit = nullptr;
  for (const auto& e : entities) {
    if (e.mention.surface == "Li-Fraumeni syndrome") alias_hit = &e;
  }
  REQUIRE(alias_hit != nullptr);
  REQUIRE(alias_hit->iri.has_value());
  CHECK(*alias_hit->iri == ono("TP53"));
  CHECK(alias_hit->link_score == doctest::Approx(0.9));
  CHECK(alias_hit->normalized_id == std::string("ncbigene:7157"));
}

TEST_CASE("ambiguous mention scores prior * context overlap; hand-computed") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  // Ambiguous surface with two gene candidates: TP53 pinned 0.8, TP63 0.2.
  test::TempDir dir("alias");
  test::write_file(dir.file("a.tsv"),
                   "px\thttp://onconet.example/ono#TP53\tGene\t0.8\n"
                   "px\thttp://onconet.example/ono#TP63\tGene\t0.2\n");
  gaz.load_aliases(dir.file("a.tsv"));

  // Context "breast" overlaps TP53's KG neighborhood (label of BRCA).
  auto sentences = segment(std::string_view("px in breast tissue"));
  auto mentions = recognize("d", sentences, gaz);
  REQUIRE(mentions.size() == 1);
  for (auto& m : mentions) m = resolve_types(std::move(m));

  // Hand computation: context = {in, breast, tissue}, |ctx| = 3.
  //   TP53: overlap {breast} -> (1+1)/(1+3) = 0.5, score 0.8*0.5 = 0.4
  //   TP63: overlap {}       -> (1+0)/(1+3) = 0.25, score 0.2*0.25 = 0.05
  auto entities = link(mentions, sentences, kg, 0.3);
  REQUIRE(entities.size() == 1);
  REQUIRE(entities[0].iri.has_value());
  CHECK(*entities[0].iri == ono("TP53"));
  CHECK(entities[0].link_score == doctest::Approx(0.4));

  // Above-threshold theta leaves the mention unlinked and queued.
  LinkReport report;
  auto unlinked = link(mentions, sentences, kg, 0.5, &report);
  CHECK_FALSE(unlinked[0].iri.has_value());
  CHECK(report.unlinked.size() == 1);
}

TEST_CASE("normalization maps genes to Entrez ids and reports gaps") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  auto sentences = segment(std::string_view("TP53 and CAMTA1 and breast cancer."));
  auto mentions = recognize("d", sentences, gaz);
  for (auto& m : mentions) m = resolve_types(std::move(m));
  auto entities = link(mentions, sentences, kg, 0.5);
  LinkReport report;
  normalize(entities, kg, &report);

  REQUIRE(entities.size() == 3);
  CHECK(entities[0].normalized_id == std::string("ncbigene:7157"));
  CHECK_FALSE(entities[1].normalized_id.has_value());  // CAMTA1 has no ref
  CHECK(entities[2].normalized_id == std::string("DOID:1612"));
  REQUIRE(report.missing_mappings.size() == 1);
  CHECK(report.missing_mappings[0] == "ono:CAMTA1");

  // All seed genes with refs normalize to distinct ids.
  std::set<std::string> ids;
  std::size_t with_refs = 0;
  for (const Term& gene : biomarker_instances(kg)) {
    for (const auto& t : kg.match(gene, rdfs_see_also(), std::nullopt)) {
      if (t.object.value().rfind(std::string(ns::kNcbiGene), 0) == 0) {
        ++with_refs;
        ids.insert(t.object.value());
      }
    }
  }
  CHECK(with_refs > 5);
  CHECK(ids.size() == with_refs);
}

TEST_CASE("anonymize replaces exact spans and preserves everything else") {
  std::string sentence = "TP53 is responsible for a disease called Breast Cancer.";
  Mention gene;
  gene.begin = 0;
  gene.end = 4;
  Mention disease;
  disease.begin = 41;
  disease.end = 54;
  std::string anonymized = anonymize(sentence, gene, disease);
  CHECK(anonymized == "@GENE$ is responsible for a disease called @DISEASE$.");

  // Length arithmetic: output = input - spans + placeholders.
  CHECK(anonymized.size() == sentence.size() - 4 - 13 + 6 + 9);

  // Placeholder at position zero.
  CHECK(anonymize("TP53 causes X", {{0, 4, "@GENE$"}}) == "@GENE$ causes X");

  CHECK_THROWS_AS(anonymize(sentence, {{0, 10, "@A$"}, {5, 12, "@B$"}}), StructuralError);
}

TEST_CASE("pattern classifier extracts the worked paragraph's four relations") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  auto sentences = segment(std::string_view(kWorked));
  REQUIRE(sentences.size() == 2);

  auto entities = link_all("doc", kg, gaz, sentences);
  std::vector<RelationCandidate> all;
  for (const auto& sentence : sentences) {
    std::vector<LinkedEntity> in_sentence;
    for (const auto& e : entities) {
      if (e.mention.sentence_index == sentence.index) in_sentence.push_back(e);
    }
    auto found = extract_relations("doc", sentence, in_sentence);
    all.insert(all.end(), found.begin(), found.end());
  }

  REQUIRE(all.size() == 4);
  auto has = [&](const Term& s, const Term& p, const Term& o) {
    for (const auto& c : all) {
      if (*c.subject.iri == s && c.relation == p && *c.object.iri == o) return true;
    }
    return false;
  };
  CHECK(has(ono("TP53"), vocab::causes(), ono("BRCA")));
  CHECK(has(ono("TP53"), vocab::hasType(), vocab::Potsf()));
  CHECK(has(ono("BRCA"), rdf_type(), vocab::Disease()));
  CHECK(has(ono("POTSF"), vocab::hasEvidence(), vocab::PubMed()));

  // The causes pairing carries the pre-defined placeholders.
  for (const auto& c : all) {
    if (c.relation == vocab::causes()) {
      CHECK(c.anonymized_sentence ==
            "@GENE$ is responsible for a disease called @DISEASE$.");
    }
  }

  // No pattern, no candidate.
  auto quiet = segment(std::string_view("TP53 binds DNA."));
  auto quiet_entities = link_all("doc", kg, gaz, quiet);
  CHECK(extract_relations("doc", quiet[0], quiet_entities).empty());
}

TEST_CASE("emit inserts with provenance and is idempotent per document") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  auto clock = fixed_clock_epoch_seconds(1700000000);
  std::vector<Document> corpus{{"pubmed_demo1.txt", kWorked}};

  PipelineOptions options;
  auto first = run_extraction(kg, corpus, gaz, options, clock);
  CHECK(first.inserted_total == 4);
  CHECK(first.duplicate_total == 0);

  Triple causes{ono("TP53"), vocab::causes(), ono("BRCA")};
  REQUIRE(kg.contains(causes));
  const rdf::Provenance* prov = kg.provenance(causes);
  REQUIRE(prov != nullptr);
  CHECK(prov->source == "pubmed_demo1.txt");
  CHECK(prov->extractor == "lexicon");

  auto second = run_extraction(kg, corpus, gaz, options, clock);
  CHECK(second.inserted_total == 0);
  CHECK(second.duplicate_total == 4);
}

TEST_CASE("pipeline yields the same triples regardless of document order and jobs") {
  std::vector<Document> corpus{
      {"b.txt", "FAS is responsible for a disease called Skin Cutaneous Melanoma."},
      {"a.txt", kWorked},
      {"c.txt", "CHEK2 has POTSF functionality."}};
  Gazetteer gaz = Gazetteer::from_graph(seed_graph());
  auto clock = fixed_clock_epoch_seconds(1);

  Graph kg1 = seed_graph();
  PipelineOptions sequential;
  run_extraction(kg1, corpus, gaz, sequential, clock);

  std::reverse(corpus.begin(), corpus.end());
  Graph kg2 = seed_graph();
  PipelineOptions parallel;
  parallel.jobs = 3;
  run_extraction(kg2, corpus, gaz, parallel, clock);

  CHECK(test::triple_set(kg1) == test::triple_set(kg2));
}

TEST_CASE("exact-match scoring from a counted fixture") {
  std::vector<EntitySpan> gold = {{"d1", 0, 4, Category::kGene},
                                  {"d1", 10, 15, Category::kDisease},
                                  {"d1", 20, 25, Category::kGene},
                                  {"d2", 0, 5, Category::kBiomarkerType}};
  SUBCASE("predicted equals gold") {
    auto scores = evaluate_exact_match(gold, gold);
    CHECK(scores.overall.precision == doctest::Approx(1.0));
    CHECK(scores.overall.recall == doctest::Approx(1.0));
    CHECK(scores.overall.f1 == doctest::Approx(1.0));
    CHECK_FALSE(scores.overall.zero_division);
  }
  SUBCASE("three of four plus one spurious: P = R = 0.75") {
    std::vector<EntitySpan> predicted = {{"d1", 0, 4, Category::kGene},
                                         {"d1", 10, 15, Category::kDisease},
                                         {"d2", 0, 5, Category::kBiomarkerType},
                                         {"d1", 30, 34, Category::kGene}};
    auto scores = evaluate_exact_match(gold, predicted);
    CHECK(scores.overall.tp == 3);
    CHECK(scores.overall.fp == 1);
    CHECK(scores.overall.fn == 1);
    CHECK(scores.overall.precision == doctest::Approx(0.75));
    CHECK(scores.overall.recall == doctest::Approx(0.75));
    CHECK(scores.overall.f1 == doctest::Approx(0.75));
  }
  SUBCASE("a boundary shift counts as FP plus FN") {
    std::vector<EntitySpan> predicted = gold;
    predicted[0].end = 5;
    auto scores = evaluate_exact_match(gold, predicted);
    CHECK(scores.overall.tp == 3);
    CHECK(scores.overall.fp == 1);
    CHECK(scores.overall.fn == 1);
  }
  SUBCASE("category mismatch also fails the exact-match rule") {
    std::vector<EntitySpan> predicted = gold;
    predicted[0].category = Category::kDisease;
    auto scores = evaluate_exact_match(gold, predicted);
    CHECK(scores.overall.tp == 3);
  }
  SUBCASE("document id mismatch is an error") {
    std::vector<EntitySpan> predicted = {{"other", 0, 4, Category::kGene}};
    CHECK_THROWS_AS(evaluate_exact_match(gold, predicted), StructuralError);
  }
  SUBCASE("0/0 ratios are defined as zero and flagged") {
    std::vector<EntitySpan> empty_gold = {{"d1", 0, 1, Category::kGene}};
    std::vector<EntitySpan> none = {{"d1", 5, 9, Category::kDisease}};
    auto scores = evaluate_exact_match(empty_gold, none);
    CHECK(scores.per_category.at(Category::kGene).recall == 0.0);
    CHECK(scores.per_category.at(Category::kGene).zero_division);
  }
}

TEST_CASE("gold TSV loads document-level spans") {
  test::TempDir dir("gold");
  test::write_file(dir.file("gold.tsv"),
                   "# doc\tbegin\tend\tcategory\n"
                   "pubmed_demo1.txt\t0\t4\tGene\n"
                   "pubmed_demo1.txt\t41\t54\tDisease\n");
  auto gold = load_gold_tsv(dir.file("gold.tsv"));
  REQUIRE(gold.size() == 2);
  CHECK(gold[0].category == Category::kGene);
  CHECK(gold[1].begin == 41);

  test::write_file(dir.file("bad.tsv"), "doc\t5\t2\tGene\n");
  CHECK_THROWS_AS(load_gold_tsv(dir.file("bad.tsv")), ParseError);
}

TEST_CASE("wire protocol round-trip and tag normalization") {
  Document doc{"d.txt", "TP53 causes cancer."};
  auto sentences = segment(doc.body);
  std::string request = make_request_json(doc, sentences);
  CHECK(request.find("\"doc_id\":\"d.txt\"") != std::string::npos);

  std::string error;
  auto ok = parse_response_json(
      R"({"mentions":[{"sentence_index":0,"begin":0,"end":4,)"
      R"("candidates":[{"category":"Gene","score":0.9}],)"
      R"("tags":["CLS","B","X","SEP"]}],)"
      R"("relations":[{"sentence_index":0,"subj_span":[0,4],"obj_span":[12,18],)"
      R"("relation":"causes","score":0.8}]})",
      &error);
  REQUIRE(ok.has_value());
  CHECK(ok->mentions.size() == 1);
  CHECK(ok->relations.size() == 1);
  CHECK(normalize_wire_tags(ok->mentions[0].tags) ==
        std::vector<std::string>{"B", "I"});

  CHECK_FALSE(parse_response_json("not json", &error).has_value());
  CHECK_FALSE(error.empty());
  CHECK_FALSE(parse_response_json(R"({"mentions":[{"sentence_index":0}]})", &error)
                  .has_value());
  CHECK_FALSE(
      parse_response_json(
          R"({"mentions":[{"sentence_index":0,"begin":2,"end":1,"candidates":[]}]})",
          &error)
          .has_value());
}

TEST_CASE("subprocess extractor feeds mentions and relations through the wire") {
  // A python one-liner extractor that tags TP53 and Breast Cancer in
  // sentence 0 and asserts the causes relation between them.
  std::string script = R"PY(
import sys, json
for line in sys.stdin:
    req = json.loads(line)
    text = req["sentences"][0]["text"]
    b = text.find("TP53"); d = text.find("Breast Cancer")
    resp = {"mentions": [
        {"sentence_index": 0, "begin": b, "end": b + 4,
         "candidates": [{"category": "Gene", "score": 0.95}], "tags": ["B"]},
        {"sentence_index": 0, "begin": d, "end": d + 13,
         "candidates": [{"category": "Disease", "score": 0.9}], "tags": ["B", "I"]}],
        "relations": [{"sentence_index": 0, "subj_span": [b, b + 4],
                       "obj_span": [d, d + 13], "relation": "causes", "score": 0.88}]}
    print(json.dumps(resp), flush=True)
)PY";
  test::TempDir dir("ext");
  test::write_file(dir.file("extractor.py"), script);

  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  std::vector<Document> corpus{
      {"pubmed_x.txt", "TP53 is responsible for a disease called Breast Cancer."}};
  PipelineOptions options;
  options.mode = ExtractorMode::kSubprocess;
  options.extractor_target = "python3 " + dir.file("extractor.py").string();
  auto result =
      run_extraction(kg, corpus, gaz, options, fixed_clock_epoch_seconds(1));

  CHECK(result.inserted_total == 1);
  Triple causes{ono("TP53"), vocab::causes(), ono("BRCA")};
  REQUIRE(kg.contains(causes));
  const rdf::Provenance* prov = kg.provenance(causes);
  REQUIRE(prov != nullptr);
  CHECK(prov->extractor == "external");
  CHECK(prov->confidence == doctest::Approx(0.88));
}

TEST_CASE("malformed external responses fall back to the built-in extractor") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  std::vector<Document> corpus{{"pubmed_y.txt", kWorked}};
  PipelineOptions options;
  options.mode = ExtractorMode::kSubprocess;
  options.extractor_target = "sed -u 's/.*/garbage that is not json/'";
  auto result = run_extraction(kg, corpus, gaz, options, fixed_clock_epoch_seconds(1));

  REQUIRE(result.docs.size() == 1);
  REQUIRE_FALSE(result.docs[0].errors.empty());
  CHECK(result.docs[0].errors[0].find("falling back") != std::string::npos);
  // Built-in extraction still produced the worked paragraph's triples.
  CHECK(result.inserted_total == 4);
}
