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

#include <cstdlib>

#include "helpers.hpp"
#include "onco/error.hpp"
#include "onco/llm/apply.hpp"
#include "onco/llm/client.hpp"
#include "onco/llm/prompt.hpp"
#include "onco/llm/response.hpp"
#include "onco/llm/triage.hpp"
#include "onco/ontology/gazetteer.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/rdf/ntriples.hpp"
#include "onco/reason/consistency.hpp"

using namespace onco;
using namespace onco::llm;
using namespace onco::ontology;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {

Graph seed_graph() { return load_seed(test::data_dir() / "seed"); }

Completion ok(const std::string& text) { return {Completion::Status::kOk, text, ""}; }
Completion transient() { return {Completion::Status::kTransient, "", "timeout"}; }

}  // namespace

TEST_CASE("prompt lists every accepted relation and renders deterministically") {
  Graph kg = seed_graph();
  PromptInstance prompt = render_prompt(kg, "Some article text.");
  std::string rendered = prompt.render();
  for (const char* relation : {"causes", "hasType", "hasEvidence", "isA"}) {
    CHECK(prompt.ontology_block.find(relation) != std::string::npos);
  }
  CHECK(rendered.find("Some article text.") != std::string::npos);
  CHECK(rendered.find("TP53|causes|Breast Cancer") != std::string::npos);  // example

  CHECK(render_prompt(kg, "Some article text.").render() == rendered);
  CHECK_THROWS_AS(render_prompt(kg, ""), StructuralError);
}

TEST_CASE("prompt truncation keeps instruction and text intact") {
  Graph kg = seed_graph();
  PromptOptions options;
  options.max_chars = 900;  // below the roster size
  PromptInstance prompt = render_prompt(kg, "Target text stays.", options);
  std::string rendered = prompt.render();
  CHECK(rendered.size() <= options.max_chars + 64);
  CHECK(rendered.find("[vocabulary truncated]") != std::string::npos);
  CHECK(rendered.find("Extract biomedical facts") != std::string::npos);
  CHECK(rendered.find("Target text stays.") != std::string::npos);
}

TEST_CASE("worked example round-trips through the response parser") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  PromptInstance prompt = render_prompt(kg, "irrelevant");
  REQUIRE_FALSE(prompt.context_examples.empty());
  std::string block;
  for (const auto& line : prompt.context_examples[0].second) block += line + "\n";
  auto parsed = parse_response(block, kg, gaz);
  CHECK(parsed.rejects.empty());
  REQUIRE(parsed.triples.size() == 4);
  CHECK(parsed.triples[0] == Triple{ono("TP53"), vocab::causes(), ono("BRCA")});
  CHECK(parsed.triples[1] == Triple{ono("TP53"), vocab::hasType(), vocab::Potsf()});
  CHECK(parsed.triples[2] == Triple{ono("BRCA"), rdf_type(), vocab::Disease()});
  CHECK(parsed.triples[3] == Triple{ono("POTSF"), vocab::hasEvidence(), vocab::PubMed()});
}

TEST_CASE("response parsing is total: bad lines become rejects with reasons") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  auto parsed = parse_response(
      "TP53|causes|Breast Cancer\n"
      "Sure! Here are the triples you asked for.\n"
      "TP53|binds|DNA\n"
      "XYZNOPE|causes|Breast Cancer\n"
      "FAS|causes|Ovarian Cancer\n",
      kg, gaz);
  CHECK(parsed.triples.size() == 2);
  REQUIRE(parsed.rejects.size() == 3);
  CHECK(parsed.rejects[0].reason.find("expected subject|relation|object") !=
        std::string::npos);
  CHECK(parsed.rejects[1].reason.find("unknown relation") != std::string::npos);
  CHECK(parsed.rejects[2].reason.find("unknown entity") != std::string::npos);

  // Unknown entities mint only when explicitly enabled.
  ResponseOptions minting;
  minting.mint_unknown = true;
  auto minted = parse_response("XYZNOPE|causes|Breast Cancer\n", kg, gaz, minting);
  REQUIRE(minted.triples.size() == 1);
  CHECK(minted.triples[0].subject.value().find("minted/XYZNOPE") != std::string::npos);
}

TEST_CASE("mock client retries transient faults then succeeds") {
  MockClient client({transient(), transient(), ok("answer")});
  RequestParams params;
  params.backoff_base_ms = 1;
  CHECK(request(client, "p", params) == "answer");
  CHECK(client.calls() == 3);

  MockClient exhausted({transient(), transient(), transient(), transient()});
  RequestParams tight;
  tight.max_retries = 2;
  tight.backoff_base_ms = 1;
  CHECK_THROWS_AS(request(exhausted, "p", tight), TransportError);
}

TEST_CASE("missing credential is a configuration error before any network use") {
  unsetenv("ONCOKG_LLM_ENDPOINT");
  unsetenv("ONCOKG_LLM_MODEL");
  unsetenv("ONCOKG_LLM_KEY");
  CHECK_THROWS_AS(ClientConfig::from_env(), ConfigError);
  setenv("ONCOKG_LLM_ENDPOINT", "http://localhost:9", 1);
  setenv("ONCOKG_LLM_MODEL", "m", 1);
  CHECK_THROWS_AS(ClientConfig::from_env(), ConfigError);  // credential still missing
  setenv("ONCOKG_LLM_KEY", "k", 1);
  CHECK(ClientConfig::from_env().model == "m");
  unsetenv("ONCOKG_LLM_ENDPOINT");
  unsetenv("ONCOKG_LLM_MODEL");
  unsetenv("ONCOKG_LLM_KEY");
}

TEST_CASE("triage partitions the canned five-line response 2/1/1/1") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  std::string canned = read_file(test::data_dir() / "llm" / "mock_response.txt");
  auto parsed = parse_response(canned, kg, gaz);
  CHECK(parsed.rejects.size() == 1);  // the prose line

  auto saturated = reason::saturate(kg);
  DiffReport diff = triage(parsed, saturated, {});
  CHECK(diff.partition_size() == parsed.triples.size());
  REQUIRE(diff.fresh.size() == 2);
  REQUIRE(diff.confirmed.size() == 1);
  REQUIRE(diff.conflicting.size() == 1);
  REQUIRE(diff.invalid.size() == 1);

  CHECK(diff.fresh[0].triple == Triple{ono("TP53"), vocab::causes(), ono("LUAD")});
  CHECK(diff.fresh[1].triple == Triple{ono("BRCA2"), vocab::causes(), ono("PRAD")});
  // (TP53 causes BRCA) is entailed by crossResponsibility ⊑ causes.
  CHECK(diff.confirmed[0].triple == Triple{ono("TP53"), vocab::causes(), ono("BRCA")});
  CHECK(diff.confirmed[0].reason.find("inferred") != std::string::npos);
  // Second significance for the same feature is a functional-key conflict.
  CHECK(diff.conflicting[0].triple ==
        Triple{feature_iri("TP53", "BRCA"), vocab::hasSignificance(), vocab::Low()});
  // Reversed causes direction violates the declared domain.
  CHECK(diff.invalid[0].triple == Triple{ono("BRCA"), vocab::causes(), ono("TP53")});
  CHECK(diff.invalid[0].reason.find("domain") != std::string::npos);
}

TEST_CASE("apply: dry_run never mutates; accept policies insert and queue") {
  Graph kg = seed_graph();
  Gazetteer gaz = Gazetteer::from_graph(kg);
  std::string canned = read_file(test::data_dir() / "llm" / "mock_response.txt");
  auto parsed = parse_response(canned, kg, gaz);
  auto saturated = reason::saturate(kg);
  DiffReport diff = triage(parsed, saturated, {});

  test::TempDir dir("apply");
  ApplyContext context{"pubmed_demo1.txt", dir.file("queue.nt"), dir.file("audit.jsonl"),
                       fixed_clock_epoch_seconds(1700000000)};

  SUBCASE("dry run leaves cardinality unchanged but still queues and audits") {
    std::size_t before = kg.size();
    auto result = apply(diff, kg, Policy::kDryRun, context);
    CHECK(kg.size() == before);
    CHECK(result.inserted == 0);
    CHECK(result.queued == 1);
    CHECK(std::filesystem::file_size(dir.file("queue.nt")) > 0);
    CHECK(std::filesystem::file_size(dir.file("audit.jsonl")) > 0);
  }

  SUBCASE("accept_new grows the KG by exactly the fresh set") {
    std::size_t before = kg.size();
    auto result = apply(diff, kg, Policy::kAcceptNew, context);
    CHECK(kg.size() == before + 2);
    CHECK(result.inserted == 2);
    CHECK(result.queued == 1);

    // Inserted triples carry llm provenance.
    const rdf::Provenance* prov =
        kg.provenance({ono("TP53"), vocab::causes(), ono("LUAD")});
    REQUIRE(prov != nullptr);
    CHECK(prov->extractor == "llm");
    CHECK(prov->source == "pubmed_demo1.txt");

    // The queue holds the conflict with its reason; the KG stays clean.
    std::string queue = read_file(dir.file("queue.nt"));
    CHECK(queue.find("# reason:") != std::string::npos);
    CHECK(queue.find("hasSignificance") != std::string::npos);
    auto after = reason::saturate(kg);
    CHECK(reason::check_consistency(after.graph,
                                    reason::Constraints::from_graph(after.graph))
              .empty());

    // Audit log: one JSON line per decision (5 triples + 1 reject).
    std::string audit = read_file(dir.file("audit.jsonl"));
    CHECK(std::count(audit.begin(), audit.end(), '\n') == 6);
    CHECK(audit.find("\"verdict\":\"confirmed\"") != std::string::npos);
    CHECK(audit.find("\"verdict\":\"rejected\"") != std::string::npos);
    CHECK(audit.find("2023-11-14T22:13:20Z") != std::string::npos);
  }

  SUBCASE("accept_new_and_queue_conflicts behaves identically on this diff") {
    std::size_t before = kg.size();
    apply(diff, kg, Policy::kAcceptNewQueueConflicts, context);
    CHECK(kg.size() == before + 2);
  }
}

TEST_CASE("triage treats batch triples independently against the same base") {
  Graph kg = seed_graph();
  auto saturated = reason::saturate(kg);
  // Two LOW-significance updates for the same feature: both conflict with
  // the asserted HIGH, neither with each other.
  ParsedResponse parsed;
  parsed.triples = {
      {feature_iri("TP53", "BRCA"), vocab::hasSignificance(), vocab::Low()},
      {feature_iri("TP53", "BRCA"), vocab::hasSignificance(), vocab::Medium()}};
  DiffReport diff = triage(parsed, saturated, {});
  CHECK(diff.conflicting.size() == 2);
  CHECK(diff.fresh.empty());
}

TEST_CASE("policy tokens parse") {
  CHECK(parse_policy("accept_new") == Policy::kAcceptNew);
  CHECK(parse_policy("accept_new_and_queue_conflicts") ==
        Policy::kAcceptNewQueueConflicts);
  CHECK(parse_policy("dry_run") == Policy::kDryRun);
  CHECK_THROWS_AS(parse_policy("yolo"), ConfigError);
}
