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
#include <sstream>

#include "helpers.hpp"
#include "onco/cli/run.hpp"
#include "onco/error.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/util/config.hpp"

using namespace onco;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string seed_path() { return (test::data_dir() / "seed").string(); }
std::string corpus_path() { return (test::data_dir() / "corpus").string(); }
std::string mock_path() { return (test::data_dir() / "llm" / "mock_response.txt").string(); }
std::string rules_path() { return (test::data_dir() / "rules.txt").string(); }

}  // namespace

TEST_CASE("config file parser handles comments, quotes, and errors") {
  auto map = util::parse_config(
      "# comment\n"
      "seed = data/seed\n"
      "theta_link = 0.4  # trailing comment\n"
      "llm = \"mock:responses.txt\"\n");
  CHECK(map.at("seed") == "data/seed");
  CHECK(map.at("theta_link") == "0.4");
  CHECK(map.at("llm") == "mock:responses.txt");
  CHECK_THROWS_AS(util::parse_config("key_without_value\n"), ParseError);
}

TEST_CASE("usage errors exit 1, data errors exit 2") {
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
  auto missing = run_cli({"build", "--seed", "/no/such/path", "--out", "/tmp/x.nt"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error") != std::string::npos);
}

TEST_CASE("build then stats reports the cancer roster") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  auto build = run_cli({"build", "--seed", seed_path(), "--kg", kg});
  REQUIRE(build.code == 0);
  CHECK(build.err.find("tcga=33") != std::string::npos);

  auto stats = run_cli({"stats", "--kg", kg});
  REQUIRE(stats.code == 0);
  CHECK(stats.out.find("cancer_instances=34 tcga=33") != std::string::npos);
  CHECK(stats.out.find("ono:Cancer 34") != std::string::npos);
}

TEST_CASE("build rejects an invalid seed with exit 2") {
  test::TempDir dir("cli");
  test::write_file(dir.file("bad.ttl"),
                   "@prefix ono: <http://onconet.example/ono#> .\n"
                   "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
                   "ono:G a ono:POTSF ; ono:hasCitations \"0\"^^xsd:integer ;\n"
                   "  ono:evidenceType ono:PubMed .\n");
  auto result = run_cli({"build", "--seed", dir.file("bad.ttl").string(), "--kg",
                         dir.file("kg.nt").string()});
  CHECK(result.code == 2);
  CHECK(result.err.find("seed error") != std::string::npos);
}

TEST_CASE("extract on the demo corpus inserts the four triples, rerun inserts none") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  REQUIRE(run_cli({"build", "--seed", seed_path(), "--kg", kg}).code == 0);

  auto extract = run_cli({"extract", "--kg", kg, "--corpus", corpus_path()});
  REQUIRE(extract.code == 0);
  CHECK(extract.err.find("total inserted=4") != std::string::npos);

  auto again = run_cli({"extract", "--kg", kg, "--corpus", corpus_path()});
  CHECK(again.err.find("total inserted=0") != std::string::npos);
  CHECK(again.err.find("duplicates=4") != std::string::npos);
}

TEST_CASE("query answers the flagship DLQ against the extracted KG") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  REQUIRE(run_cli({"build", "--seed", seed_path(), "--kg", kg}).code == 0);

  auto result =
      run_cli({"query", "Biomarker and causes some BRCA and isA only POTSF", "--kg", kg});
  REQUIRE(result.code == 0);
  CHECK(result.out.find("ono:TP53") != std::string::npos);
  CHECK(result.out.find("vacuous_only=0") != std::string::npos);

  // Usage error without a query string.
  CHECK(run_cli({"query", "--kg", kg}).code == 1);
}

TEST_CASE("reason reports a clean seed and exits 3 on strict violations") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  REQUIRE(run_cli({"build", "--seed", seed_path(), "--kg", kg}).code == 0);
  auto clean = run_cli({"reason", "--kg", kg, "--strict"});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("violations=0") != std::string::npos);

  // Append a disjointness violation to the dump.
  std::string dump = ontology::read_file(kg);
  dump +=
      "<http://onconet.example/ono#TP53> "
      "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
      "<http://onconet.example/ono#Cancer> .\n";
  test::write_file(kg, dump);
  auto strict = run_cli({"reason", "--kg", kg, "--strict"});
  CHECK(strict.code == 3);
  CHECK(strict.out.find("DisjointViolation") != std::string::npos);
  CHECK(run_cli({"reason", "--kg", kg}).code == 0);  // non-strict still 0
}

TEST_CASE("refresh with the mock client applies the canned diff") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  REQUIRE(run_cli({"build", "--seed", seed_path(), "--kg", kg}).code == 0);

  auto refresh = run_cli({"refresh", "--kg", kg, "--corpus", corpus_path(), "--llm",
                          "mock:" + mock_path(), "--fake-now", "1700000000"});
  REQUIRE(refresh.code == 0);
  CHECK(refresh.err.find("new=2") != std::string::npos);
  CHECK(refresh.err.find("confirmed=1") != std::string::npos);
  CHECK(refresh.err.find("conflicting=1") != std::string::npos);
  CHECK(refresh.err.find("invalid=1") != std::string::npos);
  CHECK(refresh.err.find("inserted=2") != std::string::npos);
  CHECK(std::filesystem::exists(dir.file("kg.nt.queue.nt")));
  CHECK(std::filesystem::exists(dir.file("kg.nt.audit.jsonl")));

  // dry_run leaves the dump untouched.
  std::string before = ontology::read_file(kg);
  auto dry = run_cli({"refresh", "--kg", kg, "--corpus", corpus_path(), "--llm",
                      "mock:" + mock_path(), "--policy", "dry_run", "--fake-now",
                      "1700000000"});
  REQUIRE(dry.code == 0);
  CHECK(ontology::read_file(kg) == before);
}

TEST_CASE("assess writes the table and the JSON report") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  REQUIRE(run_cli({"build", "--seed", seed_path(), "--kg", kg}).code == 0);
  std::string report = dir.file("quality.json").string();
  auto assess = run_cli({"assess", "--kg", kg, "--report", report});
  REQUIRE(assess.code == 0);
  CHECK(assess.out.find("completeness") != std::string::npos);
  CHECK(assess.out.find("1.0000") != std::string::npos);
  CHECK(std::filesystem::exists(report));
}

TEST_CASE("export re-serializes canonically") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  REQUIRE(run_cli({"build", "--seed", seed_path(), "--kg", kg}).code == 0);
  std::string out = dir.file("export.nt").string();
  REQUIRE(run_cli({"export", "--kg", kg, "--out", out}).code == 0);
  CHECK(ontology::read_file(out) == ontology::read_file(kg));
}

TEST_CASE("environment variables override flags") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  std::string env_kg = dir.file("env.nt").string();
  setenv("ONCOKG_OUT", env_kg.c_str(), 1);
  auto build = run_cli({"build", "--seed", seed_path(), "--kg", kg, "--out",
                        dir.file("flag.nt").string()});
  unsetenv("ONCOKG_OUT");
  REQUIRE(build.code == 0);
  CHECK(std::filesystem::exists(env_kg));
  CHECK_FALSE(std::filesystem::exists(dir.file("flag.nt")));
}

TEST_CASE("config file feeds defaults that flags can override") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  test::write_file(dir.file("oncokg.conf"),
                   "seed = " + seed_path() + "\nkg = " + kg + "\n");
  auto build = run_cli({"build", "--config", dir.file("oncokg.conf").string()});
  REQUIRE(build.code == 0);
  CHECK(std::filesystem::exists(kg));
}

TEST_CASE("the installed binary runs end to end") {
  test::TempDir dir("cli");
  std::string kg = dir.file("kg.nt").string();
  std::string cmd = std::string(ONCOKG_BINARY) + " build --seed " + seed_path() +
                    " --kg " + kg + " 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::string query = std::string(ONCOKG_BINARY) +
                      " query \"Biomarker and causes some BRCA and isA only POTSF\" --kg " +
                      kg + " > " + dir.file("q.txt").string() + " 2>/dev/null";
  REQUIRE(std::system(query.c_str()) == 0);
  CHECK(ontology::read_file(dir.file("q.txt")).find("ono:TP53") != std::string::npos);
}
