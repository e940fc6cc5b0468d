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

#ifndef ONCOKG_TESTS_HELPERS_H_
#define ONCOKG_TESTS_HELPERS_H_

#include <atomic>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::test {

inline std::filesystem::path data_dir() { return ONCOKG_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return ONCOKG_FIXTURE_DIR; }

// Fresh scratch directory under the build tree, wiped on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("oncokg_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

inline std::set<rdf::Triple, rdf::TripleOrder> triple_set(const rdf::Graph& g) {
  std::set<rdf::Triple, rdf::TripleOrder> out;
  for (const auto& [t, p] : g.entries()) out.insert(t);
  return out;
}

// Random triples over a small seed-flavored vocabulary, blanks and typed
// literals included.
inline rdf::Triple random_triple(std::mt19937& rng) {
  using rdf::Term;
  static const char* kSubjects[] = {"TP53", "BRCA1", "FAS", "MYC",   "feature/TP53_BRCA",
                                    "BRCA", "OV",    "MED", "POTSF", "Oncogene"};
  static const char* kPredicates[] = {"causes", "crossResponsibility", "hasType",
                                      "hasEvidence", "hasSignificance", "evidenceType"};
  std::uniform_int_distribution<int> subject_pick(0, 11);
  std::uniform_int_distribution<int> predicate_pick(0, 5);
  std::uniform_int_distribution<int> object_pick(0, 13);

  auto subject_term = [&](int n) -> Term {
    if (n < 10) return ontology::ono(kSubjects[n]);
    return Term::blank("b" + std::to_string(n));
  };
  auto object_term = [&](int n) -> Term {
    if (n < 10) return ontology::ono(kSubjects[n]);
    if (n == 10) return Term::blank("b7");
    if (n == 11) return Term::literal("uv \"x\"\n\tescape", "", "en");
    if (n == 12) return Term::integer(n * 17);
    return Term::literal("plain");
  };
  return {subject_term(subject_pick(rng)), ontology::ono(kPredicates[predicate_pick(rng)]),
          object_term(object_pick(rng))};
}

inline rdf::Graph random_graph(std::mt19937& rng, std::size_t max_triples) {
  rdf::Graph g;
  std::uniform_int_distribution<std::size_t> size_pick(0, max_triples);
  std::size_t n = size_pick(rng);
  for (std::size_t i = 0; i < n; ++i) {
    g.insert(random_triple(rng));
  }
  return g;
}

}  // namespace onco::test

#endif  // ONCOKG_TESTS_HELPERS_H_
