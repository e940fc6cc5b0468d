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

#ifndef ONCOKG_ONTOLOGY_GAZETTEER_H_
#define ONCOKG_ONTOLOGY_GAZETTEER_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onco/rdf/graph.hpp"

namespace onco::ontology {

enum class Category { kGene, kDisease, kBiomarkerType, kEvidenceSource };

const char* to_string(Category c);
Category parse_category(const std::string& token);

// Lower priority value = preferred on ties. Gene > Disease > BiomarkerType
// > EvidenceSource.
int category_rank(Category c);

struct GazetteerEntry {
  std::string surface;  // original casing, single-spaced
  rdf::Term iri;
  Category category;
  double prior = 1.0;
  bool case_sensitive = false;  // gene symbols and codes match exactly
  bool is_class = false;        // class words like "disease"
  bool pinned_prior = false;    // alias-file priors are kept as given
};

// Surface form -> candidate entities, built from the ontology graph plus an
// optional alias table. Keys are case-folded with collapsed whitespace;
// case-sensitive entries additionally require an exact surface match.
class Gazetteer {
 public:
  static Gazetteer from_graph(const rdf::Graph& graph);

  // TSV: surface<TAB>iri<TAB>category<TAB>prior. '#' comments allowed.
  // Alias priors are taken as given; default priors of the remaining
  // candidates for the same surface shrink so the per-surface sum stays <= 1.
  void load_aliases(const std::filesystem::path& path);

  void add(GazetteerEntry entry);

  // Candidates whose case rule accepts the surface, deterministically
  // ordered (descending prior, then category rank, then IRI).
  std::vector<GazetteerEntry> lookup(std::string_view surface) const;

  bool empty() const { return by_key_.empty(); }
  std::size_t size() const;
  // Longest surface form measured in whitespace-separated words.
  std::size_t max_words() const { return max_words_; }

  static std::string fold_key(std::string_view surface);

 private:
  void rebalance(const std::string& key);

  std::unordered_map<std::string, std::vector<GazetteerEntry>> by_key_;
  std::size_t max_words_ = 1;
};

}  // namespace onco::ontology

#endif  // ONCOKG_ONTOLOGY_GAZETTEER_H_
