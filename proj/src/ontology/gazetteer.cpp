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

#include "onco/ontology/gazetteer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "onco/error.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::ontology {

using rdf::Term;

const char* to_string(Category c) {
  switch (c) {
    case Category::kGene: return "Gene";
    case Category::kDisease: return "Disease";
    case Category::kBiomarkerType: return "BiomarkerType";
    case Category::kEvidenceSource: return "EvidenceSource";
  }
  return "";
}

Category parse_category(const std::string& token) {
  if (token == "Gene") return Category::kGene;
  if (token == "Disease") return Category::kDisease;
  if (token == "BiomarkerType") return Category::kBiomarkerType;
  if (token == "EvidenceSource") return Category::kEvidenceSource;
  throw StructuralError("unknown category: '" + token + "'");
}

int category_rank(Category c) {
  switch (c) {
    case Category::kGene: return 0;
    case Category::kDisease: return 1;
    case Category::kBiomarkerType: return 2;
    case Category::kEvidenceSource: return 3;
  }
  return 4;
}

std::string Gazetteer::fold_key(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  bool pending_space = false;
  for (unsigned char c : surface) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

namespace {

std::string collapse_spaces(std::string_view surface) {
  std::string out;
  bool pending_space = false;
  for (unsigned char c : surface) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += static_cast<char>(c);
  }
  return out;
}

std::size_t word_count(std::string_view surface) {
  std::size_t words = 0;
  bool in_word = false;
  for (unsigned char c : surface) {
    if (std::isspace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++words;
    }
  }
  return words == 0 ? 1 : words;
}

}  // namespace

void Gazetteer::add(GazetteerEntry entry) {
  entry.surface = collapse_spaces(entry.surface);
  std::string key = fold_key(entry.surface);
  if (key.empty()) return;
  auto& bucket = by_key_[key];
  for (auto& existing : bucket) {
    if (existing.iri == entry.iri && existing.category == entry.category) {
      if (entry.pinned_prior) {
        existing.prior = entry.prior;
        existing.pinned_prior = true;
      }
      return;
    }
  }
  bucket.push_back(std::move(entry));
  max_words_ = std::max(max_words_, word_count(key));
}

void Gazetteer::rebalance(const std::string& key) {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return;
  auto& bucket = it->second;
  double pinned = 0.0;
  std::vector<GazetteerEntry*> defaults;
  for (auto& entry : bucket) {
    if (entry.pinned_prior) {
      pinned += entry.prior;
    } else {
      defaults.push_back(&entry);
    }
  }
  if (defaults.empty()) return;
  double remaining = std::max(0.0, 1.0 - pinned);
  double share = remaining / static_cast<double>(defaults.size());
  for (auto* entry : defaults) entry->prior = share;
}

std::size_t Gazetteer::size() const {
  std::size_t n = 0;
  for (const auto& [key, bucket] : by_key_) n += bucket.size();
  return n;
}

std::vector<GazetteerEntry> Gazetteer::lookup(std::string_view surface) const {
  std::string collapsed = collapse_spaces(surface);
  auto it = by_key_.find(fold_key(collapsed));
  if (it == by_key_.end()) return {};
  std::vector<GazetteerEntry> out;
  for (const auto& entry : it->second) {
    if (entry.case_sensitive && entry.surface != collapsed) continue;
    out.push_back(entry);
  }
  std::sort(out.begin(), out.end(), [](const GazetteerEntry& a, const GazetteerEntry& b) {
    if (a.prior != b.prior) return a.prior > b.prior;
    if (a.category != b.category) return category_rank(a.category) < category_rank(b.category);
    return a.iri < b.iri;
  });
  return out;
}

Gazetteer Gazetteer::from_graph(const rdf::Graph& graph) {
  namespace v = vocab;
  Gazetteer gaz;

  for (const Term& gene : biomarker_instances(graph)) {
    gaz.add({gene.local_name(), gene, Category::kGene, 0, true, false});
  }
  for (const auto& t : graph.match(std::nullopt, rdf_type(), v::Cancer())) {
    const Term& cancer = t.subject;
    gaz.add({cancer.local_name(), cancer, Category::kDisease, 0, true, false});
    for (const auto& lt : graph.match(cancer, rdfs_label(), std::nullopt)) {
      if (lt.object.is_literal()) {
        gaz.add({lt.object.value(), cancer, Category::kDisease, 0, false, false});
      }
    }
  }
  for (const char* name : {"POTSF", "Oncogene", "ProteinCoding"}) {
    gaz.add({name, ono(name), Category::kBiomarkerType, 0, false, false});
  }
  gaz.add({"Protein-coding", v::ProteinCoding(), Category::kBiomarkerType, 0, false, false});
  for (const auto& t : graph.match(std::nullopt, rdf_type(), v::EvidenceSource())) {
    gaz.add({t.subject.local_name(), t.subject, Category::kEvidenceSource, 0, false, false});
  }
  // Class words let the relation patterns see "... a disease called X".
  gaz.add({"disease", v::Disease(), Category::kDisease, 0, false, true});
  gaz.add({"cancer", v::Cancer(), Category::kDisease, 0, false, true});

  for (auto& [key, bucket] : gaz.by_key_) {
    gaz.rebalance(key);
  }
  return gaz;
}

void Gazetteer::load_aliases(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read alias file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> touched;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string surface, iri, category, prior;
    if (!std::getline(row, surface, '\t') || !std::getline(row, iri, '\t') ||
        !std::getline(row, category, '\t') || !std::getline(row, prior, '\t')) {
      throw ParseError("alias line needs surface<TAB>iri<TAB>category<TAB>prior", line_no);
    }
    double p = 0.0;
    try {
      p = std::stod(prior);
    } catch (...) {
      throw ParseError("bad prior '" + prior + "'", line_no);
    }
    if (p < 0.0 || p > 1.0) throw ParseError("prior outside [0,1]", line_no);
    add({surface, Term::iri(iri), parse_category(category), p, false, false, true});
    touched.push_back(fold_key(collapse_spaces(surface)));
  }
  // Re-share the default mass so per-surface priors stay <= 1.
  for (const auto& key : touched) {
    rebalance(key);
  }
}

}  // namespace onco::ontology
