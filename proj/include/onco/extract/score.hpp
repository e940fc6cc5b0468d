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

#ifndef ONCOKG_EXTRACT_SCORE_H_
#define ONCOKG_EXTRACT_SCORE_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "onco/extract/mention.hpp"

namespace onco::extract {

// Document-level entity annotation (byte offsets into the document body).
struct EntitySpan {
  std::string doc_id;
  std::size_t begin = 0;
  std::size_t end = 0;
  Category category = Category::kGene;

  bool operator<(const EntitySpan& other) const {
    return std::tie(doc_id, begin, end, category) <
           std::tie(other.doc_id, other.begin, other.end, other.category);
  }
  bool operator==(const EntitySpan& other) const {
    return doc_id == other.doc_id && begin == other.begin && end == other.end &&
           category == other.category;
  }
};

// TSV: doc_id<TAB>begin<TAB>end<TAB>category, '#' comments allowed.
std::vector<EntitySpan> load_gold_tsv(const std::filesystem::path& path);

struct Prf {
  std::size_t tp = 0, fp = 0, fn = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
  bool zero_division = false;  // some ratio was 0/0 and was defined as 0
};

struct MatchScores {
  Prf overall;
  std::map<Category, Prf> per_category;
};

// Exact-match evaluation: a prediction counts iff span boundaries and
// category both equal a gold annotation. A boundary shift is one FP plus
// one FN. Gold and predictions must cover the same document-id set, else
// StructuralError.
MatchScores evaluate_exact_match(const std::vector<EntitySpan>& gold,
                                 const std::vector<EntitySpan>& predicted);

// Converts pipeline mentions (sentence-relative spans) into document-level
// entity spans using the sentence table of each document.
std::vector<EntitySpan> to_entity_spans(
    const std::vector<Mention>& mentions,
    const std::map<std::string, std::vector<Sentence>>& sentences_by_doc);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_SCORE_H_
