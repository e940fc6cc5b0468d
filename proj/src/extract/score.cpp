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

#include "onco/extract/score.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "onco/error.hpp"

namespace onco::extract {

std::vector<EntitySpan> load_gold_tsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read gold file " + path.string());
  std::vector<EntitySpan> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string doc, begin, end, category;
    if (!std::getline(row, doc, '\t') || !std::getline(row, begin, '\t') ||
        !std::getline(row, end, '\t') || !std::getline(row, category, '\t')) {
      throw ParseError("gold line needs doc_id<TAB>begin<TAB>end<TAB>category", line_no);
    }
    EntitySpan span;
    span.doc_id = doc;
    try {
      span.begin = std::stoull(begin);
      span.end = std::stoull(end);
    } catch (...) {
      throw ParseError("bad span offsets", line_no);
    }
    if (span.begin >= span.end) throw ParseError("begin must be < end", line_no);
    span.category = ontology::parse_category(category);
    out.push_back(std::move(span));
  }
  return out;
}

namespace {

Prf compute_prf(std::size_t tp, std::size_t fp, std::size_t fn) {
  Prf prf;
  prf.tp = tp;
  prf.fp = fp;
  prf.fn = fn;
  if (tp + fp == 0) {
    prf.precision = 0.0;
    prf.zero_division = true;
  } else {
    prf.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  if (tp + fn == 0) {
    prf.recall = 0.0;
    prf.zero_division = true;
  } else {
    prf.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
  if (prf.precision + prf.recall == 0.0) {
    prf.f1 = 0.0;
    if (tp + fp + fn > 0) prf.zero_division = true;
  } else {
    prf.f1 = 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall);
  }
  return prf;
}

}  // namespace

MatchScores evaluate_exact_match(const std::vector<EntitySpan>& gold,
                                 const std::vector<EntitySpan>& predicted) {
  std::set<std::string> gold_docs, predicted_docs;
  for (const auto& g : gold) gold_docs.insert(g.doc_id);
  for (const auto& p : predicted) predicted_docs.insert(p.doc_id);
  if (gold_docs != predicted_docs) {
    throw StructuralError("gold and predicted document id sets differ");
  }

  std::set<EntitySpan> gold_set(gold.begin(), gold.end());
  std::set<EntitySpan> predicted_set(predicted.begin(), predicted.end());

  std::map<Category, std::size_t> tp, fp, fn;
  for (const auto& p : predicted_set) {
    if (gold_set.count(p) > 0) {
      ++tp[p.category];
    } else {
      ++fp[p.category];
    }
  }
  for (const auto& g : gold_set) {
    if (predicted_set.count(g) == 0) ++fn[g.category];
  }

  MatchScores scores;
  std::size_t tp_all = 0, fp_all = 0, fn_all = 0;
  for (Category c : {Category::kGene, Category::kDisease, Category::kBiomarkerType,
                     Category::kEvidenceSource}) {
    std::size_t t = tp.count(c) ? tp[c] : 0;
    std::size_t f = fp.count(c) ? fp[c] : 0;
    std::size_t n = fn.count(c) ? fn[c] : 0;
    if (t + f + n > 0) scores.per_category[c] = compute_prf(t, f, n);
    tp_all += t;
    fp_all += f;
    fn_all += n;
  }
  scores.overall = compute_prf(tp_all, fp_all, fn_all);
  return scores;
}

std::vector<EntitySpan> to_entity_spans(
    const std::vector<Mention>& mentions,
    const std::map<std::string, std::vector<Sentence>>& sentences_by_doc) {
  std::vector<EntitySpan> out;
  for (const Mention& mention : mentions) {
    if (!mention.resolved.has_value()) continue;
    auto it = sentences_by_doc.find(mention.doc_id);
    if (it == sentences_by_doc.end()) {
      throw StructuralError("mention references unknown document " + mention.doc_id);
    }
    const Sentence& sentence = it->second.at(mention.sentence_index);
    out.push_back({mention.doc_id, sentence.begin + mention.begin,
                   sentence.begin + mention.end, *mention.resolved});
  }
  return out;
}

}  // namespace onco::extract
