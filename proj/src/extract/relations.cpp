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

#include "onco/extract/relations.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "onco/error.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::extract {

using rdf::Term;

namespace {

std::string fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Word-boundary keyword occurrences in folded text.
std::vector<std::pair<std::size_t, std::size_t>> find_keyword(const std::string& folded,
                                                              std::string_view keyword) {
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  std::size_t pos = 0;
  while ((pos = folded.find(keyword, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !word_char(folded[pos - 1]);
    std::size_t end = pos + keyword.size();
    bool right_ok = end >= folded.size() || !word_char(folded[end]);
    if (left_ok && right_ok) hits.emplace_back(pos, end);
    pos += 1;
  }
  return hits;
}

constexpr double kPatternScore = 1.0;

}  // namespace

std::string anonymize(std::string_view sentence, std::vector<Replacement> replacements) {
  std::sort(replacements.begin(), replacements.end(),
            [](const Replacement& a, const Replacement& b) { return a.begin < b.begin; });
  std::size_t last_end = 0;
  for (const Replacement& r : replacements) {
    if (r.begin < last_end) {
      throw StructuralError("overlapping anonymization spans");
    }
    if (r.end > sentence.size() || r.begin > r.end) {
      throw StructuralError("anonymization span outside sentence bounds");
    }
    last_end = r.end;
  }
  std::string out;
  out.reserve(sentence.size());
  std::size_t cursor = 0;
  for (const Replacement& r : replacements) {
    out.append(sentence.substr(cursor, r.begin - cursor));
    out.append(r.placeholder);
    cursor = r.end;
  }
  out.append(sentence.substr(cursor));
  return out;
}

std::string anonymize(std::string_view sentence, const Mention& gene_entity,
                      const Mention& disease_entity) {
  return anonymize(sentence, {{gene_entity.begin, gene_entity.end, "@GENE$"},
                              {disease_entity.begin, disease_entity.end, "@DISEASE$"}});
}

namespace {

const char* placeholder_for(Category category) {
  switch (category) {
    case Category::kGene: return "@GENE$";
    case Category::kDisease: return "@DISEASE$";
    default: return nullptr;
  }
}

}  // namespace

std::string anonymize_pairing(const Sentence& sentence, const LinkedEntity& a,
                              const LinkedEntity& b) {
  std::vector<Replacement> replacements;
  for (const LinkedEntity* e : {&a, &b}) {
    if (e->is_class) continue;
    const char* placeholder = placeholder_for(e->category);
    if (placeholder != nullptr) {
      replacements.push_back({e->mention.begin, e->mention.end, placeholder});
    }
  }
  return anonymize(sentence.text, std::move(replacements));
}

namespace {

struct PatternContext {
  const Sentence& sentence;
  std::string folded;  // folded original text; spans align with mentions
  const std::vector<LinkedEntity>& entities;

  std::vector<std::pair<std::size_t, std::size_t>> hits(std::string_view keyword) const {
    return find_keyword(folded, keyword);
  }
};

bool between(std::size_t left_end, const std::pair<std::size_t, std::size_t>& hit,
             std::size_t right_begin) {
  return left_end <= hit.first && hit.second <= right_begin;
}

bool matches_causes(const PatternContext& ctx, const LinkedEntity& subject,
                    const LinkedEntity& object) {
  if (subject.category != Category::kGene || subject.is_class) return false;
  if (object.category != Category::kDisease || object.is_class) return false;
  for (std::string_view keyword : {"responsible for", "causes"}) {
    for (const auto& hit : ctx.hits(keyword)) {
      if (between(subject.mention.end, hit, object.mention.begin)) return true;
    }
  }
  return false;
}

bool matches_has_type(const PatternContext& ctx, const LinkedEntity& subject,
                      const LinkedEntity& object) {
  if (subject.category != Category::kGene || subject.is_class) return false;
  if (object.category != Category::kBiomarkerType) return false;
  // "has <type> functionality"
  for (const auto& has : ctx.hits("has")) {
    if (has.first < subject.mention.end || has.second > object.mention.begin) continue;
    for (const auto& fn : ctx.hits("functionality")) {
      if (fn.first >= object.mention.end) return true;
    }
  }
  // "is a(n) <type> [gene]" with the type mention close after the copula
  for (std::string_view keyword : {"is a", "is an", "is"}) {
    for (const auto& hit : ctx.hits(keyword)) {
      if (between(subject.mention.end, hit, object.mention.begin) &&
          object.mention.begin - hit.second <= 24) {
        return true;
      }
    }
  }
  return false;
}

bool matches_has_evidence(const PatternContext& ctx, const LinkedEntity& subject,
                          const LinkedEntity& object) {
  if (object.category != Category::kEvidenceSource) return false;
  if (subject.category == Category::kEvidenceSource) return false;
  for (std::string_view keyword : {"mentioned in", "indexed in", "evidence"}) {
    for (const auto& hit : ctx.hits(keyword)) {
      if (object.mention.begin < hit.second) continue;
      // Subject must be the nearest entity left of the keyword.
      const LinkedEntity* nearest = nullptr;
      for (const LinkedEntity& e : ctx.entities) {
        if (!e.iri.has_value()) continue;
        if (e.category == Category::kEvidenceSource) continue;
        if (e.mention.end > hit.first) continue;
        if (nearest == nullptr || e.mention.end > nearest->mention.end) nearest = &e;
      }
      if (nearest != nullptr && nearest->iri == subject.iri &&
          nearest->mention.begin == subject.mention.begin) {
        return true;
      }
    }
  }
  return false;
}

bool matches_is_a(const PatternContext& ctx, const LinkedEntity& subject,
                  const LinkedEntity& object) {
  if (!object.is_class || subject.is_class) return false;
  // "<classword> called <instance>"
  for (const auto& hit : ctx.hits("called")) {
    if (object.mention.end <= hit.first && hit.second <= subject.mention.begin &&
        subject.mention.begin - hit.second <= 4) {
      return true;
    }
  }
  // "<instance> is a(n) <classword>"
  for (std::string_view keyword : {"is a", "is an"}) {
    for (const auto& hit : ctx.hits(keyword)) {
      if (between(subject.mention.end, hit, object.mention.begin) &&
          object.mention.begin - hit.second <= 24) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<RelationCandidate> extract_relations(const std::string& doc_id,
                                                 const Sentence& sentence,
                                                 const std::vector<LinkedEntity>& entities) {
  namespace v = ontology::vocab;
  PatternContext ctx{sentence, fold(sentence.text), entities};
  std::vector<RelationCandidate> out;
  std::set<std::string> seen;

  auto emit = [&](const LinkedEntity& subject, const LinkedEntity& object,
                  const Term& relation) {
    std::string key = subject.iri->canonical() + "|" + relation.canonical() + "|" +
                      object.iri->canonical();
    if (!seen.insert(key).second) return;
    RelationCandidate candidate;
    candidate.doc_id = doc_id;
    candidate.sentence_index = sentence.index;
    candidate.subject = subject;
    candidate.object = object;
    candidate.relation = relation;
    candidate.score = kPatternScore;
    candidate.anonymized_sentence = anonymize_pairing(sentence, subject, object);
    out.push_back(std::move(candidate));
  };

  for (const LinkedEntity& subject : entities) {
    if (!subject.iri.has_value()) continue;
    for (const LinkedEntity& object : entities) {
      if (!object.iri.has_value()) continue;
      if (&subject == &object) continue;
      if (matches_causes(ctx, subject, object)) {
        emit(subject, object, v::causes());
      }
      if (matches_has_type(ctx, subject, object)) {
        emit(subject, object, v::hasType());
      }
      if (matches_has_evidence(ctx, subject, object)) {
        emit(subject, object, v::hasEvidence());
      }
      if (matches_is_a(ctx, subject, object)) {
        emit(subject, object, ontology::rdf_type());
      }
    }
  }
  return out;
}

}  // namespace onco::extract
