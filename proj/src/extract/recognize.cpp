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

#include "onco/extract/recognize.hpp"

#include <algorithm>

#include "onco/error.hpp"

namespace onco::extract {

using ontology::Gazetteer;
using ontology::GazetteerEntry;

std::vector<Mention> recognize(const std::string& doc_id,
                               const std::vector<Sentence>& sentences,
                               const Gazetteer& gazetteer) {
  std::vector<Mention> mentions;
  for (const Sentence& sentence : sentences) {
    const auto& tokens = sentence.tokens;
    std::size_t i = 0;
    while (i < tokens.size()) {
      std::size_t longest = std::min(gazetteer.max_words(), tokens.size() - i);
      bool matched = false;
      for (std::size_t len = longest; len >= 1; --len) {
        std::size_t begin = tokens[i].begin;
        std::size_t end = tokens[i + len - 1].end;
        std::string surface = sentence.text.substr(begin, end - begin);
        auto candidates = gazetteer.lookup(surface);
        if (candidates.empty()) continue;

        Mention mention;
        mention.doc_id = doc_id;
        mention.sentence_index = sentence.index;
        mention.begin = begin;
        mention.end = end;
        mention.surface = std::move(surface);
        mention.tags.assign(len, "I");
        mention.tags[0] = "B";
        for (const GazetteerEntry& entry : candidates) {
          mention.candidates.push_back(
              {entry.iri, entry.category, entry.prior, entry.is_class});
        }
        mentions.push_back(std::move(mention));
        i += len;
        matched = true;
        break;
      }
      if (!matched) ++i;
    }
  }
  return mentions;
}

Mention resolve_types(Mention mention) {
  if (mention.candidates.empty()) {
    throw StructuralError("resolve_types: mention '" + mention.surface +
                          "' has no candidates");
  }
  const MentionCandidate* best = nullptr;
  for (const MentionCandidate& c : mention.candidates) {
    if (best == nullptr) {
      best = &c;
      continue;
    }
    if (c.score > best->score) {
      best = &c;
    } else if (c.score == best->score) {
      int rank = ontology::category_rank(c.category);
      int best_rank = ontology::category_rank(best->category);
      if (rank < best_rank || (rank == best_rank && c.iri < best->iri)) {
        best = &c;
      }
    }
  }
  mention.resolved = best->category;
  return mention;
}

}  // namespace onco::extract
