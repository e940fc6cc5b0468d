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

#ifndef ONCOKG_EXTRACT_MENTION_H_
#define ONCOKG_EXTRACT_MENTION_H_

#include <optional>
#include <string>
#include <vector>

#include "onco/extract/document.hpp"
#include "onco/ontology/gazetteer.hpp"
#include "onco/rdf/term.hpp"

namespace onco::extract {

using ontology::Category;

struct MentionCandidate {
  rdf::Term iri;
  Category category;
  double score = 0.0;  // gazetteer prior or extractor probability
  bool is_class = false;
};

// A recognized span. Offsets are sentence-relative bytes; tags cover the
// mention's own tokens (B, then I). External extractors may also ship
// X/CLS/SEP/PAD tags, which are normalized before they land here.
struct Mention {
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string surface;
  std::vector<std::string> tags;
  std::vector<MentionCandidate> candidates;
  std::optional<Category> resolved;
};

struct LinkedEntity {
  Mention mention;
  std::optional<rdf::Term> iri;                // NONE when below threshold
  std::optional<std::string> normalized_id;    // e.g. ncbigene:7157, DOID:1612
  Category category = Category::kGene;
  double link_score = 0.0;
  bool is_class = false;
};

struct RelationCandidate {
  std::string doc_id;
  std::size_t sentence_index = 0;
  LinkedEntity subject;
  LinkedEntity object;
  rdf::Term relation;  // predicate IRI; isA arrives as rdf:type
  double score = 0.0;
  std::string anonymized_sentence;
};

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_MENTION_H_
