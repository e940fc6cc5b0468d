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

#ifndef ONCOKG_EXTRACT_RELATIONS_H_
#define ONCOKG_EXTRACT_RELATIONS_H_

#include <string>
#include <vector>

#include "onco/extract/mention.hpp"

namespace onco::extract {

struct Replacement {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string placeholder;
};

// Replaces the given spans byte-for-byte with their placeholders.
// Overlapping spans are an error.
std::string anonymize(std::string_view sentence, std::vector<Replacement> replacements);

// The pre-defined gene/disease anonymization of a sentence pairing.
std::string anonymize(std::string_view sentence, const Mention& gene_entity,
                      const Mention& disease_entity);

// Anonymizes one pairing: gene/disease instances get @GENE$/@DISEASE$,
// class words and other categories stay verbatim.
std::string anonymize_pairing(const Sentence& sentence, const LinkedEntity& a,
                              const LinkedEntity& b);

// Pattern classification over anonymized sentence pairings, closed-world
// over four predicates:
//   causes       gene .. "responsible for"/"causes" .. disease
//   hasType      gene .. "has <type> functionality" / "is a(n) <type>"
//   hasEvidence  nearest entity left of "mentioned in"/"indexed in"/
//                "evidence" .. evidence source
//   isA          "<classword> called <instance>" / "<instance> is a(n)
//                <classword>" with a class-word object (emitted as rdf:type)
// Entities without a linked IRI are skipped. Candidates are deduplicated
// per (subject, relation, object).
std::vector<RelationCandidate> extract_relations(const std::string& doc_id,
                                                 const Sentence& sentence,
                                                 const std::vector<LinkedEntity>& entities);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_RELATIONS_H_
