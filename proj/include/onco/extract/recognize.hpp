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

#ifndef ONCOKG_EXTRACT_RECOGNIZE_H_
#define ONCOKG_EXTRACT_RECOGNIZE_H_

#include <string>
#include <vector>

#include "onco/extract/document.hpp"
#include "onco/extract/mention.hpp"
#include "onco/ontology/gazetteer.hpp"

namespace onco::extract {

// Dictionary NER: longest match, left to right, over token windows.
// Multiword disease names match case-insensitively; gene symbols and codes
// match exactly. Matched tokens get B/I tags; candidates copy the
// gazetteer's (category, prior) pairs.
std::vector<Mention> recognize(const std::string& doc_id,
                               const std::vector<Sentence>& sentences,
                               const ontology::Gazetteer& gazetteer);

// Picks the argmax-score category; ties break Gene > Disease >
// BiomarkerType > EvidenceSource, then lexicographic IRI. The result does
// not depend on candidate order. Throws StructuralError on an empty
// candidate list.
Mention resolve_types(Mention mention);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_RECOGNIZE_H_
