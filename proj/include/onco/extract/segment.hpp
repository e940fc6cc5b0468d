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

#ifndef ONCOKG_EXTRACT_SEGMENT_H_
#define ONCOKG_EXTRACT_SEGMENT_H_

#include <string_view>
#include <vector>

#include "onco/extract/document.hpp"

namespace onco::extract {

// Sentence boundaries sit at '.', '?' or '!' followed by whitespace and an
// uppercase letter, unless the preceding token is on the abbreviation stop
// list (e.g., i.e., et al., Fig., ...). Tokens are alphanumeric runs;
// internal hyphens join ("cell-cycle"), so gene symbols with digits stay
// whole (TP53, BRCA1).
std::vector<Sentence> segment(std::string_view text);

inline std::vector<Sentence> segment(const Document& doc) { return segment(doc.body); }

// Word tokens only (used for anonymized text and context overlap).
std::vector<TokenSpan> tokenize(std::string_view text);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_SEGMENT_H_
