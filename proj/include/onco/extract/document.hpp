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

#ifndef ONCOKG_EXTRACT_DOCUMENT_H_
#define ONCOKG_EXTRACT_DOCUMENT_H_

#include <filesystem>
#include <string>
#include <vector>

namespace onco::extract {

struct Document {
  std::string id;  // filename within the corpus directory
  std::string body;
};

// Word token within a sentence; byte offsets are sentence-relative.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Sentence {
  std::size_t index = 0;
  std::size_t begin = 0;  // byte offset of the sentence in the document
  std::size_t end = 0;
  std::string text;
  std::vector<TokenSpan> tokens;
};

// Reads every *.txt file, sorted by filename. Filename = document id.
std::vector<Document> load_corpus(const std::filesystem::path& dir);

}  // namespace onco::extract

#endif  // ONCOKG_EXTRACT_DOCUMENT_H_
