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

#include "onco/extract/segment.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "onco/error.hpp"

namespace onco::extract {

namespace {

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "al.",  "fig.",
    "eq.",  "dr.",  "mr.",  "mrs.", "no.", "resp.", "approx.",
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// The whitespace-delimited chunk ending at (and including) position end.
std::string_view chunk_ending_at(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !std::isspace(static_cast<unsigned char>(text[begin - 1]))) {
    --begin;
  }
  return text.substr(begin, end - begin + 1);
}

bool is_abbreviation(std::string_view chunk) {
  std::string folded = lower(chunk);
  for (auto abbr : kAbbreviations) {
    if (folded == abbr) return true;
    // "(e.g." and similar wrapped forms.
    if (folded.size() > abbr.size() &&
        folded.compare(folded.size() - abbr.size(), abbr.size(), abbr) == 0 &&
        !is_word_char(folded[folded.size() - abbr.size() - 1])) {
      return true;
    }
  }
  return false;
}

bool boundary_at(std::string_view text, std::size_t i) {
  char c = text[i];
  if (c != '.' && c != '?' && c != '!') return false;
  // Lookahead: whitespace then an uppercase letter.
  std::size_t j = i + 1;
  if (j >= text.size() || !std::isspace(static_cast<unsigned char>(text[j]))) return false;
  while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
  if (j >= text.size()) return true;  // trailing terminator
  if (!std::isupper(static_cast<unsigned char>(text[j]))) return false;
  if (c == '.' && is_abbreviation(chunk_ending_at(text, i))) return false;
  return true;
}

}  // namespace

std::vector<TokenSpan> tokenize(std::string_view text) {
  std::vector<TokenSpan> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < text.size() && is_word_char(text[i])) ++i;
    // Hyphenated compounds stay one token: cell-cycle.
    while (i < text.size() && text[i] == '-' && i + 1 < text.size() &&
           is_word_char(text[i + 1])) {
      ++i;
      while (i < text.size() && is_word_char(text[i])) ++i;
    }
    tokens.push_back({begin, i});
  }
  return tokens;
}

std::vector<Sentence> segment(std::string_view text) {
  std::vector<Sentence> sentences;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    // Trim surrounding whitespace.
    std::size_t b = start;
    while (b < end && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    std::size_t e = end;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (e > b) {
      Sentence s;
      s.index = sentences.size();
      s.begin = b;
      s.end = e;
      s.text = std::string(text.substr(b, e - b));
      s.tokens = tokenize(s.text);
      sentences.push_back(std::move(s));
    }
    start = end;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (boundary_at(text, i)) {
      flush(i + 1);
    }
  }
  flush(text.size());
  return sentences;
}

std::vector<Document> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error("corpus directory does not exist: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Document> corpus;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error("cannot read " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    corpus.push_back({file.filename().string(), buf.str()});
  }
  return corpus;
}

}  // namespace onco::extract
