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

#include "onco/rdf/ntriples.hpp"

#include <cctype>

#include "onco/error.hpp"

namespace onco::rdf {

namespace {

// Appends a Unicode code point as UTF-8.
void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  Triple parse() {
    skip_ws();
    Term subject = parse_subject();
    skip_ws();
    Term predicate = parse_iriref();
    skip_ws();
    Term object = parse_object();
    skip_ws();
    expect('.');
    skip_ws();
    if (pos_ < line_.size() && line_[pos_] != '#') {
      fail("trailing content after '.'");
    }
    return Triple{std::move(subject), std::move(predicate), std::move(object)};
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_no_, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= line_.size() || line_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }

  // Decodes one backslash escape starting at the backslash.
  void decode_escape(std::string& out) {
    ++pos_;  // consume backslash
    if (pos_ >= line_.size()) fail("dangling escape");
    char c = line_[pos_++];
    switch (c) {
      case 't': out += '\t'; return;
      case 'b': out += '\b'; return;
      case 'n': out += '\n'; return;
      case 'r': out += '\r'; return;
      case 'f': out += '\f'; return;
      case '"': out += '"'; return;
      case '\'': out += '\''; return;
      case '\\': out += '\\'; return;
      case 'u': out += decode_hex(4); return;
      case 'U': out += decode_hex(8); return;
      default: fail(std::string("unknown escape '\\") + c + "'");
    }
  }

  std::string decode_hex(int digits) {
    if (pos_ + digits > line_.size()) fail("truncated \\u escape");
    unsigned long cp = 0;
    for (int i = 0; i < digits; ++i) {
      char c = line_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<unsigned long>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<unsigned long>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<unsigned long>(c - 'A' + 10);
      else fail("bad hex digit in \\u escape");
    }
    std::string out;
    append_utf8(out, cp);
    return out;
  }

  Term parse_iriref() {
    expect('<');
    std::string text;
    while (pos_ < line_.size() && line_[pos_] != '>') {
      if (line_[pos_] == '\\') {
        decode_escape(text);
      } else {
        text += line_[pos_++];
      }
    }
    expect('>');
    try {
      return Term::iri(std::move(text));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_blank() {
    expect('_');
    expect(':');
    std::string label;
    while (pos_ < line_.size() &&
           (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
            line_[pos_] == '_' || line_[pos_] == '-' || line_[pos_] == '.')) {
      label += line_[pos_++];
    }
    // A trailing '.' belongs to the statement terminator.
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    try {
      return Term::blank(std::move(label));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_subject() {
    if (peek() == '<') return parse_iriref();
    if (peek() == '_') return parse_blank();
    fail("expected IRI or blank node subject");
  }

  Term parse_literal() {
    expect('"');
    std::string lexical;
    while (pos_ < line_.size() && line_[pos_] != '"') {
      if (line_[pos_] == '\\') {
        decode_escape(lexical);
      } else {
        lexical += line_[pos_++];
      }
    }
    expect('"');
    std::string datatype;
    std::string language;
    if (peek() == '^') {
      expect('^');
      expect('^');
      Term dt = parse_iriref();
      datatype = dt.value();
    } else if (peek() == '@') {
      ++pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '-')) {
        language += line_[pos_++];
      }
      if (language.empty()) fail("empty language tag");
    }
    try {
      return Term::literal(std::move(lexical), std::move(datatype), std::move(language));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_object() {
    if (peek() == '<') return parse_iriref();
    if (peek() == '_') return parse_blank();
    if (peek() == '"') return parse_literal();
    fail("expected IRI, blank node, or literal object");
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

void parse_ntriples_into(Graph& graph, std::string_view text, const ParseOptions& options,
                         ParseReport* report) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t content = line.find_first_not_of(" \t");
    if (content != std::string_view::npos && line[content] != '#') {
      try {
        Triple t = LineParser(line, line_no).parse();
        graph.insert(t);
        if (report != nullptr) ++report->statements;
      } catch (const Error& e) {
        if (options.strict) throw;
        if (report != nullptr) report->issues.push_back({line_no, e.what()});
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
}

Graph parse_ntriples(std::string_view text, const ParseOptions& options,
                     ParseReport* report) {
  Graph graph;
  parse_ntriples_into(graph, text, options, report);
  return graph;
}

std::string serialize_ntriples(const Graph& graph) {
  std::string out;
  for (const auto& [triple, prov] : graph.entries()) {
    out += triple.text();
    out += '\n';
  }
  return out;
}

}  // namespace onco::rdf
