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

#include "onco/rdf/turtle.hpp"

#include <cctype>

#include "onco/error.hpp"

namespace onco::rdf {

namespace {

constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

bool is_local_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == '/';
}

class TurtleParser {
 public:
  TurtleParser(Graph& graph, std::string_view text, const ParseOptions& options,
               ParseReport* report)
      : graph_(graph), text_(text), options_(options), report_(report) {}

  void run() {
    skip_ws();
    while (!eof()) {
      try {
        statement();
      } catch (const Error& e) {
        if (options_.strict) throw;
        if (report_ != nullptr) report_->issues.push_back({line_, e.what()});
        recover();
      }
      skip_ws();
    }
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, line_, column_);
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') take();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else {
        break;
      }
    }
  }

  // Lenient-mode resync: skip to the end of the current statement.
  void recover() {
    while (!eof()) {
      char c = take();
      if (c == '.') break;
      if (c == '"') {
        while (!eof()) {
          char d = take();
          if (d == '\\' && !eof()) take();
          else if (d == '"') break;
        }
      }
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }

  bool try_take(char c) {
    if (peek() == c) {
      take();
      return true;
    }
    return false;
  }

  bool keyword_boundary() const {
    if (eof()) return true;
    char c = peek();
    return !(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':');
  }

  bool try_keyword(std::string_view word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    std::size_t after = pos_ + word.size();
    if (after < text_.size()) {
      char c = text_[after];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
        return false;
      }
    }
    for (std::size_t i = 0; i < word.size(); ++i) take();
    return true;
  }

  void statement() {
    if (try_keyword("@prefix")) {
      prefix_directive();
      return;
    }
    if (try_keyword("@base") || try_keyword("@graph")) {
      fail("unsupported construct: directive");
    }
    Term subject = parse_subject();
    predicate_object_list(subject);
    skip_ws();
    expect('.');
  }

  void prefix_directive() {
    skip_ws();
    std::string label;
    while (!eof() && peek() != ':') {
      char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
        fail("bad prefix label");
      }
      label += take();
    }
    expect(':');
    skip_ws();
    Term ns = parse_iriref();
    skip_ws();
    expect('.');
    graph_.register_prefix(label, ns.value());
  }

  Term parse_iriref() {
    expect('<');
    std::string iri;
    while (!eof() && peek() != '>') {
      if (peek() == ' ' || peek() == '\n') fail("whitespace inside IRI");
      iri += take();
    }
    expect('>');
    try {
      return Term::iri(std::move(iri));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_prefixed_name() {
    std::string prefix;
    while (!eof() && peek() != ':') {
      char c = peek();
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) {
        fail("bad prefixed name");
      }
      prefix += take();
    }
    expect(':');
    std::string local;
    while (!eof() && is_local_char(peek())) {
      // '.' terminates the statement unless followed by another name char.
      if (peek() == '.') {
        if (pos_ + 1 >= text_.size() || !is_local_char(text_[pos_ + 1])) break;
      }
      local += take();
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) {
      fail("undefined prefix '" + prefix + ":'");
    }
    try {
      return Term::iri(it->second + local);
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_blank() {
    take();  // '_'
    expect(':');
    std::string label;
    while (!eof() && is_local_char(peek()) && peek() != '/') {
      if (peek() == '.') {
        if (pos_ + 1 >= text_.size() || !is_local_char(text_[pos_ + 1])) break;
      }
      label += take();
    }
    try {
      return Term::blank(std::move(label));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_subject() {
    skip_ws();
    char c = peek();
    if (c == '<') return parse_iriref();
    if (c == '_') return parse_blank();
    if (c == '[') fail("unsupported construct: blank node property list");
    if (c == '(') fail("unsupported construct: collection");
    return parse_prefixed_name();
  }

  Term parse_verb() {
    skip_ws();
    if (try_keyword("a")) return Term::iri(std::string(kRdfType));
    char c = peek();
    if (c == '<') return parse_iriref();
    return parse_prefixed_name();
  }

  Term parse_literal() {
    expect('"');
    std::string lexical;
    while (!eof() && peek() != '"') {
      char c = take();
      if (c == '\\') {
        if (eof()) fail("dangling escape");
        char e = take();
        switch (e) {
          case 't': lexical += '\t'; break;
          case 'n': lexical += '\n'; break;
          case 'r': lexical += '\r'; break;
          case '"': lexical += '"'; break;
          case '\\': lexical += '\\'; break;
          default: fail(std::string("unknown escape '\\") + e + "'");
        }
      } else {
        lexical += c;
      }
    }
    expect('"');
    std::string datatype;
    std::string language;
    if (peek() == '^') {
      take();
      expect('^');
      skip_ws();
      Term dt = (peek() == '<') ? parse_iriref() : parse_prefixed_name();
      datatype = dt.value();
    } else if (peek() == '@') {
      take();
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        language += take();
      }
      if (language.empty()) fail("empty language tag");
    }
    try {
      return Term::literal(std::move(lexical), std::move(datatype), std::move(language));
    } catch (const StructuralError& e) {
      fail(e.what());
    }
  }

  Term parse_number() {
    std::string digits;
    if (peek() == '+' || peek() == '-') digits += take();
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    if (peek() == '.' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      fail("unsupported construct: decimal literal");
    }
    return Term::literal(digits, std::string(xsd::kInteger));
  }

  Term parse_object() {
    skip_ws();
    char c = peek();
    if (c == '<') return parse_iriref();
    if (c == '_') return parse_blank();
    if (c == '"') return parse_literal();
    if (c == '[') fail("unsupported construct: blank node property list");
    if (c == '(') fail("unsupported construct: collection");
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      return parse_number();
    }
    if (try_keyword("true")) return Term::boolean(true);
    if (try_keyword("false")) return Term::boolean(false);
    return parse_prefixed_name();
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      Term verb = parse_verb();
      for (;;) {
        Term object = parse_object();
        graph_.insert(Triple{subject, verb, object});
        if (report_ != nullptr) ++report_->statements;
        skip_ws();
        if (!try_take(',')) break;
      }
      skip_ws();
      if (!try_take(';')) break;
      skip_ws();
      // A dangling ';' before '.' is allowed.
      if (peek() == '.') break;
    }
  }

  Graph& graph_;
  std::string_view text_;
  const ParseOptions& options_;
  ParseReport* report_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

void parse_turtle_subset_into(Graph& graph, std::string_view text,
                              const ParseOptions& options, ParseReport* report) {
  TurtleParser(graph, text, options, report).run();
}

Graph parse_turtle_subset(std::string_view text, const ParseOptions& options,
                          ParseReport* report) {
  Graph graph;
  parse_turtle_subset_into(graph, text, options, report);
  return graph;
}

}  // namespace onco::rdf

