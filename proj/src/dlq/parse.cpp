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

#include "onco/dlq/parse.hpp"

#include <cctype>

#include "onco/error.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::dlq {

using rdf::Term;

namespace {

struct Token {
  enum class Kind { kName, kAnd, kSome, kOnly, kValue, kEnd };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) return {Token::Kind::kEnd, "", pos_};
    std::size_t start = pos_;
    if (text_[pos_] == '<') {
      std::string out;
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '>') out += text_[pos_++];
      if (pos_ >= text_.size()) throw ParseError("unterminated <iri>", 1, start + 1);
      ++pos_;
      return {Token::Kind::kName, "<" + out + ">", start};
    }
    std::string word;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      word += text_[pos_++];
    }
    std::string folded = lower(word);
    if (folded == "and") return {Token::Kind::kAnd, word, start};
    if (folded == "some") return {Token::Kind::kSome, word, start};
    if (folded == "only") return {Token::Kind::kOnly, word, start};
    if (folded == "value") return {Token::Kind::kValue, word, start};
    return {Token::Kind::kName, word, start};
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Term resolve_name(const Token& token, const rdf::PrefixMap& prefixes) {
  const std::string& text = token.text;
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    return Term::iri(text.substr(1, text.size() - 2));
  }
  if (lower(text) == "isa") return ontology::rdf_type();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string prefix = text.substr(0, colon);
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) {
      throw ParseError("unknown prefix '" + prefix + ":'", 1, token.offset + 1);
    }
    return Term::iri(it->second + text.substr(colon + 1));
  }
  // Bare names live under the project namespace.
  return ontology::ono(text);
}

}  // namespace

ClassExpression parse(std::string_view text, const rdf::PrefixMap& prefixes) {
  Lexer lexer(text);
  Token token = lexer.next();
  if (token.kind == Token::Kind::kEnd) throw ParseError("empty query", 1, 1);

  std::vector<ClassExpression> terms;
  for (;;) {
    if (token.kind != Token::Kind::kName) {
      throw ParseError("expected a name, got '" + token.text + "'", 1, token.offset + 1);
    }
    Token name = token;
    token = lexer.next();
    if (token.kind == Token::Kind::kSome || token.kind == Token::Kind::kOnly ||
        token.kind == Token::Kind::kValue) {
      Token::Kind restriction = token.kind;
      Token filler = lexer.next();
      if (filler.kind != Token::Kind::kName) {
        throw ParseError("expected a filler name after '" + token.text + "'", 1,
                         filler.offset + 1);
      }
      ClassExpression::Kind kind = ClassExpression::Kind::kSome;
      if (restriction == Token::Kind::kOnly) kind = ClassExpression::Kind::kOnly;
      if (restriction == Token::Kind::kValue) kind = ClassExpression::Kind::kValue;
      terms.push_back(ClassExpression::restriction(kind, resolve_name(name, prefixes),
                                                   resolve_name(filler, prefixes)));
      token = lexer.next();
    } else {
      terms.push_back(ClassExpression::atom(resolve_name(name, prefixes)));
    }
    if (token.kind == Token::Kind::kEnd) break;
    if (token.kind != Token::Kind::kAnd) {
      throw ParseError("expected 'and', got '" + token.text + "'", 1, token.offset + 1);
    }
    token = lexer.next();
    if (token.kind == Token::Kind::kEnd) {
      throw ParseError("dangling 'and'", 1, token.offset + 1);
    }
  }
  if (terms.size() == 1) return terms.front();
  return ClassExpression::conjunction(std::move(terms));
}

std::string to_string(const ClassExpression& expr) {
  using Kind = ClassExpression::Kind;
  switch (expr.kind) {
    case Kind::kAtom:
      return expr.name.canonical();
    case Kind::kSome:
      return expr.name.canonical() + " some " + expr.filler.canonical();
    case Kind::kOnly:
      return expr.name.canonical() + " only " + expr.filler.canonical();
    case Kind::kValue:
      return expr.name.canonical() + " value " + expr.filler.canonical();
    case Kind::kAnd: {
      std::string out;
      for (std::size_t i = 0; i < expr.children.size(); ++i) {
        if (i > 0) out += " and ";
        out += to_string(expr.children[i]);
      }
      return out;
    }
  }
  return "";
}

}  // namespace onco::dlq
