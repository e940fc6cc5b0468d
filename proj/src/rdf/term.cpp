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

#include "onco/rdf/term.hpp"

#include <cctype>
#include <cstdio>

#include "onco/error.hpp"

namespace onco::rdf {

namespace {

bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

bool is_valid_language(std::string_view lang) {
  if (lang.empty()) return false;
  bool in_first = true;
  bool any = false;
  for (char c : lang) {
    if (c == '-') {
      if (!any) return false;
      in_first = false;
      any = false;
      continue;
    }
    bool ok = in_first ? std::isalpha(static_cast<unsigned char>(c)) != 0
                       : std::isalnum(static_cast<unsigned char>(c)) != 0;
    if (!ok) return false;
    any = true;
  }
  return any;
}

}  // namespace

bool is_valid_iri(std::string_view text) {
  if (text.empty()) return false;
  // Absolute: must start with a scheme.
  if (!is_scheme_start(text[0])) return false;
  std::size_t colon = std::string_view::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] == ':') {
      colon = i;
      break;
    }
    if (!is_scheme_char(text[i])) break;
  }
  if (colon == std::string_view::npos) return false;
  for (unsigned char c : text) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
        c == '|' || c == '^' || c == '`' || c == '\\') {
      return false;
    }
  }
  return true;
}

bool is_valid_blank_label(std::string_view label) {
  if (label.empty()) return false;
  auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  };
  char first = label.front();
  if (!(std::isalnum(static_cast<unsigned char>(first)) || first == '_')) return false;
  if (label.back() == '.') return false;
  for (char c : label) {
    if (!name_char(c)) return false;
  }
  return true;
}

std::string escape_literal(std::string_view raw) {
  std::string out;
  out.reserve(raw.size() + 8);
  for (unsigned char c : raw) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

Term::Term(TermKind kind, std::string value, std::string datatype, std::string language)
    : kind_(kind),
      value_(std::move(value)),
      datatype_(std::move(datatype)),
      language_(std::move(language)) {
  switch (kind_) {
    case TermKind::kIri:
      canonical_ = "<" + value_ + ">";
      break;
    case TermKind::kBlank:
      canonical_ = "_:" + value_;
      break;
    case TermKind::kLiteral:
      canonical_ = "\"" + escape_literal(value_) + "\"";
      if (!language_.empty()) {
        canonical_ += "@" + language_;
      } else if (datatype_ != xsd::kString) {
        canonical_ += "^^<" + datatype_ + ">";
      }
      break;
  }
}

Term Term::iri(std::string text) {
  if (!is_valid_iri(text)) {
    throw StructuralError("malformed IRI (must be absolute, no whitespace or brackets): '" +
                          text + "'");
  }
  return Term(TermKind::kIri, std::move(text), "", "");
}

Term Term::literal(std::string lexical, std::string datatype, std::string language) {
  if (!language.empty()) {
    if (!is_valid_language(language)) {
      throw StructuralError("malformed language tag: '" + language + "'");
    }
    // A language tag implies rdf:langString.
    datatype = std::string(kLangString);
  } else if (datatype.empty()) {
    datatype = std::string(xsd::kString);
  } else if (!is_valid_iri(datatype)) {
    throw StructuralError("malformed datatype IRI: '" + datatype + "'");
  }
  return Term(TermKind::kLiteral, std::move(lexical), std::move(datatype),
              std::move(language));
}

Term Term::integer(long long value) {
  return literal(std::to_string(value), std::string(xsd::kInteger));
}

Term Term::boolean(bool value) {
  return literal(value ? "true" : "false", std::string(xsd::kBoolean));
}

Term Term::blank(std::string label) {
  if (!is_valid_blank_label(label)) {
    throw StructuralError("malformed blank node label: '" + label + "'");
  }
  return Term(TermKind::kBlank, std::move(label), "", "");
}

std::string Term::local_name() const {
  if (kind_ != TermKind::kIri) return value_;
  std::size_t pos = value_.find_last_of("#/");
  if (pos == std::string::npos || pos + 1 >= value_.size()) return value_;
  return value_.substr(pos + 1);
}

}  // namespace onco::rdf
