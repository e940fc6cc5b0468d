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

#ifndef ONCOKG_RDF_TERM_H_
#define ONCOKG_RDF_TERM_H_

#include <string>
#include <string_view>

namespace onco::rdf {

namespace xsd {
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
}  // namespace xsd

inline constexpr std::string_view kLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

enum class TermKind { kIri, kLiteral, kBlank };

// Immutable RDF term. The canonical N-Triples text form is computed once at
// construction and backs ordering, hashing and serialization, so graph
// content alone determines output bytes.
class Term {
 public:
  Term() : Term(TermKind::kLiteral, "", std::string(xsd::kString), "") {}

  // Factories validate their input and throw StructuralError on bad data.
  static Term iri(std::string text);
  static Term literal(std::string lexical, std::string datatype = "",
                      std::string language = "");
  static Term integer(long long value);
  static Term boolean(bool value);
  static Term blank(std::string label);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::kIri; }
  bool is_literal() const { return kind_ == TermKind::kLiteral; }
  bool is_blank() const { return kind_ == TermKind::kBlank; }

  // IRI text, lexical form, or blank label depending on kind.
  const std::string& value() const { return value_; }
  // Literals only; empty otherwise.
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  // N-Triples rendering: <iri>, _:label, "escaped" with optional @lang or
  // ^^<datatype>; xsd:string is left implicit.
  const std::string& canonical() const { return canonical_; }

  // For IRIs: the substring after the last '#' or '/', e.g. TP53.
  std::string local_name() const;

  bool operator==(const Term& other) const { return canonical_ == other.canonical_; }
  bool operator!=(const Term& other) const { return !(*this == other); }
  bool operator<(const Term& other) const { return canonical_ < other.canonical_; }

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language);

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string canonical_;
};

// Escapes a literal lexical form for N-Triples output.
std::string escape_literal(std::string_view raw);

bool is_valid_iri(std::string_view text);
bool is_valid_blank_label(std::string_view label);

struct TermHash {
  std::size_t operator()(const Term& t) const {
    return std::hash<std::string>()(t.canonical());
  }
};

}  // namespace onco::rdf

#endif  // ONCOKG_RDF_TERM_H_
