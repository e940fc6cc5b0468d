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

#include "onco/llm/response.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "onco/error.hpp"
#include "onco/llm/prompt.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/rdf/ntriples.hpp"

namespace onco::llm {

using rdf::Term;
using rdf::Triple;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Term> resolve_relation(const std::string& name) {
  for (const auto& accepted : accepted_relations()) {
    if (fold(name) == fold(accepted)) {
      if (accepted == "isA") return ontology::rdf_type();
      return ontology::ono(accepted);
    }
  }
  return std::nullopt;
}

bool relation_allowed(const Term& predicate) {
  if (predicate == ontology::rdf_type()) return true;
  for (const auto& accepted : accepted_relations()) {
    if (accepted != "isA" && predicate == ontology::ono(accepted)) return true;
  }
  return false;
}

// HIGH/MEDIUM/LOW and class names are vocabulary, not gazetteer surfaces.
std::optional<Term> resolve_vocabulary(const std::string& surface) {
  static const char* kNames[] = {"HIGH",      "MEDIUM",   "LOW",      "Biomarker",
                                 "Cancer",    "Disease",  "Feature",  "BiomarkerType",
                                 "Significance", "EvidenceSource"};
  for (const char* name : kNames) {
    if (fold(surface) == fold(name)) return ontology::ono(name);
  }
  return std::nullopt;
}

std::optional<Term> resolve_entity(const std::string& surface,
                                   const ontology::Gazetteer& gazetteer,
                                   const ResponseOptions& options) {
  auto candidates = gazetteer.lookup(surface);
  if (!candidates.empty()) {
    // Deterministic: highest prior, then category rank, then IRI (the
    // gazetteer pre-sorts exactly this way).
    return candidates.front().iri;
  }
  if (auto vocab = resolve_vocabulary(surface); vocab.has_value()) return vocab;
  if (options.mint_unknown) {
    std::string local;
    for (char c : surface) {
      local += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
    }
    return ontology::ono("minted/" + local);
  }
  return std::nullopt;
}

}  // namespace

ParsedResponse parse_response(const std::string& text, const rdf::Graph& kg,
                              const ontology::Gazetteer& gazetteer,
                              const ResponseOptions& options) {
  (void)kg;
  ParsedResponse out;
  std::set<std::string> seen;
  auto push = [&](Triple triple) {
    if (seen.insert(triple.text()).second) out.triples.push_back(std::move(triple));
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  std::string_view view = text;
  while (start <= view.size()) {
    std::size_t end = view.find('\n', start);
    std::string line = trim(end == std::string_view::npos
                                ? view.substr(start)
                                : view.substr(start, end - start));
    ++line_no;
    auto reject = [&](const std::string& reason) {
      out.rejects.push_back({line_no, line, reason});
    };

    if (!line.empty()) {
      if (line.front() == '<' || line.rfind("_:", 0) == 0) {
        // N-Triples line.
        try {
          rdf::Graph one = rdf::parse_ntriples(line);
          for (const auto& [triple, prov] : one.entries()) {
            if (!relation_allowed(triple.predicate)) {
              reject("unknown relation " + triple.predicate.canonical());
            } else {
              push(triple);
            }
          }
        } catch (const Error& e) {
          reject(std::string("bad N-Triples line: ") + e.what());
        }
      } else {
        std::vector<std::string> parts;
        std::size_t field_start = 0;
        for (;;) {
          std::size_t bar = line.find('|', field_start);
          if (bar == std::string::npos) {
            parts.push_back(trim(std::string_view(line).substr(field_start)));
            break;
          }
          parts.push_back(
              trim(std::string_view(line).substr(field_start, bar - field_start)));
          field_start = bar + 1;
        }
        if (parts.size() != 3) {
          reject("expected subject|relation|object");
        } else if (parts[0].empty() || parts[1].empty() || parts[2].empty()) {
          reject("empty field");
        } else {
          auto relation = resolve_relation(parts[1]);
          if (!relation.has_value()) {
            reject("unknown relation '" + parts[1] + "'");
          } else {
            auto subject = resolve_entity(parts[0], gazetteer, options);
            if (!subject.has_value()) {
              reject("unknown entity '" + parts[0] + "'");
            } else if (*relation == ontology::vocab::hasCitations()) {
              try {
                push({*subject, *relation, Term::integer(std::stoll(parts[2]))});
              } catch (...) {
                reject("hasCitations needs an integer, got '" + parts[2] + "'");
              }
            } else {
              auto object = resolve_entity(parts[2], gazetteer, options);
              if (!object.has_value()) {
                reject("unknown entity '" + parts[2] + "'");
              } else {
                push({*subject, *relation, *object});
              }
            }
          }
        }
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace onco::llm
