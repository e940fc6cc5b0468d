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

#ifndef ONCOKG_RDF_TRIPLE_H_
#define ONCOKG_RDF_TRIPLE_H_

#include <string>

#include "onco/clock.hpp"
#include "onco/rdf/term.hpp"

namespace onco::rdf {

// One statement. The subject must be an IRI or blank node and the predicate
// an IRI; Graph::insert enforces both.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate &&
           object == other.object;
  }
  bool operator!=(const Triple& other) const { return !(*this == other); }

  // "<s> <p> <o> ." without the trailing newline.
  std::string text() const {
    return subject.canonical() + " " + predicate.canonical() + " " +
           object.canonical() + " .";
  }
};

// Canonical (subject, predicate, object) order on N-Triples text forms.
struct TripleOrder {
  bool operator()(const Triple& a, const Triple& b) const {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return a.object < b.object;
  }
};

// Where a triple came from: source document (or "seed"), which extractor
// asserted it, how confident it was, and when.
struct Provenance {
  std::string source;
  std::string extractor;
  double confidence = 1.0;
  TimePoint timestamp{};
};

}  // namespace onco::rdf

#endif  // ONCOKG_RDF_TRIPLE_H_
