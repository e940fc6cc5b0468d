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

#ifndef ONCOKG_RDF_GRAPH_H_
#define ONCOKG_RDF_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "onco/rdf/triple.hpp"

namespace onco::rdf {

using PrefixMap = std::map<std::string, std::string>;

// In-memory triple set with subject/predicate/object indexes, optional
// per-triple provenance, and a prefix table.
//
// Threading: many concurrent readers or one writer; no internal locking,
// no background activity. Safe to move between threads.
class Graph {
 public:
  using Entries = std::map<Triple, std::optional<Provenance>, TripleOrder>;

  Graph() = default;
  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) = default;
  Graph& operator=(Graph&&) = default;

  // Returns true iff the triple was not previously present. Provenance is
  // first-writer-wins: a re-insert never overwrites it. Throws
  // StructuralError for a literal subject or non-IRI predicate.
  bool insert(const Triple& triple);
  bool insert(const Triple& triple, const Provenance& provenance);

  bool contains(const Triple& triple) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Triples matching all bound positions, in canonical order. std::nullopt
  // is a wildcard. Single-bound patterns go through an index.
  std::vector<Triple> match(const std::optional<Term>& subject,
                            const std::optional<Term>& predicate,
                            const std::optional<Term>& object) const;

  const Provenance* provenance(const Triple& triple) const;

  // True when the term occurs anywhere in the graph (any position).
  bool mentions(const Term& term) const;

  const Entries& entries() const { return entries_; }

  // Prefix labels map to exactly one namespace; re-registering a label with
  // a different namespace throws StructuralError.
  void register_prefix(const std::string& label, const std::string& ns);
  void register_prefixes(const PrefixMap& prefixes);
  const PrefixMap& prefixes() const { return prefixes_; }

  // "ono:TP53" when a registered prefix covers the IRI, else "<iri>".
  std::string compact(const Term& term) const;

  // Ingestion counters for the conciseness quality dimension.
  std::uint64_t insert_attempts() const { return insert_attempts_; }
  std::uint64_t duplicate_inserts() const { return duplicate_inserts_; }

 private:
  void index(const Triple* stored);
  void rebuild_indexes();

  struct PtrOrder {
    bool operator()(const Triple* a, const Triple* b) const {
      return TripleOrder()(*a, *b);
    }
  };
  using PtrSet = std::set<const Triple*, PtrOrder>;
  using Index = std::unordered_map<std::string, PtrSet>;

  Entries entries_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
  PrefixMap prefixes_;
  std::uint64_t insert_attempts_ = 0;
  std::uint64_t duplicate_inserts_ = 0;
};

}  // namespace onco::rdf

#endif  // ONCOKG_RDF_GRAPH_H_
