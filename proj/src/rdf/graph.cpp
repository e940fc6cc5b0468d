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

#include "onco/rdf/graph.hpp"

#include "onco/error.hpp"

namespace onco::rdf {

Graph::Graph(const Graph& other)
    : entries_(other.entries_),
      prefixes_(other.prefixes_),
      insert_attempts_(other.insert_attempts_),
      duplicate_inserts_(other.duplicate_inserts_) {
  rebuild_indexes();
}

Graph& Graph::operator=(const Graph& other) {
  if (this == &other) return *this;
  entries_ = other.entries_;
  prefixes_ = other.prefixes_;
  insert_attempts_ = other.insert_attempts_;
  duplicate_inserts_ = other.duplicate_inserts_;
  rebuild_indexes();
  return *this;
}

void Graph::index(const Triple* stored) {
  by_subject_[stored->subject.canonical()].insert(stored);
  by_predicate_[stored->predicate.canonical()].insert(stored);
  by_object_[stored->object.canonical()].insert(stored);
}

void Graph::rebuild_indexes() {
  by_subject_.clear();
  by_predicate_.clear();
  by_object_.clear();
  for (const auto& [triple, prov] : entries_) {
    index(&triple);
  }
}

bool Graph::insert(const Triple& triple) {
  if (triple.subject.is_literal()) {
    throw StructuralError("triple subject must not be a literal: " + triple.text());
  }
  if (!triple.predicate.is_iri()) {
    throw StructuralError("triple predicate must be an IRI: " + triple.text());
  }
  ++insert_attempts_;
  auto [it, inserted] = entries_.try_emplace(triple, std::nullopt);
  if (inserted) {
    index(&it->first);
  } else {
    ++duplicate_inserts_;
  }
  return inserted;
}

bool Graph::insert(const Triple& triple, const Provenance& provenance) {
  bool inserted = insert(triple);
  if (inserted) {
    entries_.find(triple)->second = provenance;
  }
  return inserted;
}

bool Graph::contains(const Triple& triple) const {
  return entries_.find(triple) != entries_.end();
}

bool Graph::mentions(const Term& term) const {
  const std::string& key = term.canonical();
  return by_subject_.count(key) > 0 || by_predicate_.count(key) > 0 ||
         by_object_.count(key) > 0;
}

const Provenance* Graph::provenance(const Triple& triple) const {
  auto it = entries_.find(triple);
  if (it == entries_.end() || !it->second.has_value()) return nullptr;
  return &*it->second;
}

std::vector<Triple> Graph::match(const std::optional<Term>& subject,
                                 const std::optional<Term>& predicate,
                                 const std::optional<Term>& object) const {
  std::vector<Triple> out;
  auto keep = [&](const Triple& t) {
    if (subject && t.subject != *subject) return false;
    if (predicate && t.predicate != *predicate) return false;
    if (object && t.object != *object) return false;
    return true;
  };
  const PtrSet* bucket = nullptr;
  if (subject) {
    auto it = by_subject_.find(subject->canonical());
    if (it == by_subject_.end()) return out;
    bucket = &it->second;
  } else if (object) {
    auto it = by_object_.find(object->canonical());
    if (it == by_object_.end()) return out;
    bucket = &it->second;
  } else if (predicate) {
    auto it = by_predicate_.find(predicate->canonical());
    if (it == by_predicate_.end()) return out;
    bucket = &it->second;
  }
  if (bucket != nullptr) {
    for (const Triple* t : *bucket) {
      if (keep(*t)) out.push_back(*t);
    }
    return out;
  }
  for (const auto& [triple, prov] : entries_) {
    out.push_back(triple);
  }
  return out;
}

void Graph::register_prefix(const std::string& label, const std::string& ns) {
  auto it = prefixes_.find(label);
  if (it != prefixes_.end() && it->second != ns) {
    throw StructuralError("prefix '" + label + "' already bound to <" + it->second +
                          ">, cannot rebind to <" + ns + ">");
  }
  prefixes_[label] = ns;
}

void Graph::register_prefixes(const PrefixMap& prefixes) {
  for (const auto& [label, ns] : prefixes) {
    register_prefix(label, ns);
  }
}

std::string Graph::compact(const Term& term) const {
  if (!term.is_iri()) return term.canonical();
  const std::string& iri = term.value();
  std::string best_label;
  std::size_t best_len = 0;
  for (const auto& [label, ns] : prefixes_) {
    if (ns.size() > best_len && iri.size() > ns.size() &&
        iri.compare(0, ns.size(), ns) == 0) {
      best_label = label;
      best_len = ns.size();
    }
  }
  if (best_len == 0) return term.canonical();
  return best_label + ":" + iri.substr(best_len);
}

}  // namespace onco::rdf
