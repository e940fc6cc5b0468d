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

#include "onco/extract/link.hpp"

#include <cctype>
#include <set>

#include "onco/extract/segment.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::extract {

using rdf::Graph;
using rdf::Term;

namespace {

std::string fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Folded word tokens of the sentence, minus the mention's own span.
std::set<std::string> context_tokens(const Sentence& sentence, const Mention& mention) {
  std::set<std::string> out;
  for (const TokenSpan& token : sentence.tokens) {
    if (token.begin >= mention.begin && token.end <= mention.end) continue;
    out.insert(fold(std::string_view(sentence.text).substr(token.begin,
                                                           token.end - token.begin)));
  }
  return out;
}

void add_label_tokens(const Term& term, const Graph& graph, std::set<std::string>& out) {
  if (term.is_literal()) {
    for (const TokenSpan& span : tokenize(term.value())) {
      out.insert(fold(std::string_view(term.value()).substr(span.begin,
                                                            span.end - span.begin)));
    }
    return;
  }
  std::string local = term.local_name();
  for (const TokenSpan& span : tokenize(local)) {
    out.insert(fold(std::string_view(local).substr(span.begin, span.end - span.begin)));
  }
  for (const auto& t : graph.match(term, ontology::rdfs_label(), std::nullopt)) {
    if (t.object.is_literal()) {
      for (const TokenSpan& span : tokenize(t.object.value())) {
        out.insert(fold(std::string_view(t.object.value())
                            .substr(span.begin, span.end - span.begin)));
      }
    }
  }
}

// Folded token set of everything adjacent to the candidate in the KG.
std::set<std::string> neighbor_labels(const Term& candidate, const Graph& graph) {
  std::set<std::string> out;
  for (const auto& t : graph.match(candidate, std::nullopt, std::nullopt)) {
    add_label_tokens(t.object, graph, out);
  }
  for (const auto& t : graph.match(std::nullopt, std::nullopt, candidate)) {
    add_label_tokens(t.subject, graph, out);
  }
  return out;
}

}  // namespace

std::vector<LinkedEntity> link(const std::vector<Mention>& mentions,
                               const std::vector<Sentence>& sentences,
                               const Graph& graph, double theta_link,
                               LinkReport* report) {
  std::vector<LinkedEntity> out;
  for (const Mention& mention : mentions) {
    LinkedEntity entity;
    entity.mention = mention;
    entity.category = mention.resolved.value_or(Category::kGene);

    // Candidates in the resolved category only.
    std::vector<MentionCandidate> pool;
    for (const MentionCandidate& c : mention.candidates) {
      if (!mention.resolved.has_value() || c.category == *mention.resolved) {
        pool.push_back(c);
      }
    }

    if (pool.empty()) {
      entity.link_score = 0.0;
    } else if (pool.size() == 1) {
      entity.iri = pool.front().iri;
      entity.is_class = pool.front().is_class;
      entity.link_score = pool.front().score;
    } else {
      const Sentence& sentence = sentences.at(mention.sentence_index);
      std::set<std::string> context = context_tokens(sentence, mention);
      const MentionCandidate* best = nullptr;
      double best_score = -1.0;
      for (const MentionCandidate& c : pool) {
        std::set<std::string> neighbors = neighbor_labels(c.iri, graph);
        std::size_t overlap = 0;
        for (const auto& token : context) {
          if (neighbors.count(token) > 0) ++overlap;
        }
        double context_overlap = (1.0 + static_cast<double>(overlap)) /
                                 (1.0 + static_cast<double>(context.size()));
        double score = c.score * context_overlap;
        if (score > best_score ||
            (score == best_score && best != nullptr && c.iri < best->iri)) {
          best = &c;
          best_score = score;
        }
      }
      entity.link_score = best_score;
      if (best_score >= theta_link) {
        entity.iri = best->iri;
        entity.is_class = best->is_class;
      }
    }

    if (!entity.iri.has_value() && !pool.empty() && report != nullptr) {
      report->unlinked.push_back(mention.surface + " (score=" +
                                 std::to_string(entity.link_score) + ")");
    }
    // Unlinked mentions carry no normalized id by construction.
    out.push_back(std::move(entity));
  }
  return out;
}

void normalize(std::vector<LinkedEntity>& entities, const Graph& graph,
               LinkReport* report) {
  for (LinkedEntity& entity : entities) {
    if (!entity.iri.has_value()) continue;
    std::string_view wanted_ns;
    std::string prefix;
    if (entity.category == Category::kGene) {
      wanted_ns = ontology::ns::kNcbiGene;
      prefix = "ncbigene:";
    } else if (entity.category == Category::kDisease) {
      wanted_ns = ontology::ns::kDoid;
      prefix = "DOID:";
    } else {
      continue;
    }
    std::optional<std::string> id;
    for (const auto& t : graph.match(*entity.iri, ontology::rdfs_see_also(), std::nullopt)) {
      if (!t.object.is_iri()) continue;
      const std::string& iri = t.object.value();
      if (iri.compare(0, wanted_ns.size(), wanted_ns) == 0) {
        std::string candidate = prefix + iri.substr(wanted_ns.size());
        if (!id.has_value() || candidate < *id) id = candidate;
      }
    }
    entity.normalized_id = id;
    if (!id.has_value() && report != nullptr) {
      report->missing_mappings.push_back(graph.compact(*entity.iri));
    }
  }
}

}  // namespace onco::extract
