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

#include "onco/extract/pipeline.hpp"

#include <algorithm>
#include <future>

#include "onco/error.hpp"
#include "onco/extract/emit.hpp"
#include "onco/extract/recognize.hpp"
#include "onco/extract/relations.hpp"
#include "onco/extract/segment.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::extract {

namespace {

struct DocWork {
  DocumentReport report;
  std::vector<Sentence> sentences;
  std::vector<Mention> mentions;
  std::vector<RelationCandidate> candidates;
};

rdf::Term relation_from_name(const std::string& name) {
  namespace v = ontology::vocab;
  if (name == "causes") return v::causes();
  if (name == "hasType") return v::hasType();
  if (name == "hasEvidence") return v::hasEvidence();
  if (name == "isA") return ontology::rdf_type();
  if (name == "crossResponsibility") return v::crossResponsibility();
  return ontology::ono(name);
}

// Builds mentions from a wire response; spans index into sentence text.
std::vector<Mention> wire_mentions(const Document& doc,
                                   const std::vector<Sentence>& sentences,
                                   const ExtractorResponse& response,
                                   const ontology::Gazetteer& gazetteer,
                                   std::vector<std::string>& errors) {
  std::vector<Mention> out;
  for (const WireMention& wm : response.mentions) {
    if (wm.sentence_index >= sentences.size()) {
      errors.push_back("mention with out-of-range sentence index");
      continue;
    }
    const Sentence& sentence = sentences[wm.sentence_index];
    if (wm.end > sentence.text.size()) {
      errors.push_back("mention span outside sentence bounds");
      continue;
    }
    Mention mention;
    mention.doc_id = doc.id;
    mention.sentence_index = wm.sentence_index;
    mention.begin = wm.begin;
    mention.end = wm.end;
    mention.surface = sentence.text.substr(wm.begin, wm.end - wm.begin);
    mention.tags = normalize_wire_tags(wm.tags);
    // Wire candidates carry category probabilities; candidate IRIs come
    // from the gazetteer for the surface.
    auto gaz_candidates = gazetteer.lookup(mention.surface);
    for (const auto& [category_name, score] : wm.candidates) {
      Category category;
      try {
        category = ontology::parse_category(category_name);
      } catch (const Error&) {
        errors.push_back("unknown category '" + category_name + "' from extractor");
        continue;
      }
      bool found = false;
      for (const auto& entry : gaz_candidates) {
        if (entry.category == category) {
          mention.candidates.push_back({entry.iri, category, score, entry.is_class});
          found = true;
        }
      }
      if (!found) {
        // Keep the category signal; linking will leave it unresolved.
        mention.candidates.push_back(
            {ontology::ono("unresolved/" + mention.surface), category, score, false});
      }
    }
    if (!mention.candidates.empty()) out.push_back(std::move(mention));
  }
  return out;
}

DocWork analyze(const Document& doc, const ontology::Gazetteer& gazetteer,
                const rdf::Graph& kg, const PipelineOptions& options,
                ExternalExtractor* external) {
  DocWork work;
  work.report.doc_id = doc.id;
  work.sentences = segment(doc);

  std::optional<ExtractorResponse> response;
  if (external != nullptr) {
    std::string error;
    response = external->extract(doc, work.sentences, &error);
    if (!response.has_value()) {
      work.report.errors.push_back(error + "; falling back to built-in extractor");
    }
  }

  if (response.has_value()) {
    work.mentions = wire_mentions(doc, work.sentences, *response, gazetteer,
                                  work.report.errors);
  } else {
    work.mentions = recognize(doc.id, work.sentences, gazetteer);
  }
  for (Mention& mention : work.mentions) {
    mention = resolve_types(std::move(mention));
  }
  work.report.mentions = work.mentions.size();

  std::vector<LinkedEntity> entities =
      link(work.mentions, work.sentences, kg, options.theta_link, &work.report.link_report);
  normalize(entities, kg, &work.report.link_report);
  for (const auto& entity : entities) {
    if (entity.iri.has_value()) ++work.report.linked;
  }

  // Relations: pass scores through from the wire, or run the pattern
  // classifier per sentence.
  if (response.has_value() && !response->relations.empty()) {
    for (const WireRelation& wr : response->relations) {
      const LinkedEntity* subject = nullptr;
      const LinkedEntity* object = nullptr;
      for (const auto& entity : entities) {
        if (entity.mention.sentence_index != wr.sentence_index) continue;
        if (entity.mention.begin == wr.subj_span.first &&
            entity.mention.end == wr.subj_span.second) {
          subject = &entity;
        }
        if (entity.mention.begin == wr.obj_span.first &&
            entity.mention.end == wr.obj_span.second) {
          object = &entity;
        }
      }
      if (subject == nullptr || object == nullptr || !subject->iri.has_value() ||
          !object->iri.has_value()) {
        work.report.errors.push_back("relation references unlinked or unknown span");
        continue;
      }
      RelationCandidate candidate;
      candidate.doc_id = doc.id;
      candidate.sentence_index = wr.sentence_index;
      candidate.subject = *subject;
      candidate.object = *object;
      candidate.relation = relation_from_name(wr.relation);
      candidate.score = wr.score;
      if (wr.sentence_index < work.sentences.size()) {
        candidate.anonymized_sentence =
            anonymize_pairing(work.sentences[wr.sentence_index], *subject, *object);
      }
      work.candidates.push_back(std::move(candidate));
    }
  } else {
    std::vector<std::vector<const LinkedEntity*>> by_sentence(work.sentences.size());
    for (const Sentence& sentence : work.sentences) {
      std::vector<LinkedEntity> in_sentence;
      for (const auto& entity : entities) {
        if (entity.mention.sentence_index == sentence.index) in_sentence.push_back(entity);
      }
      auto found = extract_relations(doc.id, sentence, in_sentence);
      work.candidates.insert(work.candidates.end(), found.begin(), found.end());
    }
  }
  work.report.candidates = work.candidates.size();
  return work;
}

}  // namespace

ExtractionResult run_extraction(rdf::Graph& kg, const std::vector<Document>& corpus,
                                const ontology::Gazetteer& gazetteer,
                                const PipelineOptions& options, const Clock& clock) {
  std::vector<Document> docs = corpus;
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });

  std::unique_ptr<ExternalExtractor> external;
  std::string extractor_name = "lexicon";
  if (options.mode == ExtractorMode::kSubprocess) {
    external = make_subprocess_extractor(options.extractor_target);
    extractor_name = "external";
  } else if (options.mode == ExtractorMode::kHttp) {
    external = make_http_extractor(options.extractor_target);
    extractor_name = "external";
  }

  std::vector<DocWork> works(docs.size());
  if (options.jobs > 1 && external == nullptr && docs.size() > 1) {
    // Analysis is pure; fan out, then emit in document order below.
    std::size_t next = 0;
    while (next < docs.size()) {
      std::size_t batch = std::min(options.jobs, docs.size() - next);
      std::vector<std::future<DocWork>> futures;
      for (std::size_t k = 0; k < batch; ++k) {
        const Document& doc = docs[next + k];
        futures.push_back(std::async(std::launch::async, [&doc, &gazetteer, &kg, &options] {
          return analyze(doc, gazetteer, kg, options, nullptr);
        }));
      }
      for (std::size_t k = 0; k < batch; ++k) {
        works[next + k] = futures[k].get();
      }
      next += batch;
    }
  } else {
    // The subprocess pipe is a serial channel, so external mode stays
    // sequential.
    for (std::size_t i = 0; i < docs.size(); ++i) {
      works[i] = analyze(docs[i], gazetteer, kg, options, external.get());
    }
  }

  ExtractionResult result;
  for (DocWork& work : works) {
    EmitResult emitted = emit_triples(work.candidates, kg, extractor_name, clock);
    work.report.inserted = emitted.inserted;
    work.report.duplicates = emitted.duplicates;
    result.inserted_total += emitted.inserted;
    result.duplicate_total += emitted.duplicates;
    result.mentions.insert(result.mentions.end(), work.mentions.begin(),
                           work.mentions.end());
    result.sentences_by_doc[work.report.doc_id] = std::move(work.sentences);
    result.docs.push_back(std::move(work.report));
  }
  return result;
}

}  // namespace onco::extract
