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

#include "onco/llm/prompt.hpp"

#include <algorithm>
#include <sstream>

#include "onco/error.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"

namespace onco::llm {

using rdf::Graph;
using rdf::Term;

const std::vector<std::string>& accepted_relations() {
  static const std::vector<std::string> relations = {
      "causes",        "hasType",        "hasEvidence",      "isA",
      "crossResponsibility", "hasSignificance", "evidenceType", "hasCitations",
      "hasBiomarkerType",    "forGene",        "forCancer",
  };
  return relations;
}

namespace {

constexpr std::string_view kTruncationMarker = "... [vocabulary truncated]";

std::string relation_line(const Graph& graph, const std::string& name) {
  Term prop = ontology::ono(name);
  std::string line = name;
  auto domains = graph.match(prop, ontology::rdfs_domain(), std::nullopt);
  auto ranges = graph.match(prop, ontology::rdfs_range(), std::nullopt);
  std::string domain = domains.empty() ? "Any" : domains.front().object.local_name();
  std::string range = ranges.empty() ? "Any" : ranges.front().object.local_name();
  if (name == "isA") {
    domain = "Any";
    range = "Class";
  }
  return line + " (" + domain + " -> " + range + ")";
}

std::string ontology_block_text(const Graph& graph) {
  std::ostringstream out;
  out << "Relations (use exactly these names):\n";
  for (const auto& name : accepted_relations()) {
    out << "  " << relation_line(graph, name) << "\n";
  }
  out << "Classes: Biomarker, Cancer, Disease, Feature, BiomarkerType "
         "(Oncogene, ProteinCoding, POTSF), Significance (HIGH, MEDIUM, LOW), "
         "EvidenceSource (PubMed, MeSH, CancerIndex)\n";

  std::vector<std::string> genes;
  for (const Term& gene : ontology::biomarker_instances(graph)) {
    genes.push_back(gene.local_name());
  }
  std::sort(genes.begin(), genes.end());
  out << "Biomarker instances:";
  for (const auto& g : genes) out << " " << g;
  out << "\n";

  std::vector<std::string> cancers;
  for (const auto& t :
       graph.match(std::nullopt, ontology::rdf_type(), ontology::vocab::Cancer())) {
    std::string entry = t.subject.local_name();
    auto labels = graph.match(t.subject, ontology::rdfs_label(), std::nullopt);
    if (!labels.empty() && labels.front().object.is_literal()) {
      entry += " (" + labels.front().object.value() + ")";
    }
    cancers.push_back(std::move(entry));
  }
  std::sort(cancers.begin(), cancers.end());
  out << "Cancer instances:";
  for (const auto& c : cancers) out << " " << c << ";";
  out << "\n";
  return out.str();
}

std::pair<std::string, std::vector<std::string>> worked_example() {
  return {
      "TP53 is responsible for a disease called Breast Cancer. TP53 has POTSF "
      "functionality, which is mentioned in numerous PubMed articles.",
      {"TP53|causes|Breast Cancer", "TP53|hasType|POTSF", "Breast Cancer|isA|Disease",
       "POTSF|hasEvidence|PubMed"}};
}

}  // namespace

std::string PromptInstance::render() const {
  std::ostringstream out;
  out << instruction << "\n\n" << ontology_block << "\n";
  for (const auto& [sentence, triples] : context_examples) {
    out << "Example text: " << sentence << "\nExample triples:\n";
    for (const auto& t : triples) out << t << "\n";
    out << "\n";
  }
  out << "Text:\n" << target_text << "\n";
  return out.str();
}

PromptInstance render_prompt(const Graph& ontology_graph, const std::string& text,
                             const PromptOptions& options) {
  if (text.empty()) throw StructuralError("render_prompt: target text is empty");

  PromptInstance prompt;
  prompt.instruction =
      "Extract biomedical facts from the text below. Use only the listed "
      "relations and entity names from the vocabulary. Output one triple per "
      "line in the form subject|relation|object and nothing else.";
  prompt.ontology_block = ontology_block_text(ontology_graph);
  if (options.include_worked_example) {
    prompt.context_examples.push_back(worked_example());
  }
  prompt.target_text = text;

  // Budget: drop the example first, then truncate the vocabulary roster.
  // Instruction and target text always survive.
  if (prompt.render().size() > options.max_chars && !prompt.context_examples.empty()) {
    prompt.context_examples.clear();
  }
  if (prompt.render().size() > options.max_chars) {
    std::size_t fixed = prompt.render().size() - prompt.ontology_block.size();
    std::size_t budget =
        options.max_chars > fixed + kTruncationMarker.size() + 1
            ? options.max_chars - fixed - kTruncationMarker.size() - 1
            : 0;
    prompt.ontology_block =
        prompt.ontology_block.substr(0, budget) + std::string(kTruncationMarker) + "\n";
  }
  return prompt;
}

}  // namespace onco::llm
