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

#ifndef ONCOKG_LLM_PROMPT_H_
#define ONCOKG_LLM_PROMPT_H_

#include <string>
#include <utility>
#include <vector>

#include "onco/rdf/graph.hpp"

namespace onco::llm {

struct PromptOptions {
  std::size_t max_chars = 8000;
  bool include_worked_example = true;
};

// Ontology-guided extraction prompt. The ontology block lists every
// relation the response parser accepts (with domain/range) plus the class
// and instance vocabulary; rendering is deterministic, and when the budget
// is exceeded the vocabulary roster is truncated (with a marker) while the
// instruction and target text stay intact.
struct PromptInstance {
  std::string instruction;
  std::string ontology_block;
  std::vector<std::pair<std::string, std::vector<std::string>>> context_examples;
  std::string target_text;

  std::string render() const;
};

// Throws StructuralError when text is empty.
PromptInstance render_prompt(const rdf::Graph& ontology_graph, const std::string& text,
                             const PromptOptions& options = {});

// Relation names accepted on response lines, in prompt order.
const std::vector<std::string>& accepted_relations();

}  // namespace onco::llm

#endif  // ONCOKG_LLM_PROMPT_H_
