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

#ifndef ONCOKG_LLM_TRIAGE_H_
#define ONCOKG_LLM_TRIAGE_H_

#include <string>
#include <vector>

#include "onco/llm/response.hpp"
#include "onco/reason/consistency.hpp"
#include "onco/reason/saturate.hpp"

namespace onco::llm {

struct Verdict {
  rdf::Triple triple;
  std::string reason;
};

// Partition of the parsed triples: every triple lands in exactly one set.
// Rejected response lines ride along for the audit trail but are not part
// of the partition.
struct DiffReport {
  std::vector<Verdict> fresh;        // valid, absent from the KG
  std::vector<Verdict> confirmed;    // already present, asserted or inferred
  std::vector<Verdict> conflicting;  // insertion would violate a key/disjointness
  std::vector<Verdict> invalid;      // domain/range violations
  std::vector<Reject> rejects;

  std::size_t partition_size() const {
    return fresh.size() + confirmed.size() + conflicting.size() + invalid.size();
  }
};

// Triage against the saturated KG:
//   invalid     subject/object fails a declared domain/range check
//   confirmed   present in the saturated graph
//   conflicting trial insertion + saturation on a scratch copy produces a
//               new FunctionalKey or Disjoint violation
//   fresh       everything else
// Each triple is checked independently against the same base.
DiffReport triage(const ParsedResponse& parsed, const reason::SaturationResult& base,
                  const std::vector<reason::Rule>& user_rules);

}  // namespace onco::llm

#endif  // ONCOKG_LLM_TRIAGE_H_
