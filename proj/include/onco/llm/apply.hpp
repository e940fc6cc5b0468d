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

#ifndef ONCOKG_LLM_APPLY_H_
#define ONCOKG_LLM_APPLY_H_

#include <filesystem>
#include <string>

#include "onco/clock.hpp"
#include "onco/llm/triage.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::llm {

enum class Policy { kAcceptNew, kAcceptNewQueueConflicts, kDryRun };

Policy parse_policy(const std::string& token);
const char* to_string(Policy policy);

struct ApplyContext {
  std::string source;  // document id for provenance
  std::filesystem::path queue_path;
  std::filesystem::path audit_path;
  Clock clock = system_clock();
};

struct ApplyResult {
  std::size_t inserted = 0;
  std::size_t queued = 0;
};

// Policy-controlled application of a triage report. Accept policies insert
// the `fresh` set with extractor="llm" provenance; conflicts are never
// auto-applied — under every policy they land in the review queue
// (canonical N-Triples with `# reason:` comment lines). dry_run mutates
// nothing. Every decision, including rejects, is appended to the audit log
// as one JSON line {triple, verdict, reason, timestamp}.
ApplyResult apply(const DiffReport& diff, rdf::Graph& kg, Policy policy,
                  const ApplyContext& context);

}  // namespace onco::llm

#endif  // ONCOKG_LLM_APPLY_H_
