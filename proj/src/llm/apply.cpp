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

#include "onco/llm/apply.hpp"

#include <fstream>

#include <json.hpp>

#include "onco/error.hpp"

namespace onco::llm {

Policy parse_policy(const std::string& token) {
  if (token == "accept_new") return Policy::kAcceptNew;
  if (token == "accept_new_and_queue_conflicts") return Policy::kAcceptNewQueueConflicts;
  if (token == "dry_run") return Policy::kDryRun;
  throw ConfigError("unknown policy '" + token +
                    "' (accept_new, accept_new_and_queue_conflicts, dry_run)");
}

const char* to_string(Policy policy) {
  switch (policy) {
    case Policy::kAcceptNew: return "accept_new";
    case Policy::kAcceptNewQueueConflicts: return "accept_new_and_queue_conflicts";
    case Policy::kDryRun: return "dry_run";
  }
  return "";
}

namespace {

class AuditLog {
 public:
  AuditLog(const std::filesystem::path& path, const Clock& clock)
      : out_(path, std::ios::binary | std::ios::app), clock_(clock) {
    if (!out_) throw Error("cannot open audit log " + path.string());
  }

  void record(const std::string& item, const std::string& verdict,
              const std::string& reason) {
    nlohmann::ordered_json entry;
    entry["triple"] = item;
    entry["verdict"] = verdict;
    entry["reason"] = reason;
    entry["timestamp"] = format_utc(clock_());
    out_ << entry.dump() << "\n";
  }

 private:
  std::ofstream out_;
  const Clock& clock_;
};

}  // namespace

ApplyResult apply(const DiffReport& diff, rdf::Graph& kg, Policy policy,
                  const ApplyContext& context) {
  ApplyResult result;
  AuditLog audit(context.audit_path, context.clock);

  bool mutate = policy != Policy::kDryRun;
  for (const Verdict& verdict : diff.fresh) {
    std::string decision = "skipped (dry_run)";
    if (mutate) {
      rdf::Provenance prov{context.source, "llm", 1.0, context.clock()};
      decision = kg.insert(verdict.triple, prov) ? "inserted" : "already present";
      ++result.inserted;
    }
    audit.record(verdict.triple.text(), "new", decision);
  }
  for (const Verdict& verdict : diff.confirmed) {
    audit.record(verdict.triple.text(), "confirmed", verdict.reason);
  }
  if (!diff.conflicting.empty()) {
    // Conflicts are never auto-applied; they go to review under any policy.
    std::ofstream queue(context.queue_path, std::ios::binary | std::ios::app);
    if (!queue) throw Error("cannot open review queue " + context.queue_path.string());
    for (const Verdict& verdict : diff.conflicting) {
      queue << "# reason: " << verdict.reason << "\n" << verdict.triple.text() << "\n";
      audit.record(verdict.triple.text(), "conflicting", verdict.reason + "; queued");
      ++result.queued;
    }
  }
  for (const Verdict& verdict : diff.invalid) {
    audit.record(verdict.triple.text(), "invalid", verdict.reason);
  }
  for (const Reject& reject : diff.rejects) {
    audit.record(reject.text, "rejected", reject.reason);
  }
  return result;
}

}  // namespace onco::llm
