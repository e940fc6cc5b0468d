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

#ifndef ONCOKG_CLI_RUN_H_
#define ONCOKG_CLI_RUN_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace onco::cli {

// Pipeline configuration. Precedence: config file, overridden by flags,
// overridden by ONCOKG_* environment variables.
struct RunConfig {
  std::string seed = "data/seed";
  std::string kg = "kg.nt";
  std::string corpus = "data/corpus";
  std::string aliases;  // optional alias TSV
  std::string rules;    // optional user rule file
  std::string extractor = "builtin";  // builtin | subprocess:<cmd> | http:<url>
  std::string llm;                    // mock:<path> | http
  std::string out;                    // build/export target; defaults to kg
  std::string audit;                  // defaults to <kg>.audit.jsonl
  std::string queue;                  // defaults to <kg>.queue.nt
  std::string report = "quality.json";
  std::string policy = "accept_new";
  double theta_link = 0.5;
  double latency_budget_ms = 50.0;
  std::size_t jobs = 1;
  std::string fake_now;  // epoch seconds pinning the clock for replays
  bool strict = false;
  bool repl = false;
  std::string query;
};

// Subcommands: build, extract, refresh, reason, query, assess, export,
// stats. Exit codes: 0 success, 1 usage error, 2 data error, 3 consistency
// violations under `reason --strict`. Diagnostics go to err, data to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onco::cli

#endif  // ONCOKG_CLI_RUN_H_
