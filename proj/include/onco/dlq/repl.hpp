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

#ifndef ONCOKG_DLQ_REPL_H_
#define ONCOKG_DLQ_REPL_H_

#include <iosfwd>

#include "onco/reason/saturate.hpp"

namespace onco::dlq {

// One query per input line; prints the canonical result list, then
// `count=<n> elapsed_ms=<t> vacuous_only=<v>`. `:explain <name>` prints
// derivation trees for the rdf:type triples of that individual; `:quit`
// exits with code 0. Parse errors go to err and the loop continues.
int repl(const reason::SaturationResult& saturated, std::istream& in, std::ostream& out,
         std::ostream& err);

// One-shot query used by both the REPL and the CLI.
void run_query(const reason::SaturationResult& saturated, const std::string& query,
               std::ostream& out);

}  // namespace onco::dlq

#endif  // ONCOKG_DLQ_REPL_H_
