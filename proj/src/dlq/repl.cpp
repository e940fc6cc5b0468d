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

#include "onco/dlq/repl.hpp"

#include <istream>
#include <ostream>

#include "onco/dlq/eval.hpp"
#include "onco/dlq/parse.hpp"
#include "onco/error.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/reason/explain.hpp"

namespace onco::dlq {

void run_query(const reason::SaturationResult& saturated, const std::string& query,
               std::ostream& out) {
  ClassExpression expr = parse(query, saturated.graph.prefixes());
  QueryResult result = evaluate(expr, saturated.graph);
  for (const auto& warning : result.warnings) {
    out << "# warning: " << warning << "\n";
  }
  for (const auto& individual : result.individuals) {
    out << saturated.graph.compact(individual) << "\n";
  }
  out << "count=" << result.individuals.size()
      << " elapsed_ms=" << (result.elapsed.count() / 1000.0)
      << " vacuous_only=" << result.vacuous_only << "\n";
}

namespace {

void explain_individual(const reason::SaturationResult& saturated,
                        const std::string& name, std::ostream& out, std::ostream& err) {
  rdf::Term subject = [&] {
    if (name.size() >= 2 && name.front() == '<' && name.back() == '>') {
      return rdf::Term::iri(name.substr(1, name.size() - 2));
    }
    auto colon = name.find(':');
    if (colon != std::string::npos) {
      auto it = saturated.graph.prefixes().find(name.substr(0, colon));
      if (it != saturated.graph.prefixes().end()) {
        return rdf::Term::iri(it->second + name.substr(colon + 1));
      }
    }
    return ontology::ono(name);
  }();
  auto types = saturated.graph.match(subject, ontology::rdf_type(), std::nullopt);
  if (types.empty()) {
    err << "error: no rdf:type triples for " << saturated.graph.compact(subject) << "\n";
    return;
  }
  for (const auto& t : types) {
    out << reason::render(reason::explain(saturated, t), saturated.graph);
  }
}

}  // namespace

int repl(const reason::SaturationResult& saturated, std::istream& in, std::ostream& out,
         std::ostream& err) {
  std::string line;
  while (std::getline(in, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed == ":quit" || trimmed == ":q") return 0;
    if (trimmed.rfind(":explain", 0) == 0) {
      std::string arg = trimmed.substr(8);
      std::size_t a = arg.find_first_not_of(" \t");
      if (a == std::string::npos) {
        err << "error: usage: :explain <name>\n";
        continue;
      }
      try {
        explain_individual(saturated, arg.substr(a), out, err);
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
      }
      continue;
    }
    try {
      run_query(saturated, trimmed, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace onco::dlq
