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

#include "onco/quality/assess.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "onco/dlq/eval.hpp"
#include "onco/dlq/parse.hpp"
#include "onco/ontology/seed.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/reason/saturate.hpp"

namespace onco::quality {

using rdf::Graph;
using rdf::Term;

namespace {

constexpr const char* kHeader =
    "metric definitions are oncokg's own formulas (see README), not an external standard";

bool registered_namespace(const std::string& iri, const rdf::PrefixMap& prefixes) {
  for (const auto& [label, ns] : prefixes) {
    if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) return true;
  }
  return false;
}

bool external_namespace(const std::string& iri) {
  using namespace ontology;
  for (std::string_view internal : {ns::kOno, ns::kRdf, ns::kRdfs, ns::kXsd, ns::kOwl}) {
    if (iri.compare(0, internal.size(), internal) == 0) return false;
  }
  return true;
}

std::string fold(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool trusted_source(const std::string& source, const std::vector<std::string>& trusted) {
  std::string folded = fold(source);
  for (const auto& t : trusted) {
    std::string ft = fold(t);
    if (folded == ft) return true;
    // Document ids such as pubmed_0001.txt count toward their source.
    if (folded.size() > ft.size() && folded.compare(0, ft.size(), ft) == 0 &&
        !std::isalnum(static_cast<unsigned char>(folded[ft.size()]))) {
      return true;
    }
  }
  return false;
}

double availability(const Graph& graph, std::vector<std::string>& details) {
  std::set<std::string> iris;
  for (const auto& [t, prov] : graph.entries()) {
    for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
      if (term->is_iri()) iris.insert(term->value());
    }
  }
  if (iris.empty()) return 0.0;
  std::size_t good = 0;
  for (const auto& iri : iris) {
    if (registered_namespace(iri, graph.prefixes())) {
      ++good;
    } else {
      details.push_back("unregistered namespace: <" + iri + ">");
    }
  }
  return static_cast<double>(good) / static_cast<double>(iris.size());
}

double completeness(const Graph& graph, std::vector<std::string>& details) {
  namespace v = ontology::vocab;
  auto genes = ontology::biomarker_instances(graph);
  if (genes.empty()) {
    details.push_back("no biomarker instances");
    return 0.0;
  }
  std::size_t complete = 0;
  for (const Term& gene : genes) {
    std::vector<std::string> missing;
    auto responsibilities = graph.match(gene, v::crossResponsibility(), std::nullopt);
    if (responsibilities.empty()) missing.push_back("crossResponsibility");
    for (const auto& rt : responsibilities) {
      bool significance_found = false;
      for (const auto& ft : graph.match(std::nullopt, v::forGene(), gene)) {
        if (graph.contains({ft.subject, v::forCancer(), rt.object}) &&
            !graph.match(ft.subject, v::hasSignificance(), std::nullopt).empty()) {
          significance_found = true;
        }
      }
      if (!significance_found) {
        missing.push_back("significance for " + rt.object.local_name());
      }
    }
    if (graph.match(gene, v::evidenceType(), std::nullopt).empty()) {
      missing.push_back("evidenceType");
    }
    bool cited = false;
    for (const auto& ct : graph.match(gene, v::hasCitations(), std::nullopt)) {
      try {
        if (std::stoll(ct.object.value()) >= 1) cited = true;
      } catch (...) {
      }
    }
    if (!cited) missing.push_back("hasCitations >= 1");
    if (missing.empty()) {
      ++complete;
    } else {
      std::string item = graph.compact(gene) + " missing:";
      for (const auto& m : missing) item += " " + m + ";";
      details.push_back(item);
    }
  }
  return static_cast<double>(complete) / static_cast<double>(genes.size());
}

double interlinking(const Graph& graph, std::vector<std::string>& details) {
  namespace v = ontology::vocab;
  // Instances: subjects typed by something that is not a schema meta-class.
  std::set<Term> instances;
  static const std::set<std::string> kMeta = {
      ontology::rdfs_class().canonical(), ontology::rdf_property().canonical(),
      ontology::owl_functional_property().canonical()};
  for (const auto& [t, prov] : graph.entries()) {
    if (t.predicate == ontology::rdf_type() && kMeta.count(t.object.canonical()) == 0) {
      if (!graph.contains({t.subject, ontology::rdf_type(), ontology::rdfs_class()}) &&
          !graph.contains({t.subject, ontology::rdf_type(), ontology::rdf_property()})) {
        instances.insert(t.subject);
      }
    }
  }
  if (instances.empty()) return 0.0;
  std::size_t linked = 0;
  for (const Term& instance : instances) {
    bool has_external = false;
    for (const auto& t : graph.match(instance, std::nullopt, std::nullopt)) {
      if (t.object.is_iri() && external_namespace(t.object.value())) has_external = true;
    }
    if (has_external) {
      ++linked;
    } else {
      details.push_back("no external link: " + graph.compact(instance));
    }
  }
  return static_cast<double>(linked) / static_cast<double>(instances.size());
}

double relevancy(const Graph& graph, const std::vector<std::string>& trusted,
                 std::vector<std::string>& details) {
  std::size_t with_provenance = 0;
  std::size_t from_trusted = 0;
  for (const auto& [t, prov] : graph.entries()) {
    if (!prov.has_value()) continue;
    ++with_provenance;
    if (trusted_source(prov->source, trusted)) {
      ++from_trusted;
    } else {
      details.push_back("untrusted source '" + prov->source + "': " + t.text());
    }
  }
  if (with_provenance == 0) {
    details.push_back("no provenance-carrying triples");
    return 0.0;
  }
  return static_cast<double>(from_trusted) / static_cast<double>(with_provenance);
}

// The fixed benchmark set: the flagship biomarker query plus four atoms.
const std::vector<std::string>& benchmark_queries() {
  static const std::vector<std::string> queries = {
      "Biomarker and causes some BRCA and isA only POTSF",
      "Biomarker",
      "Cancer",
      "Feature",
      "POTSF",
  };
  return queries;
}

double performance(const Graph& graph, const QualityConfig& config,
                   std::vector<std::string>& details, double& observed_p95_ms) {
  // Queries consume inferred types, so probe the saturated graph.
  reason::SaturationResult saturated = reason::saturate(graph);
  std::vector<double> samples;
  for (const auto& query : benchmark_queries()) {
    dlq::ClassExpression expr = dlq::parse(query, graph.prefixes().empty()
                                                      ? ontology::default_prefixes()
                                                      : graph.prefixes());
    for (std::size_t rep = 0; rep < config.probe_repetitions; ++rep) {
      auto started = std::chrono::steady_clock::now();
      dlq::evaluate(expr, saturated.graph);
      auto elapsed = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      samples.push_back(elapsed);
    }
  }
  std::sort(samples.begin(), samples.end());
  std::size_t index = samples.empty()
                          ? 0
                          : std::min(samples.size() - 1,
                                     static_cast<std::size_t>(0.95 * samples.size()));
  observed_p95_ms = samples.empty() ? 0.0 : samples[index];
  details.push_back("p95 over " + std::to_string(samples.size()) + " probes: " +
                    std::to_string(observed_p95_ms) + " ms (budget " +
                    std::to_string(config.latency_budget_ms) + " ms)");
  if (observed_p95_ms <= 0.0) return 1.0;
  return std::min(1.0, config.latency_budget_ms / observed_p95_ms);
}

}  // namespace

QualityReport assess(const Graph& graph, const QualityConfig& config, const Clock& clock) {
  QualityReport report;
  report.generated_at = clock();
  report.details["header"].push_back(kHeader);

  if (graph.empty()) {
    for (const char* dim : {"availability", "completeness", "interlinking",
                            "performance", "relevancy"}) {
      report.scores[dim] = 0.0;
      report.details[dim].push_back("empty graph");
    }
    report.scores["conciseness"] = 1.0;
    return report;
  }

  report.scores["availability"] = availability(graph, report.details["availability"]);
  report.scores["completeness"] = completeness(graph, report.details["completeness"]);

  double attempts = static_cast<double>(graph.insert_attempts());
  double duplicates = static_cast<double>(graph.duplicate_inserts());
  report.scores["conciseness"] = attempts == 0.0 ? 1.0 : 1.0 - duplicates / attempts;
  if (duplicates > 0) {
    report.details["conciseness"].push_back(
        std::to_string(graph.duplicate_inserts()) + " duplicate statements out of " +
        std::to_string(graph.insert_attempts()) + " ingested");
  }

  report.scores["interlinking"] = interlinking(graph, report.details["interlinking"]);
  if (config.run_performance_probe) {
    report.scores["performance"] = performance(graph, config, report.details["performance"],
                                               report.observed_p95_ms);
  } else {
    report.scores["performance"] = 1.0;
    report.details["performance"].push_back("probe disabled");
  }
  report.scores["relevancy"] =
      relevancy(graph, config.trusted_sources, report.details["relevancy"]);
  return report;
}

std::string QualityReport::table() const {
  std::ostringstream out;
  out << "# " << kHeader << "\n";
  out << "dimension      score\n";
  for (const auto& [dimension, score] : scores) {
    out << dimension;
    for (std::size_t i = dimension.size(); i < 15; ++i) out << ' ';
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.4f", score);
    out << buf << "\n";
  }
  return out.str();
}

std::string QualityReport::json() const {
  nlohmann::ordered_json j;
  j["header"] = kHeader;
  j["generated_at"] = format_utc(generated_at);
  nlohmann::ordered_json s;
  for (const auto& [dimension, score] : scores) s[dimension] = score;
  j["scores"] = std::move(s);
  j["observed_p95_ms"] = observed_p95_ms;
  nlohmann::ordered_json d;
  for (const auto& [dimension, items] : details) {
    if (dimension == "header") continue;
    d[dimension] = items;
  }
  j["details"] = std::move(d);
  return j.dump(2) + "\n";
}

}  // namespace onco::quality
