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

#ifndef ONCOKG_QUALITY_ASSESS_H_
#define ONCOKG_QUALITY_ASSESS_H_

#include <map>
#include <string>
#include <vector>

#include "onco/clock.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::quality {

struct QualityConfig {
  double latency_budget_ms = 50.0;
  std::vector<std::string> trusted_sources = {"PubMed", "MeSH", "CancerIndex", "seed"};
  // Repetitions per benchmark query for the p95 estimate.
  std::size_t probe_repetitions = 20;
  bool run_performance_probe = true;
};

struct QualityReport {
  // All six dimensions, each in [0,1].
  std::map<std::string, double> scores;
  std::map<std::string, std::vector<std::string>> details;
  double observed_p95_ms = 0.0;
  TimePoint generated_at{};

  std::string table() const;
  std::string json() const;
};

// Six-dimension fitness assessment. The metric definitions are this
// toolkit's own (see README); the header of both outputs says so.
//
//   availability  registered-namespace IRIs / distinct IRIs
//   completeness  biomarkers with all required properties / biomarkers
//   conciseness   1 - duplicate statements / ingestion attempts
//   interlinking  instances with an external-namespace link / instances
//   performance   min(1, budget / observed p95) over the benchmark queries
//   relevancy     provenance from trusted sources / provenance-carrying
//
// An empty graph scores 0 everywhere except conciseness = 1.
QualityReport assess(const rdf::Graph& graph, const QualityConfig& config = {},
                     const Clock& clock = system_clock());

}  // namespace onco::quality

#endif  // ONCOKG_QUALITY_ASSESS_H_
