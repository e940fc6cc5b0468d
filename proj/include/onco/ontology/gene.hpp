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

#ifndef ONCOKG_ONTOLOGY_GENE_H_
#define ONCOKG_ONTOLOGY_GENE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "onco/rdf/triple.hpp"

namespace onco::ontology {

enum class GeneType { kOncogene, kProteinCoding, kPotsf };
enum class SignificanceLevel { kHigh, kMedium, kLow };
enum class Evidence { kPubMed, kMesh, kCancerIndex };

// "POTFS" is accepted as an input alias; the canonical token is POTSF.
GeneType parse_gene_type(const std::string& token);
SignificanceLevel parse_significance(const std::string& token);
Evidence parse_evidence(const std::string& token);
const char* to_token(GeneType t);
const char* to_token(SignificanceLevel s);
const char* to_token(Evidence e);

// A biomarker gene: its types, the cancer codes it is implicated in, a
// per-code significance level, evidence sources, citation count, and
// external cross references.
struct GeneRecord {
  std::string symbol;
  std::set<GeneType> gene_types;
  std::vector<std::string> cross_responsibility;          // cancer codes
  std::map<std::string, SignificanceLevel> significance;  // code -> level
  std::set<Evidence> evidence;
  std::int64_t citations = 1;
  std::vector<std::string> external_refs;  // absolute IRIs
};

// Empty when the record satisfies all invariants: significance keys within
// cross_responsibility, known cancer codes, nonempty gene_types and
// evidence, citations >= 1.
std::vector<std::string> record_issues(const GeneRecord& record);

// Most specific type wins when a gene carries several.
GeneType primary_type(const std::set<GeneType>& types);

// Deterministic triple expansion:
//   (gene rdf:type <primary type>)                        1
//   (gene ono:hasCitations "<n>"^^xsd:integer)            1
//   (gene ono:crossResponsibility ono:<code>)             per code
//   feature node per code, 5 triples each:
//     rdf:type ono:Feature / ono:forGene / ono:forCancer /
//     ono:hasSignificance / ono:hasBiomarkerType
//   (gene ono:evidenceType ono:<source>)                  per source
//   (gene rdfs:seeAlso <ref>)                             per external ref
//
// Total: 2 + 6*|codes| + |evidence| + |external_refs|. A code without an
// explicit significance entry defaults to MEDIUM.
// Throws StructuralError when record_issues is nonempty.
std::vector<rdf::Triple> expand_record(const GeneRecord& record);

// The desk-scale gene roster shipped with the toolkit.
const std::vector<GeneRecord>& gene_roster();

}  // namespace onco::ontology

#endif  // ONCOKG_ONTOLOGY_GENE_H_
