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

#ifndef ONCOKG_ONTOLOGY_SEED_H_
#define ONCOKG_ONTOLOGY_SEED_H_

#include <filesystem>
#include <string>
#include <vector>

#include "onco/ontology/cancer.hpp"
#include "onco/ontology/gene.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::ontology {

struct SeedIssue {
  std::string subject;  // compacted IRI
  std::string message;
};

struct SeedReport {
  std::vector<SeedIssue> issues;
  std::size_t cancer_instances = 0;
  std::size_t tcga_instances = 0;
  std::size_t gene_instances = 0;
};

// Class hierarchy, property declarations, disjointness axioms, and the
// evidence-source instances. Cancer and gene instances live in their own
// seed documents.
std::vector<rdf::Triple> schema_triples();

// Turtle documents, one per roster.
std::string render_schema_turtle();
std::string render_cancers_turtle(const std::vector<CancerType>& roster);
std::string render_genes_turtle(const std::vector<GeneRecord>& roster);

// Writes schema.ttl, cancers.ttl and genes.ttl under dir.
void write_seed(const std::filesystem::path& dir);

// Loads a seed file, or every *.ttl / *.nt file under a directory in name
// order. Parsing is strict; invariant violations (unknown cancer code,
// significance without responsibility, citations < 1, missing evidence) are
// collected into the report with the offending subject IRI.
rdf::Graph load_seed(const std::filesystem::path& path, SeedReport* report = nullptr);

// Gene subjects: instances whose asserted type is Biomarker or one of its
// declared subclasses.
std::vector<rdf::Term> biomarker_instances(const rdf::Graph& graph);

std::string read_file(const std::filesystem::path& path);

}  // namespace onco::ontology

#endif  // ONCOKG_ONTOLOGY_SEED_H_
