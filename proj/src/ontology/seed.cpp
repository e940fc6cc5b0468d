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

#include "onco/ontology/seed.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "onco/error.hpp"
#include "onco/ontology/vocab.hpp"
#include "onco/rdf/ntriples.hpp"
#include "onco/rdf/turtle.hpp"

namespace onco::ontology {

using rdf::Term;
using rdf::Triple;

std::vector<Triple> schema_triples() {
  namespace v = vocab;
  std::vector<Triple> t;
  auto klass = [&](const Term& c) { t.push_back({c, rdf_type(), rdfs_class()}); };
  auto sub = [&](const Term& c, const Term& d) {
    t.push_back({c, rdfs_subclass_of(), d});
  };
  auto prop = [&](const Term& p) { t.push_back({p, rdf_type(), rdf_property()}); };

  for (const Term& c : {v::Disease(), v::Cancer(), v::Biomarker(), v::Feature(),
                        v::BiomarkerType(), v::Significance(), v::EvidenceSource(),
                        v::Oncogene(), v::ProteinCoding(), v::Potsf(), v::High(),
                        v::Medium(), v::Low()}) {
    klass(c);
  }
  sub(v::Cancer(), v::Disease());
  // The biomarker types double as gene classes: a POTSF-typed instance is a
  // biomarker gene.
  for (const Term& c : {v::Oncogene(), v::ProteinCoding(), v::Potsf()}) {
    sub(c, v::BiomarkerType());
    sub(c, v::Biomarker());
  }
  for (const Term& c : {v::High(), v::Medium(), v::Low()}) {
    sub(c, v::Significance());
  }

  t.push_back({v::Cancer(), owl_disjoint_with(), v::Biomarker()});
  t.push_back({v::High(), owl_disjoint_with(), v::Medium()});
  t.push_back({v::High(), owl_disjoint_with(), v::Low()});
  t.push_back({v::Medium(), owl_disjoint_with(), v::Low()});

  for (const Term& p : {v::causes(), v::crossResponsibility(), v::hasType(),
                        v::hasEvidence(), v::evidenceType(), v::hasSignificance(),
                        v::hasCitations(), v::hasBiomarkerType(), v::forGene(),
                        v::forCancer(), v::hasGOAssociation(), v::tcgaMember()}) {
    prop(p);
  }
  // Every crossResponsibility assertion is also a causal claim.
  t.push_back({v::crossResponsibility(), rdfs_subproperty_of(), v::causes()});

  t.push_back({v::causes(), rdfs_domain(), v::Biomarker()});
  t.push_back({v::causes(), rdfs_range(), v::Disease()});
  t.push_back({v::crossResponsibility(), rdfs_domain(), v::Biomarker()});
  t.push_back({v::crossResponsibility(), rdfs_range(), v::Cancer()});
  t.push_back({v::hasType(), rdfs_domain(), v::Biomarker()});
  t.push_back({v::hasType(), rdfs_range(), v::BiomarkerType()});
  t.push_back({v::hasEvidence(), rdfs_range(), v::EvidenceSource()});
  t.push_back({v::evidenceType(), rdfs_range(), v::EvidenceSource()});
  t.push_back({v::hasSignificance(), rdfs_domain(), v::Feature()});
  t.push_back({v::hasSignificance(), rdfs_range(), v::Significance()});
  t.push_back({v::forGene(), rdfs_domain(), v::Feature()});
  t.push_back({v::forCancer(), rdfs_domain(), v::Feature()});
  t.push_back({v::forCancer(), rdfs_range(), v::Cancer()});
  t.push_back({v::hasBiomarkerType(), rdfs_domain(), v::Feature()});
  t.push_back({v::hasBiomarkerType(), rdfs_range(), v::BiomarkerType()});

  // hasSignificance is a functional key per feature node; its range is a
  // closed value vocabulary, which drives the consistency checks.
  t.push_back({v::hasSignificance(), rdf_type(), owl_functional_property()});
  t.push_back({v::hasBiomarkerType(), rdf_type(), owl_functional_property()});
  t.push_back({v::Significance(), v::closedVocabulary(), Term::boolean(true)});
  t.push_back({v::BiomarkerType(), v::closedVocabulary(), Term::boolean(true)});

  for (const Term& e : {v::PubMed(), v::Mesh(), v::CancerIndex()}) {
    t.push_back({e, rdf_type(), v::EvidenceSource()});
  }
  return t;
}

namespace {

std::string turtle_header() {
  std::ostringstream out;
  for (const auto& [label, ns] : default_prefixes()) {
    out << "@prefix " << label << ": <" << ns << "> .\n";
  }
  out << "\n";
  return out.str();
}

std::string pname(const rdf::Graph& scratch, const Term& t) {
  return scratch.compact(t);
}

}  // namespace

std::string render_schema_turtle() {
  rdf::Graph scratch;
  scratch.register_prefixes(default_prefixes());
  std::ostringstream out;
  out << "# ONO schema: classes, properties, disjointness axioms.\n";
  out << turtle_header();
  for (const Triple& t : schema_triples()) {
    out << pname(scratch, t.subject) << " ";
    if (t.predicate == rdf_type()) {
      out << "a";
    } else {
      out << pname(scratch, t.predicate);
    }
    out << " ";
    if (t.object.is_literal()) {
      if (t.object.datatype() == rdf::xsd::kBoolean) {
        out << t.object.value();
      } else {
        out << t.object.canonical();
      }
    } else {
      out << pname(scratch, t.object);
    }
    out << " .\n";
  }
  return out.str();
}

std::string render_cancers_turtle(const std::vector<CancerType>& roster) {
  rdf::Graph scratch;
  scratch.register_prefixes(default_prefixes());
  std::ostringstream out;
  out << "# Cancer roster: TCGA study codes plus the flagged MED extension.\n";
  out << turtle_header();
  for (const auto& cancer : roster) {
    out << "ono:" << cancer.code << " a ono:Cancer ;\n";
    out << "  rdfs:label \"" << rdf::escape_literal(cancer.label) << "\" ;\n";
    for (const auto& ref : cancer.doid_refs) {
      out << "  rdfs:seeAlso " << pname(scratch, Term::iri(ref)) << " ;\n";
    }
    out << "  ono:tcgaMember " << (cancer.tcga ? "true" : "false") << " .\n";
  }
  return out.str();
}

std::string render_genes_turtle(const std::vector<GeneRecord>& roster) {
  rdf::Graph scratch;
  scratch.register_prefixes(default_prefixes());
  std::ostringstream out;
  out << "# Biomarker gene roster, one expanded record per gene.\n";
  out << turtle_header();
  for (const auto& record : roster) {
    for (const Triple& t : expand_record(record)) {
      out << pname(scratch, t.subject) << " ";
      if (t.predicate == rdf_type()) {
        out << "a";
      } else {
        out << pname(scratch, t.predicate);
      }
      out << " ";
      if (t.object.is_literal()) {
        out << t.object.canonical();
      } else {
        out << pname(scratch, t.object);
      }
      out << " .\n";
    }
    out << "\n";
  }
  return out.str();
}

void write_seed(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error("cannot write " + (dir / name).string());
    out << body;
  };
  write("schema.ttl", render_schema_turtle());
  write("cancers.ttl", render_cancers_turtle(cancer_roster()));
  write("genes.ttl", render_genes_turtle(gene_roster()));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

void load_one(rdf::Graph& graph, const std::filesystem::path& file) {
  std::string text = read_file(file);
  rdf::ParseOptions strict;
  if (file.extension() == ".nt") {
    rdf::parse_ntriples_into(graph, text, strict);
  } else {
    rdf::parse_turtle_subset_into(graph, text, strict);
  }
}

// Reconstructs the record-level view of one gene subject for validation.
void validate_gene(const rdf::Graph& graph, const Term& gene, SeedReport& report) {
  namespace v = vocab;
  auto issue = [&](const std::string& message) {
    report.issues.push_back({graph.compact(gene), message});
  };

  auto responsibilities = graph.match(gene, v::crossResponsibility(), std::nullopt);
  for (const auto& t : responsibilities) {
    if (!is_cancer_code(t.object.local_name())) {
      issue("unknown cancer code: " + t.object.local_name());
    }
  }

  auto citations = graph.match(gene, v::hasCitations(), std::nullopt);
  if (citations.empty()) {
    issue("missing ono:hasCitations");
  } else {
    for (const auto& t : citations) {
      long long n = 0;
      try {
        n = std::stoll(t.object.value());
      } catch (...) {
        issue("non-integer citation count: " + t.object.canonical());
        continue;
      }
      if (n < 1) issue("citations must be >= 1, got " + t.object.value());
    }
  }

  if (graph.match(gene, v::evidenceType(), std::nullopt).empty()) {
    issue("missing ono:evidenceType");
  }

  // Feature nodes must pair with a declared responsibility and carry a
  // significance level.
  auto features = graph.match(std::nullopt, v::forGene(), gene);
  for (const auto& ft : features) {
    const Term& feature = ft.subject;
    auto cancers = graph.match(feature, v::forCancer(), std::nullopt);
    if (cancers.empty()) {
      issue("feature " + graph.compact(feature) + " lacks ono:forCancer");
      continue;
    }
    for (const auto& ct : cancers) {
      bool declared = false;
      for (const auto& rt : responsibilities) {
        if (rt.object == ct.object) declared = true;
      }
      if (!declared) {
        issue("significance for " + ct.object.local_name() +
              " without matching crossResponsibility");
      }
    }
    if (graph.match(feature, v::hasSignificance(), std::nullopt).empty()) {
      issue("feature " + graph.compact(feature) + " lacks ono:hasSignificance");
    }
  }
}

}  // namespace

std::vector<Term> biomarker_instances(const rdf::Graph& graph) {
  namespace v = vocab;
  std::vector<Term> out;
  std::set<std::string> seen;
  for (const Term& type : {v::Biomarker(), v::Potsf(), v::Oncogene(), v::ProteinCoding()}) {
    for (const auto& t : graph.match(std::nullopt, rdf_type(), type)) {
      if (seen.insert(t.subject.canonical()).second) out.push_back(t.subject);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

rdf::Graph load_seed(const std::filesystem::path& path, SeedReport* report) {
  rdf::Graph graph;
  graph.register_prefixes(default_prefixes());
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      auto ext = entry.path().extension();
      if (ext == ".ttl" || ext == ".nt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("no seed files under " + path.string());
    for (const auto& file : files) load_one(graph, file);
  } else if (std::filesystem::exists(path)) {
    load_one(graph, path);
  } else {
    throw Error("seed path does not exist: " + path.string());
  }

  SeedReport local;
  SeedReport& rep = (report != nullptr) ? *report : local;
  for (const auto& t : graph.match(std::nullopt, rdf_type(), vocab::Cancer())) {
    ++rep.cancer_instances;
    if (graph.contains({t.subject, vocab::tcgaMember(), Term::boolean(true)})) {
      ++rep.tcga_instances;
    }
  }
  auto genes = biomarker_instances(graph);
  rep.gene_instances = genes.size();
  for (const Term& gene : genes) {
    validate_gene(graph, gene, rep);
  }
  return graph;
}

}  // namespace onco::ontology
