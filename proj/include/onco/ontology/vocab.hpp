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

#ifndef ONCOKG_ONTOLOGY_VOCAB_H_
#define ONCOKG_ONTOLOGY_VOCAB_H_

#include <string>
#include <string_view>

#include "onco/rdf/graph.hpp"
#include "onco/rdf/term.hpp"

namespace onco::ontology {

// Project namespace plus the read-only external namespaces the seed links to.
namespace ns {
inline constexpr std::string_view kOno = "http://onconet.example/ono#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kDoid = "http://purl.obolibrary.org/obo/DOID_";
inline constexpr std::string_view kOgg = "http://purl.obolibrary.org/obo/OGG_";
inline constexpr std::string_view kGo = "http://purl.obolibrary.org/obo/GO_";
inline constexpr std::string_view kMesh = "http://id.nlm.nih.gov/mesh/";
inline constexpr std::string_view kPubmed = "https://pubmed.ncbi.nlm.nih.gov/";
inline constexpr std::string_view kNcbiGene = "http://identifiers.org/ncbigene/";
}  // namespace ns

rdf::PrefixMap default_prefixes();

// Term builders for the project vocabulary.
rdf::Term ono(std::string_view local);
rdf::Term rdf_type();
rdf::Term rdfs_subclass_of();
rdf::Term rdfs_subproperty_of();
rdf::Term rdfs_domain();
rdf::Term rdfs_range();
rdf::Term rdfs_label();
rdf::Term rdfs_see_also();
rdf::Term rdfs_class();
rdf::Term rdf_property();
rdf::Term owl_disjoint_with();
rdf::Term owl_functional_property();

namespace vocab {
// Classes.
rdf::Term Cancer();
rdf::Term Biomarker();
rdf::Term Feature();
rdf::Term BiomarkerType();
rdf::Term Significance();
rdf::Term EvidenceSource();
rdf::Term Disease();
// Biomarker types.
rdf::Term Oncogene();
rdf::Term ProteinCoding();
rdf::Term Potsf();
// Significance levels.
rdf::Term High();
rdf::Term Medium();
rdf::Term Low();
// Evidence sources.
rdf::Term PubMed();
rdf::Term Mesh();
rdf::Term CancerIndex();
// Properties.
rdf::Term causes();
rdf::Term crossResponsibility();
rdf::Term hasType();
rdf::Term hasEvidence();
rdf::Term evidenceType();
rdf::Term hasSignificance();
rdf::Term hasCitations();
rdf::Term hasBiomarkerType();
rdf::Term forGene();
rdf::Term forCancer();
rdf::Term hasGOAssociation();
rdf::Term tcgaMember();
rdf::Term closedVocabulary();
}  // namespace vocab

// Deterministic Feature IRI: ono:feature/<SYMBOL>_<CODE>.
rdf::Term feature_iri(std::string_view symbol, std::string_view code);

}  // namespace onco::ontology

#endif  // ONCOKG_ONTOLOGY_VOCAB_H_
