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

#include "onco/ontology/vocab.hpp"

namespace onco::ontology {

using rdf::Term;

rdf::PrefixMap default_prefixes() {
  return {
      {"ono", std::string(ns::kOno)},       {"rdf", std::string(ns::kRdf)},
      {"rdfs", std::string(ns::kRdfs)},     {"xsd", std::string(ns::kXsd)},
      {"owl", std::string(ns::kOwl)},       {"doid", std::string(ns::kDoid)},
      {"ogg", std::string(ns::kOgg)},       {"go", std::string(ns::kGo)},
      {"mesh", std::string(ns::kMesh)},     {"pubmed", std::string(ns::kPubmed)},
      {"ncbigene", std::string(ns::kNcbiGene)},
  };
}

Term ono(std::string_view local) {
  return Term::iri(std::string(ns::kOno) + std::string(local));
}

namespace {
Term in(std::string_view space, std::string_view local) {
  return Term::iri(std::string(space) + std::string(local));
}
}  // namespace

Term rdf_type() { return in(ns::kRdf, "type"); }
Term rdfs_subclass_of() { return in(ns::kRdfs, "subClassOf"); }
Term rdfs_subproperty_of() { return in(ns::kRdfs, "subPropertyOf"); }
Term rdfs_domain() { return in(ns::kRdfs, "domain"); }
Term rdfs_range() { return in(ns::kRdfs, "range"); }
Term rdfs_label() { return in(ns::kRdfs, "label"); }
Term rdfs_see_also() { return in(ns::kRdfs, "seeAlso"); }
Term rdfs_class() { return in(ns::kRdfs, "Class"); }
Term rdf_property() { return in(ns::kRdf, "Property"); }
Term owl_disjoint_with() { return in(ns::kOwl, "disjointWith"); }
Term owl_functional_property() { return in(ns::kOwl, "FunctionalProperty"); }

namespace vocab {
Term Cancer() { return ono("Cancer"); }
Term Biomarker() { return ono("Biomarker"); }
Term Feature() { return ono("Feature"); }
Term BiomarkerType() { return ono("BiomarkerType"); }
Term Significance() { return ono("Significance"); }
Term EvidenceSource() { return ono("EvidenceSource"); }
Term Disease() { return ono("Disease"); }
Term Oncogene() { return ono("Oncogene"); }
Term ProteinCoding() { return ono("ProteinCoding"); }
Term Potsf() { return ono("POTSF"); }
Term High() { return ono("HIGH"); }
Term Medium() { return ono("MEDIUM"); }
Term Low() { return ono("LOW"); }
Term PubMed() { return ono("PubMed"); }
Term Mesh() { return ono("MeSH"); }
Term CancerIndex() { return ono("CancerIndex"); }
Term causes() { return ono("causes"); }
Term crossResponsibility() { return ono("crossResponsibility"); }
Term hasType() { return ono("hasType"); }
Term hasEvidence() { return ono("hasEvidence"); }
Term evidenceType() { return ono("evidenceType"); }
Term hasSignificance() { return ono("hasSignificance"); }
Term hasCitations() { return ono("hasCitations"); }
Term hasBiomarkerType() { return ono("hasBiomarkerType"); }
Term forGene() { return ono("forGene"); }
Term forCancer() { return ono("forCancer"); }
Term hasGOAssociation() { return ono("hasGOAssociation"); }
Term tcgaMember() { return ono("tcgaMember"); }
Term closedVocabulary() { return ono("closedVocabulary"); }
}  // namespace vocab

Term feature_iri(std::string_view symbol, std::string_view code) {
  return ono("feature/" + std::string(symbol) + "_" + std::string(code));
}

}  // namespace onco::ontology
