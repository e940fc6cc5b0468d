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

#ifndef ONCOKG_ONTOLOGY_AXIOMS_H_
#define ONCOKG_ONTOLOGY_AXIOMS_H_

#include <cstdint>
#include <string>
#include <utility>

#include "onco/rdf/triple.hpp"

namespace onco::ontology {

// Mints fresh instance IRIs under the project namespace: ono:assoc/f1, f2...
class InstanceMinter {
 public:
  explicit InstanceMinter(std::string stem = "assoc/f") : stem_(std::move(stem)) {}
  rdf::Term mint();

 private:
  std::string stem_;
  std::uint64_t next_ = 1;
};

// Annotation pattern linking a gene to an external ontology class through a
// freshly minted association instance:
//   (gene, association, f) and (f, rdf:type, class).
// External classes are treated as instances, so both triples are ABox facts.
std::pair<rdf::Triple, rdf::Triple> instance_axioms(const rdf::Term& gene_iri,
                                                    const rdf::Term& association_iri,
                                                    const rdf::Term& class_iri,
                                                    InstanceMinter& minter);

}  // namespace onco::ontology

#endif  // ONCOKG_ONTOLOGY_AXIOMS_H_
