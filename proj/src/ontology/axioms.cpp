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

#include "onco/ontology/axioms.hpp"

#include "onco/ontology/vocab.hpp"

namespace onco::ontology {

rdf::Term InstanceMinter::mint() {
  return ono(stem_ + std::to_string(next_++));
}

std::pair<rdf::Triple, rdf::Triple> instance_axioms(const rdf::Term& gene_iri,
                                                    const rdf::Term& association_iri,
                                                    const rdf::Term& class_iri,
                                                    InstanceMinter& minter) {
  rdf::Term f = minter.mint();
  return {rdf::Triple{gene_iri, association_iri, f},
          rdf::Triple{f, rdf_type(), class_iri}};
}

}  // namespace onco::ontology
