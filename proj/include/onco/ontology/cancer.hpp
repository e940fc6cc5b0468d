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

#ifndef ONCOKG_ONTOLOGY_CANCER_H_
#define ONCOKG_ONTOLOGY_CANCER_H_

#include <string>
#include <vector>

namespace onco::ontology {

// One cancer type: a TCGA-style study code, a common disease name, and
// optional DOID cross references. MED (medulloblastoma) ships as an extra
// non-TCGA code because TP53's responsibility set needs it.
struct CancerType {
  std::string code;
  std::string label;
  std::vector<std::string> doid_refs;  // absolute IRIs
  bool tcga = true;
};

// The 33 TCGA codes plus MED, in code order.
const std::vector<CancerType>& cancer_roster();

bool is_cancer_code(const std::string& code);
bool is_tcga_code(const std::string& code);

}  // namespace onco::ontology

#endif  // ONCOKG_ONTOLOGY_CANCER_H_
