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

// Regenerates the shipped seed documents (schema.ttl, cancers.ttl,
// genes.ttl) from the built-in rosters.

#include <iostream>

#include "onco/ontology/seed.hpp"

int main(int argc, char** argv) {
  std::filesystem::path dir = (argc > 1) ? argv[1] : "data/seed";
  onco::ontology::write_seed(dir);
  std::cerr << "seedgen: wrote schema.ttl, cancers.ttl, genes.ttl under " << dir.string()
            << "\n";
  return 0;
}
