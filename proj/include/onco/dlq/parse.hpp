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

#ifndef ONCOKG_DLQ_PARSE_H_
#define ONCOKG_DLQ_PARSE_H_

#include <string_view>

#include "onco/dlq/ast.hpp"
#include "onco/rdf/graph.hpp"

namespace onco::dlq {

// Parses a class-expression query. Keywords (and/some/only/value) are
// case-insensitive; names are prefixed (ono:TP53), <iri>, or bare (resolved
// under ono:); the role name isA aliases rdf:type. Errors carry the byte
// position (ParseError line 1, column = offset + 1).
ClassExpression parse(std::string_view text, const rdf::PrefixMap& prefixes);

}  // namespace onco::dlq

#endif  // ONCOKG_DLQ_PARSE_H_
