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

#ifndef ONCOKG_DLQ_AST_H_
#define ONCOKG_DLQ_AST_H_

#include <string>
#include <vector>

#include "onco/rdf/term.hpp"

namespace onco::dlq {

// Class expression AST. Restriction fillers are names (either a class or an
// individual; evaluation decides), matching the surface grammar:
//   expr := term ("and" term)*
//   term := NAME | NAME "some" NAME | NAME "only" NAME | NAME "value" NAME
struct ClassExpression {
  enum class Kind { kAtom, kAnd, kSome, kOnly, kValue };

  Kind kind = Kind::kAtom;
  rdf::Term name;    // class for Atom, role for restrictions
  rdf::Term filler;  // restriction filler / value individual
  std::vector<ClassExpression> children;  // And only, >= 2

  static ClassExpression atom(rdf::Term cls) {
    ClassExpression e;
    e.kind = Kind::kAtom;
    e.name = std::move(cls);
    return e;
  }
  static ClassExpression restriction(Kind kind, rdf::Term role, rdf::Term filler) {
    ClassExpression e;
    e.kind = kind;
    e.name = std::move(role);
    e.filler = std::move(filler);
    return e;
  }
  static ClassExpression conjunction(std::vector<ClassExpression> children) {
    ClassExpression e;
    e.kind = Kind::kAnd;
    e.children = std::move(children);
    return e;
  }
};

std::string to_string(const ClassExpression& expr);

}  // namespace onco::dlq

#endif  // ONCOKG_DLQ_AST_H_
