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

#ifndef ONCOKG_ERROR_H_
#define ONCOKG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onco {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed data that violates a structural invariant (relative IRI,
// literal subject, bad gene record, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Syntax error while parsing a serialization or query, with position info.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) out += ":" + std::to_string(column);
    out += ": " + message;
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

// Missing or contradictory configuration (absent credential, bad flag value).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Lookup of an entity or triple that is not present.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Exhausted retries or a non-success status from a remote endpoint.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace onco

#endif  // ONCOKG_ERROR_H_
