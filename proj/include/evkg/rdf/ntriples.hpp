// Copyright 2026 The EVKG Toolkit Authors.
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "evkg/rdf/graph.hpp"

namespace evkg::rdf {

/// Syntax error in N-Triples or Turtle input; carries the 1-based line and
/// the offending token.
class ParseError : public RdfError {
 public:
  ParseError(std::size_t line, std::string token, const std::string& what)
      : RdfError("line " + std::to_string(line) + ": " + what + " near '" + token + "'"),
        line_(line),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

/// One triple per line, lines sorted lexicographically, trailing newline.
/// An empty graph serializes to the empty string.
std::string serialize_ntriples(const Graph& graph);
Graph parse_ntriples(std::string_view text);

/// Turtle subset: `@prefix` header from the graph's prefix table followed by
/// one full triple per line using prefixed names where possible.
std::string serialize_turtle(const Graph& graph);
/// Accepts `@prefix`/`PREFIX` directives, `a`, and full `.`-terminated triples.
Graph parse_turtle(std::string_view text);

}  // namespace evkg::rdf
