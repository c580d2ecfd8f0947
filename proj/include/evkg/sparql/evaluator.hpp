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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evkg/rdf/graph.hpp"
#include "evkg/sparql/ast.hpp"

namespace evkg::sparql {

/// Result multiset. `rows[i][j]` is the binding of `vars[j]` in row i;
/// nullopt means unbound. Row order is unspecified.
struct Solution {
  std::vector<std::string> vars;
  std::vector<std::vector<std::optional<rdf::Term>>> rows;
};

/// Evaluates `q` against `graph`. Data never causes an exception: type
/// errors filter rows out or leave projected values unbound.
Solution evaluate(const rdf::Graph& graph, const Query& q);

/// Numeric view of a literal: xsd:integer, xsd:decimal, xsd:double and
/// xsd:gYear (as an integer year). Decimals are carried as doubles.
struct Numeric {
  enum class Kind { Integer, Decimal, Double };
  Kind kind = Kind::Integer;
  long long integer = 0;
  double real = 0.0;

  double as_double() const { return kind == Kind::Integer ? static_cast<double>(integer) : real; }
};

std::optional<Numeric> numeric_value(const rdf::Term& t);

/// Literal for a numeric value in canonical lexical form: integers as
/// digits, decimals as the shortest round-tripping fixed notation with at
/// least one fractional digit, doubles as mantissa 'E' exponent.
std::optional<rdf::Term> numeric_term(const Numeric& n);

}  // namespace evkg::sparql
