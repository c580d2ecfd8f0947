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

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "evkg/rdf/term.hpp"

namespace evkg::sparql {

/// Malformed query text. Carries a 1-based line and column.
class QuerySyntaxError : public std::runtime_error {
 public:
  QuerySyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed SPARQL outside the supported subset (OPTIONAL, ORDER BY, ...).
class UnsupportedFeature : public std::runtime_error {
 public:
  UnsupportedFeature(std::string construct, std::size_t line, std::size_t column)
      : std::runtime_error("unsupported feature '" + construct + "' at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        construct_(std::move(construct)) {}
  const std::string& construct() const noexcept { return construct_; }

 private:
  std::string construct_;
};

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;
};

using PatternTerm = std::variant<Var, rdf::Term>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct Expr {
  enum class Op { Var, Const, Eq, Ne, Lt, Gt, Le, Ge, Add, Sub, Mul, Div, Neg, Sum };
  Op op = Op::Const;
  std::string var;                  // Op::Var
  std::optional<rdf::Term> value;   // Op::Const
  std::vector<Expr> args;

  bool has_aggregate() const;
  friend bool operator==(const Expr&, const Expr&) = default;
};

struct Query;
struct GraphPattern;

struct Bgp {
  std::vector<TriplePattern> triples;
};

/// A `{ ... }` block. Filters constrain the whole block regardless of their
/// position inside it.
struct Group {
  std::vector<GraphPattern> elements;
  std::vector<Expr> filters;
};

struct Union {
  std::vector<Group> branches;
};

/// Inline data. An unset cell is UNDEF.
struct Values {
  std::vector<std::string> vars;
  std::vector<std::vector<std::optional<rdf::Term>>> rows;
};

struct SubSelect {
  std::shared_ptr<const Query> query;
};

struct GraphPattern {
  std::variant<Bgp, Group, Union, Values, SubSelect> node;
};

struct SelectItem {
  std::string var;
  /// Set for `(expr AS ?var)`.
  std::optional<Expr> expr;
};

struct Query {
  /// Declared prefixes in source order.
  std::vector<std::pair<std::string, std::string>> prefixes;
  bool distinct = false;
  bool select_all = false;
  std::vector<SelectItem> select;
  Group where;
  std::vector<std::string> group_by;

  /// True when the query aggregates (GROUP BY present or an aggregate in the
  /// projection).
  bool grouped() const;
};

bool operator==(const Bgp& a, const Bgp& b);
bool operator==(const Group& a, const Group& b);
bool operator==(const Union& a, const Union& b);
bool operator==(const Values& a, const Values& b);
bool operator==(const SubSelect& a, const SubSelect& b);
bool operator==(const GraphPattern& a, const GraphPattern& b);
bool operator==(const SelectItem& a, const SelectItem& b);
bool operator==(const Query& a, const Query& b);

/// Variables a pattern can bind, in order of first appearance. For a
/// sub-select only its projection is visible.
std::vector<std::string> in_scope_variables(const Group& g);
/// Variables the query projects, in order (`*` expands to in-scope ones).
std::vector<std::string> projected_variables(const Query& q);

}  // namespace evkg::sparql
