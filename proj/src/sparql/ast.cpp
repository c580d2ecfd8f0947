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

#include "evkg/sparql/ast.hpp"

#include <algorithm>

namespace evkg::sparql {

bool Expr::has_aggregate() const {
  if (op == Op::Sum) return true;
  return std::any_of(args.begin(), args.end(), [](const Expr& e) { return e.has_aggregate(); });
}

bool Query::grouped() const {
  if (!group_by.empty()) return true;
  return std::any_of(select.begin(), select.end(),
                     [](const SelectItem& s) { return s.expr && s.expr->has_aggregate(); });
}

bool operator==(const Bgp& a, const Bgp& b) { return a.triples == b.triples; }
bool operator==(const Group& a, const Group& b) { return a.elements == b.elements && a.filters == b.filters; }
bool operator==(const Union& a, const Union& b) { return a.branches == b.branches; }
bool operator==(const Values& a, const Values& b) { return a.vars == b.vars && a.rows == b.rows; }
bool operator==(const SubSelect& a, const SubSelect& b) {
  if (!a.query || !b.query) return a.query == b.query;
  return *a.query == *b.query;
}
bool operator==(const GraphPattern& a, const GraphPattern& b) { return a.node == b.node; }
bool operator==(const SelectItem& a, const SelectItem& b) { return a.var == b.var && a.expr == b.expr; }
bool operator==(const Query& a, const Query& b) {
  return a.prefixes == b.prefixes && a.distinct == b.distinct && a.select_all == b.select_all &&
         a.select == b.select && a.where == b.where && a.group_by == b.group_by;
}

namespace {

void note(std::vector<std::string>& out, const std::string& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

void note(std::vector<std::string>& out, const PatternTerm& t) {
  if (const auto* v = std::get_if<Var>(&t)) note(out, v->name);
}

void collect(const Group& g, std::vector<std::string>& out) {
  for (const auto& el : g.elements) {
    std::visit(
        [&out](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Bgp>) {
            for (const auto& tp : node.triples) {
              note(out, tp.subject);
              note(out, tp.predicate);
              note(out, tp.object);
            }
          } else if constexpr (std::is_same_v<T, Group>) {
            collect(node, out);
          } else if constexpr (std::is_same_v<T, Union>) {
            for (const auto& b : node.branches) collect(b, out);
          } else if constexpr (std::is_same_v<T, Values>) {
            for (const auto& v : node.vars) note(out, v);
          } else {
            for (const auto& v : projected_variables(*node.query)) note(out, v);
          }
        },
        el.node);
  }
}

}  // namespace

std::vector<std::string> in_scope_variables(const Group& g) {
  std::vector<std::string> out;
  collect(g, out);
  return out;
}

std::vector<std::string> projected_variables(const Query& q) {
  if (q.select_all) return in_scope_variables(q.where);
  std::vector<std::string> out;
  for (const auto& s : q.select) note(out, s.var);
  return out;
}

}  // namespace evkg::sparql
