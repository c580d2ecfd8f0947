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

#include "evkg/sparql/evaluator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace evkg::sparql {

namespace {

using Row = std::map<std::string, rdf::Term>;
using Rows = std::vector<Row>;

const rdf::Iri& xsd_iri(std::string_view dt) {
  static const rdf::Iri integer{std::string(rdf::xsd::kInteger)};
  static const rdf::Iri decimal{std::string(rdf::xsd::kDecimal)};
  static const rdf::Iri dbl{std::string(rdf::xsd::kDouble)};
  static const rdf::Iri boolean{std::string(rdf::xsd::kBoolean)};
  if (dt == rdf::xsd::kInteger) return integer;
  if (dt == rdf::xsd::kDecimal) return decimal;
  if (dt == rdf::xsd::kDouble) return dbl;
  return boolean;
}

rdf::Term boolean(bool v) { return rdf::Literal(v ? "true" : "false", xsd_iri(rdf::xsd::kBoolean)); }

bool compatible(const Row& a, const Row& b) {
  const Row& small = a.size() <= b.size() ? a : b;
  const Row& large = a.size() <= b.size() ? b : a;
  for (const auto& [k, v] : small) {
    auto it = large.find(k);
    if (it != large.end() && !(it->second == v)) return false;
  }
  return true;
}

Rows join(const Rows& left, const Rows& right) {
  Rows out;
  for (const auto& l : left) {
    for (const auto& r : right) {
      if (!compatible(l, r)) continue;
      Row merged = l;
      merged.insert(r.begin(), r.end());
      out.push_back(std::move(merged));
    }
  }
  return out;
}

bool is_simple_string(const rdf::Literal& l) { return l.datatype().str() == rdf::xsd::kString; }

std::optional<bool> compare(Expr::Op op, const rdf::Term& a, const rdf::Term& b) {
  auto na = numeric_value(a);
  auto nb = numeric_value(b);
  std::optional<int> order;
  if (na && nb) {
    if (na->kind == Numeric::Kind::Integer && nb->kind == Numeric::Kind::Integer) {
      order = na->integer < nb->integer ? -1 : (na->integer > nb->integer ? 1 : 0);
    } else {
      double x = na->as_double();
      double y = nb->as_double();
      if (std::isnan(x) || std::isnan(y)) return op == Expr::Op::Ne;
      order = x < y ? -1 : (x > y ? 1 : 0);
    }
  } else {
    const auto* la = std::get_if<rdf::Literal>(&a);
    const auto* lb = std::get_if<rdf::Literal>(&b);
    if (la && lb) {
      const bool strings = (is_simple_string(*la) && is_simple_string(*lb)) ||
                           (la->language() && lb->language() && *la->language() == *lb->language());
      const bool same_ordered = la->datatype() == lb->datatype() &&
                                (la->datatype().str() == rdf::xsd::kDate ||
                                 la->datatype().str() == rdf::xsd::kBoolean);
      if (strings || same_ordered) {
        int c = la->lexical().compare(lb->lexical());
        order = c < 0 ? -1 : (c > 0 ? 1 : 0);
      } else if (op == Expr::Op::Eq || op == Expr::Op::Ne) {
        if (!(*la == *lb)) return std::nullopt;
        order = 0;
      } else {
        return std::nullopt;
      }
    } else {
      if (op == Expr::Op::Eq) return a == b;
      if (op == Expr::Op::Ne) return !(a == b);
      return std::nullopt;
    }
  }
  switch (op) {
    case Expr::Op::Eq: return *order == 0;
    case Expr::Op::Ne: return *order != 0;
    case Expr::Op::Lt: return *order < 0;
    case Expr::Op::Gt: return *order > 0;
    case Expr::Op::Le: return *order <= 0;
    case Expr::Op::Ge: return *order >= 0;
    default: return std::nullopt;
  }
}

std::optional<Numeric> arithmetic(Expr::Op op, const Numeric& a, const Numeric& b) {
  using K = Numeric::Kind;
  if (a.kind == K::Integer && b.kind == K::Integer && op != Expr::Op::Div) {
    long long r = 0;
    bool overflow = false;
    switch (op) {
      case Expr::Op::Add: overflow = __builtin_add_overflow(a.integer, b.integer, &r); break;
      case Expr::Op::Sub: overflow = __builtin_sub_overflow(a.integer, b.integer, &r); break;
      case Expr::Op::Mul: overflow = __builtin_mul_overflow(a.integer, b.integer, &r); break;
      default: return std::nullopt;
    }
    if (!overflow) return Numeric{K::Integer, r, 0.0};
  }
  K kind = std::max(std::max(a.kind, b.kind), K::Decimal);
  double x = a.as_double();
  double y = b.as_double();
  double r = 0.0;
  switch (op) {
    case Expr::Op::Add: r = x + y; break;
    case Expr::Op::Sub: r = x - y; break;
    case Expr::Op::Mul: r = x * y; break;
    case Expr::Op::Div:
      if (y == 0.0) return std::nullopt;
      r = x / y;
      break;
    default: return std::nullopt;
  }
  if (!std::isfinite(r)) return std::nullopt;
  return Numeric{kind, 0, r};
}

/// Effective boolean value; nullopt on a type error.
std::optional<bool> truth(const rdf::Term& t) {
  const auto* l = std::get_if<rdf::Literal>(&t);
  if (!l) return std::nullopt;
  if (l->datatype().str() == rdf::xsd::kBoolean) return l->lexical() == "true" || l->lexical() == "1";
  if (auto n = numeric_value(t)) {
    if (n->kind == Numeric::Kind::Integer) return n->integer != 0;
    return n->real != 0.0 && !std::isnan(n->real);
  }
  if (is_simple_string(*l) || l->language()) return !l->lexical().empty();
  return std::nullopt;
}

class Evaluator {
 public:
  explicit Evaluator(const rdf::Graph& g) : g_(g) {}

  Rows query(const Query& q) {
    Rows rows = group(q.where);
    Rows shaped;
    if (q.grouped()) {
      std::map<std::vector<std::optional<rdf::Term>>, Rows> partitions;
      if (q.group_by.empty()) partitions[{}];
      for (auto& r : rows) {
        std::vector<std::optional<rdf::Term>> key;
        for (const auto& v : q.group_by) {
          auto it = r.find(v);
          key.push_back(it == r.end() ? std::nullopt : std::optional<rdf::Term>(it->second));
        }
        partitions[std::move(key)].push_back(std::move(r));
      }
      for (const auto& [key, members] : partitions) {
        Row out;
        for (std::size_t i = 0; i < key.size(); ++i) {
          if (key[i]) out.insert_or_assign(q.group_by[i], *key[i]);
        }
        for (const auto& item : q.select) {
          if (!item.expr) continue;
          if (auto v = eval(*item.expr, out, &members)) out.insert_or_assign(item.var, *v);
        }
        shaped.push_back(std::move(out));
      }
    } else {
      for (auto& r : rows) {
        for (const auto& item : q.select) {
          if (!item.expr) continue;
          if (auto v = eval(*item.expr, r, nullptr)) r.insert_or_assign(item.var, *v);
        }
        shaped.push_back(std::move(r));
      }
    }

    const std::vector<std::string> vars = projected_variables(q);
    Rows out;
    std::set<Row> seen;
    for (auto& r : shaped) {
      Row p;
      for (const auto& v : vars) {
        auto it = r.find(v);
        if (it != r.end()) p.emplace(v, it->second);
      }
      if (q.distinct && !seen.insert(p).second) continue;
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  static bool filter_only(const Group& g) { return g.elements.empty() && !g.filters.empty(); }

  Rows group(const Group& g) {
    Rows rows{Row{}};
    std::vector<const Expr*> filters;
    for (const auto& f : g.filters) filters.push_back(&f);
    for (const auto& el : g.elements) {
      if (const auto* inner = std::get_if<Group>(&el.node); inner && filter_only(*inner)) {
        for (const auto& f : inner->filters) filters.push_back(&f);
        continue;
      }
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Bgp>) {
              Rows next;
              std::vector<bool> done(node.triples.size(), false);
              for (const auto& r : rows) extend(node.triples, done, r, next);
              rows = std::move(next);
            } else if constexpr (std::is_same_v<T, Group>) {
              rows = join(rows, group(node));
            } else if constexpr (std::is_same_v<T, Union>) {
              Rows all;
              for (const auto& b : node.branches) {
                Rows part = group(b);
                all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
              }
              rows = join(rows, all);
            } else if constexpr (std::is_same_v<T, Values>) {
              Rows table;
              for (const auto& vr : node.rows) {
                Row r;
                for (std::size_t i = 0; i < node.vars.size(); ++i) {
                  if (vr[i]) r.insert_or_assign(node.vars[i], *vr[i]);
                }
                table.push_back(std::move(r));
              }
              rows = join(rows, table);
            } else {
              rows = join(rows, query(*node.query));
            }
          },
          el.node);
    }
    if (filters.empty()) return rows;
    Rows kept;
    for (auto& r : rows) {
      bool keep = true;
      for (const Expr* f : filters) {
        auto v = eval(*f, r, nullptr);
        auto t = v ? truth(*v) : std::nullopt;
        if (!t || !*t) {
          keep = false;
          break;
        }
      }
      if (keep) kept.push_back(std::move(r));
    }
    return kept;
  }

  static std::optional<rdf::Term> bound(const PatternTerm& t, const Row& r) {
    if (const auto* v = std::get_if<Var>(&t)) {
      auto it = r.find(v->name);
      if (it == r.end()) return std::nullopt;
      return it->second;
    }
    return std::get<rdf::Term>(t);
  }

  /// Index nested-loop join: at each step the pattern with the most bound
  /// positions goes next.
  void extend(const std::vector<TriplePattern>& patterns, std::vector<bool>& done, const Row& row, Rows& out) {
    std::size_t best = patterns.size();
    int best_score = -1;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (done[i]) continue;
      const auto& tp = patterns[i];
      int score = (bound(tp.subject, row) ? 1 : 0) + (bound(tp.predicate, row) ? 1 : 0) +
                  (bound(tp.object, row) ? 1 : 0);
      if (score > best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best == patterns.size()) {
      out.push_back(row);
      return;
    }
    const auto& tp = patterns[best];
    auto s = bound(tp.subject, row);
    auto p = bound(tp.predicate, row);
    auto o = bound(tp.object, row);
    if (s && rdf::is_literal(*s)) return;
    std::optional<rdf::Iri> pi;
    if (p) {
      const auto* iri = std::get_if<rdf::Iri>(&*p);
      if (!iri) return;
      pi = *iri;
    }
    done[best] = true;
    for (const auto& t : g_.match(s, pi, o)) {
      Row next = row;
      if (unify(tp.subject, t.subject, next) && unify(tp.predicate, rdf::Term(t.predicate), next) &&
          unify(tp.object, t.object, next)) {
        extend(patterns, done, next, out);
      }
    }
    done[best] = false;
  }

  static bool unify(const PatternTerm& pt, const rdf::Term& value, Row& row) {
    const auto* v = std::get_if<Var>(&pt);
    if (!v) return true;
    auto [it, inserted] = row.emplace(v->name, value);
    return inserted || it->second == value;
  }

  std::optional<rdf::Term> eval(const Expr& e, const Row& row, const Rows* members) {
    switch (e.op) {
      case Expr::Op::Var: {
        auto it = row.find(e.var);
        if (it == row.end()) return std::nullopt;
        return it->second;
      }
      case Expr::Op::Const: return e.value;
      case Expr::Op::Sum: {
        if (!members) return std::nullopt;
        Numeric total{Numeric::Kind::Integer, 0, 0.0};
        for (const auto& m : *members) {
          auto v = eval(e.args[0], m, nullptr);
          auto n = v ? numeric_value(*v) : std::nullopt;
          if (!n) return std::nullopt;
          auto sum = arithmetic(Expr::Op::Add, total, *n);
          if (!sum) return std::nullopt;
          total = *sum;
        }
        return numeric_term(total);
      }
      case Expr::Op::Neg: {
        auto v = eval(e.args[0], row, members);
        auto n = v ? numeric_value(*v) : std::nullopt;
        if (!n) return std::nullopt;
        auto r = arithmetic(Expr::Op::Sub, Numeric{Numeric::Kind::Integer, 0, 0.0}, *n);
        return r ? numeric_term(*r) : std::nullopt;
      }
      case Expr::Op::Add:
      case Expr::Op::Sub:
      case Expr::Op::Mul:
      case Expr::Op::Div: {
        auto a = eval(e.args[0], row, members);
        auto b = eval(e.args[1], row, members);
        auto na = a ? numeric_value(*a) : std::nullopt;
        auto nb = b ? numeric_value(*b) : std::nullopt;
        if (!na || !nb) return std::nullopt;
        auto r = arithmetic(e.op, *na, *nb);
        return r ? numeric_term(*r) : std::nullopt;
      }
      default: {
        auto a = eval(e.args[0], row, members);
        auto b = eval(e.args[1], row, members);
        if (!a || !b) return std::nullopt;
        auto c = compare(e.op, *a, *b);
        if (!c) return std::nullopt;
        return boolean(*c);
      }
    }
  }

  const rdf::Graph& g_;
};

}  // namespace

std::optional<Numeric> numeric_value(const rdf::Term& t) {
  const auto* l = std::get_if<rdf::Literal>(&t);
  if (!l || l->language()) return std::nullopt;
  const std::string& dt = l->datatype().str();
  std::string_view lex = l->lexical();
  if (!lex.empty() && lex.front() == '+') lex.remove_prefix(1);
  const char* first = lex.data();
  const char* last = lex.data() + lex.size();
  if (dt == rdf::xsd::kInteger || dt == rdf::xsd::kGYear) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && ptr == last) return Numeric{Numeric::Kind::Integer, v, 0.0};
    double d = 0.0;
    auto [p2, e2] = std::from_chars(first, last, d);
    if (e2 == std::errc() && p2 == last) return Numeric{Numeric::Kind::Decimal, 0, d};
    return std::nullopt;
  }
  if (dt == rdf::xsd::kDecimal || dt == rdf::xsd::kDouble) {
    const auto kind = dt == rdf::xsd::kDecimal ? Numeric::Kind::Decimal : Numeric::Kind::Double;
    if (kind == Numeric::Kind::Double) {
      if (lex == "INF") return Numeric{kind, 0, HUGE_VAL};
      if (lex == "-INF") return Numeric{kind, 0, -HUGE_VAL};
      if (lex == "NaN") return Numeric{kind, 0, std::nan("")};
    }
    std::string buf(lex);
    if (!buf.empty() && buf.back() == '.') buf += '0';
    if (buf.size() > 1 && buf[0] == '.') buf.insert(0, "0");
    if (buf.size() > 2 && buf[0] == '-' && buf[1] == '.') buf.insert(1, "0");
    double d = 0.0;
    auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), d);
    if (ec != std::errc() || ptr != buf.data() + buf.size()) return std::nullopt;
    return Numeric{kind, 0, d};
  }
  return std::nullopt;
}

std::optional<rdf::Term> numeric_term(const Numeric& n) {
  switch (n.kind) {
    case Numeric::Kind::Integer: return rdf::Literal(std::to_string(n.integer), xsd_iri(rdf::xsd::kInteger));
    case Numeric::Kind::Decimal: {
      if (!std::isfinite(n.real)) return std::nullopt;
      char buf[512];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, n.real, std::chars_format::fixed);
      if (ec != std::errc()) return std::nullopt;
      std::string s(buf, ptr);
      if (s.find('.') == std::string::npos) s += ".0";
      if (s == "-0.0") s = "0.0";
      return rdf::Literal(s, xsd_iri(rdf::xsd::kDecimal));
    }
    case Numeric::Kind::Double: {
      if (std::isnan(n.real)) return rdf::Literal("NaN", xsd_iri(rdf::xsd::kDouble));
      if (std::isinf(n.real)) return rdf::Literal(n.real > 0 ? "INF" : "-INF", xsd_iri(rdf::xsd::kDouble));
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, n.real, std::chars_format::scientific);
      if (ec != std::errc()) return std::nullopt;
      std::string s(buf, ptr);
      auto e = s.find('e');
      std::string mantissa = s.substr(0, e);
      int exponent = std::stoi(s.substr(e + 1));
      if (mantissa.find('.') == std::string::npos) mantissa += ".0";
      return rdf::Literal(mantissa + "E" + std::to_string(exponent), xsd_iri(rdf::xsd::kDouble));
    }
  }
  return std::nullopt;
}

Solution evaluate(const rdf::Graph& graph, const Query& q) {
  Solution out;
  out.vars = projected_variables(q);
  for (const auto& r : Evaluator(graph).query(q)) {
    std::vector<std::optional<rdf::Term>> row;
    row.reserve(out.vars.size());
    for (const auto& v : out.vars) {
      auto it = r.find(v);
      row.push_back(it == r.end() ? std::nullopt : std::optional<rdf::Term>(it->second));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace evkg::sparql
