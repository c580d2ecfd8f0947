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

#include "evkg/rdf/graph.hpp"

#include <limits>

namespace evkg::rdf {

TermId Graph::intern(const Term& t) {
  auto it = ids_.find(t);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(t);
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> Graph::lookup(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool Graph::insert(const Triple& t) {
  check_triple(t);
  TermId s = intern(t.subject);
  TermId p = intern(Term(t.predicate));
  TermId o = intern(t.object);
  if (!spo_.insert({s, p, o}).second) return false;
  pos_.insert({p, o, s});
  osp_.insert({o, s, p});
  return true;
}

void Graph::insert_all(const Graph& other) {
  for (const auto& t : other.triples()) insert(t);
  for (const auto& [prefix, ns] : other.prefixes().entries()) {
    if (!prefixes_.find(prefix)) prefixes_.add(prefix, ns);
  }
}

bool Graph::contains(const Triple& t) const {
  auto s = lookup(t.subject);
  auto p = lookup(Term(t.predicate));
  auto o = lookup(t.object);
  return s && p && o && spo_.count({*s, *p, *o}) > 0;
}

void Graph::scan(const std::set<Key>& index, const Key& lo, std::size_t bound_prefix,
                 const std::function<void(const Key&)>& fn) {
  constexpr TermId kMax = std::numeric_limits<TermId>::max();
  Key start = lo;
  Key stop = lo;
  for (std::size_t i = bound_prefix; i < 3; ++i) {
    start[i] = 0;
    stop[i] = kMax;
  }
  auto first = index.lower_bound(start);
  auto last = index.upper_bound(stop);
  for (auto it = first; it != last; ++it) fn(*it);
}

void Graph::match_ids(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
                      const IdCallback& fn) const {
  // Pick the permutation whose leading positions are bound; filter the rest.
  if (s && p) {
    scan(spo_, {*s, *p, 0}, 2, [&](const Key& k) {
      if (!o || k[2] == *o) fn(k[0], k[1], k[2]);
    });
  } else if (s && o) {
    scan(osp_, {*o, *s, 0}, 2, [&](const Key& k) { fn(k[1], k[2], k[0]); });
  } else if (s) {
    scan(spo_, {*s, 0, 0}, 1, [&](const Key& k) { fn(k[0], k[1], k[2]); });
  } else if (p) {
    scan(pos_, {*p, o.value_or(0), 0}, o ? 2 : 1, [&](const Key& k) { fn(k[2], k[0], k[1]); });
  } else if (o) {
    scan(osp_, {*o, 0, 0}, 1, [&](const Key& k) { fn(k[1], k[2], k[0]); });
  } else {
    for (const auto& k : spo_) fn(k[0], k[1], k[2]);
  }
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                 const std::optional<Term>& o) const {
  std::optional<TermId> sid, pid, oid;
  if (s) {
    sid = lookup(*s);
    if (!sid) return {};
  }
  if (p) {
    pid = lookup(Term(*p));
    if (!pid) return {};
  }
  if (o) {
    oid = lookup(*o);
    if (!oid) return {};
  }
  std::vector<Triple> out;
  match_ids(sid, pid, oid, [&](TermId a, TermId b, TermId c) {
    out.push_back(Triple{terms_[a], std::get<Iri>(terms_[b]), terms_[c]});
  });
  return out;
}

std::vector<Triple> Graph::triples() const { return match(std::nullopt, std::nullopt, std::nullopt); }

}  // namespace evkg::rdf
