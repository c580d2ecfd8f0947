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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "evkg/rdf/prefixes.hpp"
#include "evkg/rdf/term.hpp"

namespace evkg::rdf {

using TermId = std::uint32_t;

/// In-memory triple set with three sorted permutation indexes (SPO, POS, OSP)
/// over dictionary-encoded terms. Single writer; concurrent readers are safe
/// once loading is finished.
class Graph {
 public:
  Graph() = default;

  /// Returns true when `t` was not yet present. Throws RdfError for a
  /// literal subject.
  bool insert(const Triple& t);
  void insert_all(const Graph& other);

  bool contains(const Triple& t) const;
  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }

  /// All triples matching the bound positions (nullopt = wildcard).
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const;

  using IdCallback = std::function<void(TermId, TermId, TermId)>;
  /// Same as match() on encoded ids; the callback receives (s, p, o).
  void match_ids(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
                 const IdCallback& fn) const;

  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const { return terms_.at(id); }

  /// Every triple, in subject-predicate-object id order.
  std::vector<Triple> triples() const;

  PrefixTable& prefixes() noexcept { return prefixes_; }
  const PrefixTable& prefixes() const noexcept { return prefixes_; }

  std::size_t spo_size() const noexcept { return spo_.size(); }
  std::size_t pos_size() const noexcept { return pos_.size(); }
  std::size_t osp_size() const noexcept { return osp_.size(); }

 private:
  using Key = std::array<TermId, 3>;
  TermId intern(const Term& t);
  static void scan(const std::set<Key>& index, const Key& lo, std::size_t bound_prefix,
                   const std::function<void(const Key&)>& fn);

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::set<Key> spo_;
  std::set<Key> pos_;
  std::set<Key> osp_;
  PrefixTable prefixes_;
};

}  // namespace evkg::rdf
