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

#include "evkg/rdf/prefixes.hpp"

#include <cctype>

namespace evkg::rdf {

namespace {
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
}  // namespace

bool is_valid_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (local.front() == '.' || local.back() == '.' || local.front() == '-') return false;
  for (char c : local) {
    if (!name_char(c) && c != '.') return false;
  }
  return true;
}

bool is_valid_prefix_name(std::string_view prefix) {
  if (prefix.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(prefix.front()))) return false;
  if (prefix.back() == '.') return false;
  for (char c : prefix) {
    if (!name_char(c) && c != '.') return false;
  }
  return true;
}

void PrefixTable::add(std::string prefix, std::string ns) {
  if (!is_valid_prefix_name(prefix)) throw RdfError("invalid prefix name '" + prefix + "'");
  Iri check(ns);  // validates the namespace IRI
  table_[std::move(prefix)] = std::move(ns);
}

std::optional<std::string> PrefixTable::find(std::string_view prefix) const {
  auto it = table_.find(prefix);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

Iri PrefixTable::expand(std::string_view curie) const {
  auto colon = curie.find(':');
  if (colon == std::string_view::npos) {
    throw RdfError("not a prefixed name: '" + std::string(curie) + "'");
  }
  auto prefix = curie.substr(0, colon);
  auto it = table_.find(prefix);
  if (it == table_.end()) throw UnknownPrefixError(std::string(prefix));
  return Iri(it->second + std::string(curie.substr(colon + 1)));
}

std::string PrefixTable::compact(const Iri& iri) const {
  const std::string& s = iri.str();
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : table_) {
    const std::string& ns = entry.second;
    if (s.size() >= ns.size() && s.compare(0, ns.size(), ns) == 0 &&
        is_valid_local_name(std::string_view(s).substr(ns.size()))) {
      if (best == nullptr || ns.size() > best->second.size()) best = &entry;
    }
  }
  if (best == nullptr) return "<" + s + ">";
  return best->first + ":" + s.substr(best->second.size());
}

}  // namespace evkg::rdf
