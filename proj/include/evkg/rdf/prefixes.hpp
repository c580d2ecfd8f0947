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
#include <stdexcept>
#include <string>
#include <string_view>

#include "evkg/rdf/term.hpp"

namespace evkg::rdf {

class UnknownPrefixError : public RdfError {
 public:
  explicit UnknownPrefixError(std::string prefix)
      : RdfError("unknown prefix '" + prefix + "'"), prefix_(std::move(prefix)) {}
  const std::string& prefix() const noexcept { return prefix_; }

 private:
  std::string prefix_;
};

/// True when `local` may appear after the colon of a prefixed name as this
/// toolkit writes them: [A-Za-z0-9_-] and interior dots.
bool is_valid_local_name(std::string_view local);
bool is_valid_prefix_name(std::string_view prefix);

/// prefix -> namespace IRI.
class PrefixTable {
 public:
  void add(std::string prefix, std::string ns);
  std::optional<std::string> find(std::string_view prefix) const;
  bool empty() const noexcept { return table_.empty(); }

  /// "ev-ont:ChargingStation" -> <ns>ChargingStation. Throws UnknownPrefixError.
  Iri expand(std::string_view curie) const;

  /// Longest-namespace match; falls back to "<iri>" when no prefix applies
  /// or the remainder is not a valid local name.
  std::string compact(const Iri& iri) const;

  const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
    return table_;
  }

 private:
  std::map<std::string, std::string, std::less<>> table_;
};

}  // namespace evkg::rdf
