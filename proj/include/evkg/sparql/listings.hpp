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

#include <string>
#include <string_view>
#include <vector>

#include "evkg/rdf/graph.hpp"
#include "evkg/sparql/evaluator.hpp"

namespace evkg::sparql {

inline constexpr int kListingCount = 10;

/// Query text of competency listing `n` (1-based), including the
/// "Query from Listing N" placeholders. Throws std::out_of_range.
std::string_view listing_text(int n);

/// Listings referenced by placeholders in listing `n`, in order.
std::vector<int> listing_references(int n);

/// Listing text with every placeholder replaced, recursively, by the text
/// of the listing it names. The braces around a placeholder turn the
/// inlined query into a sub-select.
std::string expand_listing(int n);

Query parse_listing(int n, const rdf::PrefixTable& prefixes);

/// Expands and evaluates one of the composite listings (6, 8, 9, 10).
/// Throws std::invalid_argument for any other id.
Solution evaluate_federated_listing(const rdf::Graph& graph, int listing_id, const rdf::PrefixTable& prefixes);

}  // namespace evkg::sparql
