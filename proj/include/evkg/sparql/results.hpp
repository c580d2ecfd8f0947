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
#include <vector>

#include "evkg/sparql/evaluator.hpp"

namespace evkg::sparql {

/// Rows as N-Triples term strings (empty for unbound), sorted
/// lexicographically by their tab-joined form.
std::vector<std::vector<std::string>> sorted_rows(const Solution& s);

/// Header `?a<TAB>?b`, then one line per row; unbound cells are empty.
std::string to_tsv(const Solution& s);

/// SPARQL 1.1 query results JSON, rows in to_tsv order.
std::string to_json(const Solution& s);

}  // namespace evkg::sparql
