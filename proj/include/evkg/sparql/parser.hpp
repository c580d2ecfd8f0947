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

#include "evkg/rdf/prefixes.hpp"
#include "evkg/sparql/ast.hpp"

namespace evkg::sparql {

/// Parses a SELECT query of the supported subset. Prefixes declared in the
/// text take precedence over `defaults`. Throws QuerySyntaxError or
/// UnsupportedFeature.
Query parse_query(std::string_view text, const rdf::PrefixTable& defaults);
Query parse_query(std::string_view text);

/// Canonical text form: full IRIs, one clause per line. parse_query of the
/// result yields an equal Query.
std::string to_string(const Query& q);
std::string to_string(const Expr& e);

}  // namespace evkg::sparql
