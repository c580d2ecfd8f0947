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

#include <cstddef>
#include <string>
#include <vector>

#include "evkg/rdf/graph.hpp"
#include "evkg/vocabulary/registry.hpp"

namespace evkg::mat {

struct SpatialReport {
  std::size_t within_added = 0;
  std::size_t contains_added = 0;
  std::size_t crosses_added = 0;
  /// Features with no geometry node, no WKT literal or unparsable WKT.
  std::vector<std::string> skipped_features;
  /// (feature, zip) pairs where a point feature lies on the zip boundary and
  /// is therefore assigned to neither side.
  std::vector<std::pair<std::string, std::string>> boundary_points;

  std::size_t added() const noexcept { return within_added + contains_added + crosses_added; }
};

/// Point features inside a zip area get kwg-ont:sfWithin / kwg-ont:sfContains;
/// linear features crossing a zip area get kwg-ont:sfCrosses. Features are
/// subjects typed (directly or through the registry hierarchy) with a
/// subclass of geo:Feature other than the zip and administrative region
/// classes. Idempotent.
SpatialReport materialize_spatial_relations(rdf::Graph& graph, const vocab::OntologyRegistry& reg);

/// Adds (x, rdf:type, D) for every (x, rdf:type, C) with C a registered
/// subclass of D. Returns the number of added triples. Idempotent.
std::size_t materialize_subclass_closure(rdf::Graph& graph, const vocab::OntologyRegistry& reg);

}  // namespace evkg::mat
