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

#include <set>

#include "evkg/geometry/predicates.hpp"
#include "evkg/geometry/wkt.hpp"
#include "evkg/rdf/graph.hpp"
#include "evkg/vocabulary/namespaces.hpp"

namespace evkg::testing {

/// Every (feature, zip) pair evaluated directly, with no index or bbox
/// pruning: points give sfWithin/sfContains, lines give sfCrosses.
inline std::set<rdf::Triple> brute_force_relations(const rdf::Graph& g) {
  const rdf::Iri type(ns::kRdfType);
  const rdf::Iri has_geometry(ns::kHasGeometry);
  const rdf::Iri as_wkt(ns::kAsWkt);
  auto shape = [&](const rdf::Term& s) -> std::optional<geom::Geometry> {
    for (const auto& h : g.match(s, has_geometry, std::nullopt)) {
      for (const auto& w : g.match(h.object, as_wkt, std::nullopt)) {
        return geom::parse_wkt(std::get<rdf::Literal>(w.object).lexical());
      }
    }
    return std::nullopt;
  };
  std::set<rdf::Term> zips;
  for (const auto& t : g.match(std::nullopt, type, rdf::iri(ns::kwg_ont("ZipCodeArea")))) zips.insert(t.subject);
  std::set<rdf::Term> features;
  for (const auto& t : g.match(std::nullopt, has_geometry, std::nullopt)) {
    if (!zips.count(t.subject)) features.insert(t.subject);
  }
  std::set<rdf::Triple> out;
  for (const auto& f : features) {
    const auto fs = shape(f);
    if (!fs) continue;
    for (const auto& z : zips) {
      const auto zs = shape(z);
      if (geom::dimension(*fs) == 0) {
        if (geom::sf_within(*fs, *zs)) {
          out.insert({f, rdf::Iri(ns::kSfWithin), z});
          out.insert({z, rdf::Iri(ns::kSfContains), f});
        }
      } else if (geom::dimension(*fs) == 1 && geom::sf_crosses(*fs, *zs)) {
        out.insert({f, rdf::Iri(ns::kSfCrosses), z});
      }
    }
  }
  return out;
}

/// Relation triples in `g` that link a zip with a non-administrative feature.
inline std::set<rdf::Triple> materialized_relations(const rdf::Graph& g) {
  std::set<rdf::Term> admin;
  for (const char* cls : {"AdministrativeRegion_2", "AdministrativeRegion_3"}) {
    for (const auto& t : g.match(std::nullopt, rdf::Iri(ns::kRdfType), rdf::iri(ns::kwg_ont(cls)))) {
      admin.insert(t.subject);
    }
  }
  std::set<rdf::Triple> out;
  for (const auto& p : {ns::kSfWithin, ns::kSfContains, ns::kSfCrosses}) {
    for (const auto& t : g.match(std::nullopt, rdf::Iri(p), std::nullopt)) {
      if (!admin.count(t.subject) && !admin.count(t.object)) out.insert(t);
    }
  }
  return out;
}

}  // namespace evkg::testing
