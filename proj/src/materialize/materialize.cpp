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

#include "evkg/materialize/materialize.hpp"

#include <map>
#include <optional>
#include <set>

#include "evkg/geometry/predicates.hpp"
#include "evkg/geometry/wkt.hpp"
#include "evkg/vocabulary/namespaces.hpp"

namespace evkg::mat {

using rdf::Iri;

namespace {

struct Located {
  rdf::Term subject;
  geom::Geometry shape;
  geom::BBox box;
};

/// The WKT geometry of `subject`, if it has exactly one usable one.
std::optional<geom::Geometry> geometry_of(const rdf::Graph& g, const rdf::Term& subject) {
  const Iri has_geometry(ns::kHasGeometry);
  const Iri as_wkt(ns::kAsWkt);
  for (const auto& link : g.match(subject, has_geometry, std::nullopt)) {
    for (const auto& w : g.match(link.object, as_wkt, std::nullopt)) {
      const auto* lit = std::get_if<rdf::Literal>(&w.object);
      if (!lit) continue;
      try {
        return geom::parse_wkt(lit->lexical());
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::set<rdf::Term> subjects_typed(const rdf::Graph& g, const std::set<Iri>& classes) {
  std::set<rdf::Term> out;
  const Iri type(ns::kRdfType);
  for (const auto& cls : classes) {
    for (const auto& t : g.match(std::nullopt, type, cls)) out.insert(t.subject);
  }
  return out;
}

}  // namespace

SpatialReport materialize_spatial_relations(rdf::Graph& graph, const vocab::OntologyRegistry& reg) {
  SpatialReport report;
  const Iri zip_class(ns::kwg_ont("ZipCodeArea"));
  const std::set<Iri> zip_classes = reg.descendants(zip_class);

  std::set<Iri> excluded = zip_classes;
  for (const char* admin : {"AdministrativeRegion_2", "AdministrativeRegion_3"}) {
    auto d = reg.descendants(Iri(ns::kwg_ont(admin)));
    excluded.insert(d.begin(), d.end());
  }
  std::set<Iri> feature_classes;
  for (const auto& c : reg.descendants(Iri(ns::geo("Feature")))) {
    if (!excluded.count(c)) feature_classes.insert(c);
  }

  std::vector<Located> zips;
  for (const auto& z : subjects_typed(graph, zip_classes)) {
    auto shape = geometry_of(graph, z);
    if (!shape || geom::dimension(*shape) != 2) {
      report.skipped_features.push_back(rdf::to_ntriples(z));
      continue;
    }
    zips.push_back({z, *shape, geom::bbox(*shape)});
  }

  std::set<rdf::Term> zip_subjects;
  for (const auto& z : zips) zip_subjects.insert(z.subject);

  const Iri within(ns::kSfWithin);
  const Iri contains(ns::kSfContains);
  const Iri crosses(ns::kSfCrosses);
  std::vector<rdf::Triple> pending;

  for (const auto& f : subjects_typed(graph, feature_classes)) {
    if (zip_subjects.count(f)) continue;
    auto shape = geometry_of(graph, f);
    if (!shape) {
      report.skipped_features.push_back(rdf::to_ntriples(f));
      continue;
    }
    const int dim = geom::dimension(*shape);
    if (dim == 2) continue;
    const geom::BBox box = geom::bbox(*shape);
    for (const auto& z : zips) {
      if (box.disjoint(z.box)) continue;
      if (dim == 0) {
        if (geom::sf_within(*shape, z.shape)) {
          pending.push_back({f, within, z.subject});
          pending.push_back({z.subject, contains, f});
        } else if (const auto* p = std::get_if<geom::Point>(&*shape)) {
          bool on_boundary = false;
          if (const auto* poly = std::get_if<geom::Polygon>(&z.shape)) {
            on_boundary = geom::locate(*p, *poly) == geom::Location::Boundary;
          } else {
            for (const auto& part : std::get<geom::MultiPolygon>(z.shape).polygons) {
              on_boundary = on_boundary || geom::locate(*p, part) == geom::Location::Boundary;
            }
          }
          if (on_boundary) report.boundary_points.emplace_back(rdf::to_ntriples(f), rdf::to_ntriples(z.subject));
        }
      } else if (geom::sf_crosses(*shape, z.shape)) {
        pending.push_back({f, crosses, z.subject});
      }
    }
  }

  for (const auto& t : pending) {
    if (!graph.insert(t)) continue;
    if (t.predicate == within) {
      ++report.within_added;
    } else if (t.predicate == contains) {
      ++report.contains_added;
    } else {
      ++report.crosses_added;
    }
  }
  return report;
}

std::size_t materialize_subclass_closure(rdf::Graph& graph, const vocab::OntologyRegistry& reg) {
  const Iri type(ns::kRdfType);
  std::vector<rdf::Triple> pending;
  for (const auto& t : graph.match(std::nullopt, type, std::nullopt)) {
    const auto* cls = std::get_if<Iri>(&t.object);
    if (!cls) continue;
    for (const auto& super : reg.ancestors(*cls)) {
      if (super != *cls) pending.push_back({t.subject, type, super});
    }
  }
  std::size_t added = 0;
  for (const auto& t : pending) added += graph.insert(t) ? 1 : 0;
  return added;
}

}  // namespace evkg::mat
