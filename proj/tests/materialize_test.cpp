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

#include <gtest/gtest.h>

#include "evkg/geometry/wkt.hpp"
#include "evkg/materialize/materialize.hpp"
#include "evkg/rdf/ntriples.hpp"
#include "evkg/vocabulary/namespaces.hpp"
#include "support/fixture.hpp"
#include "support/spatial_oracle.hpp"

namespace evkg::mat {
namespace {

using rdf::Iri;

cli::IngestConfig unmaterialized() {
  auto config = cli::load_config(testing::fixture_dir() / "config.json");
  config.materialize = false;
  config.subclass_closure = false;
  return config;
}

void add_feature(rdf::Graph& g, const std::string& id, const std::string& cls, const std::optional<std::string>& wkt) {
  const rdf::Term s = rdf::iri("http://example.org/" + id);
  g.insert({s, Iri(ns::kRdfType), rdf::iri(cls)});
  if (!wkt) return;
  const rdf::Term geo = rdf::iri("http://example.org/geometry." + id);
  g.insert({s, Iri(ns::kHasGeometry), geo});
  g.insert({geo, Iri(ns::kAsWkt), rdf::typed(*wkt, geom::kWktLiteral)});
}

TEST(Spatial, FixtureEqualsBruteForce) {
  auto outcome = cli::build_graph(unmaterialized());
  rdf::Graph& g = outcome.graph;
  const auto before = testing::materialized_relations(g);
  EXPECT_TRUE(before.empty());
  const SpatialReport report = materialize_spatial_relations(g, vocab::registry());
  const auto expected = testing::brute_force_relations(g);
  const auto actual = testing::materialized_relations(g);
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(report.added(), expected.size());
  EXPECT_GT(report.crosses_added, 0u);
  EXPECT_EQ(report.within_added, report.contains_added);
}

TEST(Spatial, SecondPassAddsNothing) {
  auto outcome = cli::build_graph(unmaterialized());
  materialize_spatial_relations(outcome.graph, vocab::registry());
  const std::string once = rdf::serialize_ntriples(outcome.graph);
  const SpatialReport again = materialize_spatial_relations(outcome.graph, vocab::registry());
  EXPECT_EQ(again.added(), 0u);
  EXPECT_EQ(rdf::serialize_ntriples(outcome.graph), once);
}

TEST(Spatial, CrossesExcludesWithinOnFixturePairs) {
  const auto outcome = testing::build_fixture();
  const rdf::Graph& g = outcome.graph;
  auto shape = [&](const rdf::Term& s) {
    const auto h = g.match(s, Iri(ns::kHasGeometry), std::nullopt).front().object;
    return geom::parse_wkt(std::get<rdf::Literal>(g.match(h, Iri(ns::kAsWkt), std::nullopt).front().object).lexical());
  };
  std::size_t pairs = 0;
  for (const auto& line : g.match(std::nullopt, Iri(ns::kRdfType), rdf::iri(ns::ev_ont("TransmissionLine")))) {
    const auto l = shape(line.subject);
    for (const auto& zip : g.match(std::nullopt, Iri(ns::kRdfType), rdf::iri(ns::kwg_ont("ZipCodeArea")))) {
      const auto z = shape(zip.subject);
      EXPECT_FALSE(geom::sf_crosses(l, z) && geom::sf_within(l, z));
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 8u * 22u);
}

TEST(Spatial, BoundaryStationBelongsToNoZip) {
  auto outcome = cli::build_graph(unmaterialized());
  const SpatialReport report = materialize_spatial_relations(outcome.graph, vocab::registry());
  const std::string nj11 = "<" + ns::evr("chargingstation.NJ11") + ">";
  std::set<std::string> zips;
  for (const auto& [feature, zip] : report.boundary_points) {
    if (feature == nj11) zips.insert(zip);
  }
  EXPECT_EQ(zips, (std::set<std::string>{"<" + ns::evr("zipcode.07030") + ">", "<" + ns::evr("zipcode.07302") + ">"}));
  EXPECT_TRUE(outcome.graph.match(rdf::iri(ns::evr("chargingstation.NJ11")), Iri(ns::kSfWithin), std::nullopt).empty());
}

TEST(Spatial, FeaturesWithoutGeometryAreSkipped) {
  rdf::Graph g;
  add_feature(g, "zip", ns::kwg_ont("ZipCodeArea"), "POLYGON ((0 0, 4 0, 4 4, 0 4, 0 0))");
  add_feature(g, "in", ns::ev_ont("PublicChargingStation"), "POINT (1 1)");
  add_feature(g, "out", ns::ev_ont("Substation"), "POINT (5 5)");
  add_feature(g, "bare", ns::ev_ont("PowerPlant"), std::nullopt);
  add_feature(g, "line", ns::ev_ont("TransmissionLine"), "LINESTRING (-1 2, 2 2)");
  add_feature(g, "inner", ns::ev_ont("TransmissionLine"), "LINESTRING (1 1, 2 2)");
  const SpatialReport r = materialize_spatial_relations(g, vocab::registry());
  EXPECT_EQ(r.within_added, 1u);
  EXPECT_EQ(r.contains_added, 1u);
  EXPECT_EQ(r.crosses_added, 1u);
  EXPECT_EQ(r.skipped_features, (std::vector<std::string>{"<http://example.org/bare>"}));
  EXPECT_TRUE(g.contains({rdf::iri("http://example.org/line"), Iri(ns::kSfCrosses), rdf::iri("http://example.org/zip")}));
  EXPECT_TRUE(g.contains({rdf::iri("http://example.org/zip"), Iri(ns::kSfContains), rdf::iri("http://example.org/in")}));
}

TEST(Closure, AddsAncestorsOnce) {
  rdf::Graph g;
  const rdf::Term s = rdf::iri("http://example.org/s");
  g.insert({s, Iri(ns::kRdfType), rdf::iri(ns::ev_ont("PublicChargingStation"))});
  const std::size_t added = materialize_subclass_closure(g, vocab::registry());
  const auto ancestors = vocab::registry().ancestors(Iri(ns::ev_ont("PublicChargingStation")));
  EXPECT_EQ(added, ancestors.size() - 1);
  for (const auto& a : ancestors) EXPECT_TRUE(g.contains({s, Iri(ns::kRdfType), a}));
  EXPECT_EQ(materialize_subclass_closure(g, vocab::registry()), 0u);
}

}  // namespace
}  // namespace evkg::mat
