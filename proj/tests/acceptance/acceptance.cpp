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

// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "evkg/geometry/predicates.hpp"
#include "evkg/geometry/wkt.hpp"
#include "evkg/ingest/csv.hpp"
#include "evkg/materialize/materialize.hpp"
#include "evkg/rdf/ntriples.hpp"
#include "evkg/sparql/listings.hpp"
#include "evkg/sparql/parser.hpp"
#include "evkg/vocabulary/namespaces.hpp"
#include "support/fixture.hpp"
#include "support/geometry_oracle.hpp"
#include "support/listing_iris.hpp"
#include "support/reference_eval.hpp"
#include "support/scenario_oracle.hpp"
#include "support/spatial_oracle.hpp"

namespace {

using namespace evkg;
using rdf::Iri;
namespace fs = std::filesystem;

constexpr double kListingBudgetSeconds = 5.0;
constexpr double kRandomBudgetSeconds = 60.0;
constexpr int kRandomCases = 500;
constexpr std::size_t kRandomMaxTriples = 200;
constexpr std::size_t kRandomMaxPatterns = 4;
constexpr int kDualityPairs = 1000;
constexpr int kCrossingCases = 400;
constexpr double kEdgeMargin = 1e-9;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const rdf::Graph& fixture() {
  static const rdf::Graph g = testing::build_fixture().graph;
  return g;
}

cli::IngestConfig unmaterialized() {
  auto config = cli::load_config(testing::fixture_dir() / "config.json");
  config.materialize = false;
  config.subclass_closure = false;
  return config;
}

Verdict listing_conformance() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const rdf::Graph g = rdf::parse_ntriples(ingest::read_file(testing::fixture_dir() / "evkg.nt"));
  int matched = 0;
  for (int n = 1; n <= sparql::kListingCount; ++n) {
    char name[32];
    std::snprintf(name, sizeof name, "listing%02d.tsv", n);
    const std::string expected = ingest::read_file(testing::data_dir() / "expected" / name);
    const std::string actual = cli::run_listing_tsv(g, n);
    v.require(actual == expected, std::string(name) + " differs");
    matched += actual == expected;
  }
  const double t = seconds_since(start);
  v.require(t < kListingBudgetSeconds, "took " + fmt(t) + " s");
  v.detail = std::to_string(matched) + "/10 byte-identical in " + fmt(t) + " s" + (v.pass ? "" : "; " + v.detail);
  return v;
}

Verdict random_oracle() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(20240601);
  int agree = 0;
  for (int i = 0; i < kRandomCases; ++i) {
    const rdf::Graph g = testing::random_graph(rng, kRandomMaxTriples);
    const testing::RefQuery q = testing::random_query(rng, kRandomMaxPatterns);
    const auto expected = testing::canonical(testing::reference_evaluate(g.triples(), q));
    const auto s = sparql::evaluate(g, sparql::parse_query(testing::render(q), rdf::PrefixTable{}));
    std::vector<testing::RefRow> rows(s.rows.begin(), s.rows.end());
    if (testing::canonical(rows) == expected) {
      ++agree;
    } else if (v.pass) {
      v.require(false, "case " + std::to_string(i) + " differs");
    }
  }
  const double t = seconds_since(start);
  v.require(t < kRandomBudgetSeconds, "took " + fmt(t) + " s");
  v.detail = std::to_string(agree) + "/" + std::to_string(kRandomCases) + " agree in " + fmt(t) + " s" +
             (v.pass ? "" : "; " + v.detail);
  return v;
}

Verdict spatial_predicates() {
  Verdict v;
  using namespace geom;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int duality_fail = 0;
  int oracle_fail = 0;
  int oracle_checked = 0;
  for (int i = 0; i < kDualityPairs; ++i) {
    const Polygon poly = testing::random_star(rng, 0, 0, 1.0, i % 3 == 0);
    const Point p{u(rng), u(rng)};
    const bool within = sf_within(Geometry(p), Geometry(poly));
    duality_fail += within != sf_contains(Geometry(poly), Geometry(p));
    if (testing::distance_to_rings(p, poly) >= kEdgeMargin) {
      ++oracle_checked;
      oracle_fail += within != testing::ray_cast_inside(p, poly);
    }
  }
  std::mt19937 lrng(99);
  std::uniform_real_distribution<double> w(-2, 2);
  int crossing_fail = 0;
  for (int i = 0; i < kCrossingCases; ++i) {
    const Polygon poly = testing::random_star(lrng, 0, 0, 1.0, i % 4 == 0);
    LineString line{{{w(lrng), w(lrng)}, {w(lrng), w(lrng)}}};
    if (i % 2) line.points.push_back({w(lrng), w(lrng)});
    const auto s = testing::sample_line(line, poly, 4000, kEdgeMargin);
    crossing_fail += sf_crosses(Geometry(line), Geometry(poly)) != (s.some_inside && s.some_outside);
  }

  const rdf::Graph& g = fixture();
  auto shape = [&g](const rdf::Term& s) {
    const auto h = g.match(s, Iri(ns::kHasGeometry), std::nullopt).front().object;
    return parse_wkt(std::get<rdf::Literal>(g.match(h, Iri(ns::kAsWkt), std::nullopt).front().object).lexical());
  };
  int pairs = 0;
  int exclusivity_fail = 0;
  for (const auto& line : g.match(std::nullopt, Iri(ns::kRdfType), rdf::iri(ns::ev_ont("TransmissionLine")))) {
    const auto l = shape(line.subject);
    for (const auto& zip : g.match(std::nullopt, Iri(ns::kRdfType), rdf::iri(ns::kwg_ont("ZipCodeArea")))) {
      const auto z = shape(zip.subject);
      exclusivity_fail += sf_crosses(l, z) && sf_within(l, z);
      ++pairs;
    }
  }
  v.require(duality_fail == 0, std::to_string(duality_fail) + " duality failures");
  v.require(oracle_fail == 0, std::to_string(oracle_fail) + " ray-cast disagreements");
  v.require(crossing_fail == 0, std::to_string(crossing_fail) + " sampling disagreements");
  v.require(exclusivity_fail == 0, std::to_string(exclusivity_fail) + " crosses+within pairs");
  v.require(pairs > 0, "no fixture line/zip pairs");
  const std::string summary = std::to_string(kDualityPairs) + " duality pairs, " + std::to_string(oracle_checked) +
                              " ray-cast checks, " + std::to_string(kCrossingCases) + " line samples, " +
                              std::to_string(pairs) + " fixture line/zip pairs";
  v.detail = summary + (v.pass ? "" : "; " + v.detail);
  return v;
}

Verdict materialization() {
  Verdict v;
  auto outcome = cli::build_graph(unmaterialized());
  rdf::Graph& g = outcome.graph;
  const auto report = mat::materialize_spatial_relations(g, vocab::registry());
  const auto expected = testing::brute_force_relations(g);
  const auto actual = testing::materialized_relations(g);
  v.require(actual == expected, "materialized " + std::to_string(actual.size()) + " vs brute force " +
                                    std::to_string(expected.size()));
  const auto again = mat::materialize_spatial_relations(g, vocab::registry());
  v.require(again.added() == 0, "second pass added " + std::to_string(again.added()));
  const std::string summary = std::to_string(report.added()) + " relation triples equal brute force; second pass adds " +
                              std::to_string(again.added());
  v.detail = summary + (v.pass ? "" : "; " + v.detail);
  return v;
}

std::optional<rdf::Term> object(const rdf::Graph& g, const rdf::Term& s, const Iri& p) {
  auto m = g.match(s, p, std::nullopt);
  if (m.size() != 1) return std::nullopt;
  return m.front().object;
}

Verdict conservation() {
  Verdict v;
  const auto places = ingest::parse_csv(ingest::read_file(testing::fixture_dir() / "places.csv"));
  std::map<std::string, std::string> state_of;
  for (const auto& r : places.rows) state_of[r.fields[places.column("zip")]] = r.fields[places.column("state")];
  const auto regs = ingest::parse_csv(ingest::read_file(testing::fixture_dir() / "registrations.csv"));
  std::map<std::pair<std::string, std::string>, long> raw;
  for (const auto& r : regs.rows) {
    const std::string& vin = r.fields[regs.column("vin8")];
    const std::string& zip = r.fields[regs.column("zip")];
    if (vin.size() != 8 || !state_of.count(zip)) continue;
    ++raw[{state_of[zip], r.fields[regs.column("registration_year")]}];
  }

  const rdf::Graph& g = fixture();
  const Iri ev_amount(ns::ev_ont("hasAmount"));
  std::map<std::pair<std::string, std::string>, long> summed;
  bool found_36 = false;
  for (const auto& t : g.match(std::nullopt, Iri(ns::kRdfType),
                               rdf::iri(ns::ev_ont("ElectricVehicleRegistrationCollection")))) {
    const auto zip = object(g, t.subject, Iri(ns::ev_ont("hasSpatialScope")));
    const auto year = object(g, t.subject, Iri(ns::ev_ont("hasTemporalScope")));
    const auto amount = object(g, t.subject, ev_amount);
    if (!zip || !year || !amount) {
      v.require(false, "incomplete collection");
      continue;
    }
    std::string state;
    for (const auto& w : g.match(*zip, Iri(ns::kSfWithin), std::nullopt)) {
      if (g.contains({w.object, Iri(ns::kRdfType), rdf::iri(ns::kwg_ont("AdministrativeRegion_2"))})) {
        state = std::get<rdf::Literal>(*object(g, w.object, Iri(ns::kRdfsLabel))).lexical();
      }
    }
    const long n = std::stol(std::get<rdf::Literal>(*amount).lexical());
    summed[{state, std::get<rdf::Literal>(*year).lexical()}] += n;

    const auto product = object(g, t.subject, Iri(ns::ev_ont("hasProductInfo")));
    if (n == 36 && *zip == rdf::iri(ns::evr("zipcode.07677")) && *year == rdf::typed("2019", rdf::xsd::kGYear) && product) {
      const auto model = object(g, *product, Iri(ns::ev_ont("hasModelType")));
      const auto maker = object(g, *product, Iri(ns::ev_ont("hasManufacturer")));
      found_36 = model && maker &&
                 object(g, *model, Iri(ns::ev_ont("hasModelYear"))) == rdf::typed("2018", rdf::xsd::kGYear) &&
                 object(g, *maker, Iri(ns::kRdfsLabel)) == rdf::literal("BMW of North America Inc.") &&
                 g.contains({*product, Iri(ns::ev_ont("hasMatchableConnectorType")),
                             rdf::iri(ns::evr("connectortype.J1772COMBO"))}) &&
                 g.contains({*product, Iri(ns::ev_ont("hasMatchableConnectorType")),
                             rdf::iri(ns::evr("connectortype.J1772"))});
    }
  }
  long total = 0;
  for (const auto& [k, n] : raw) total += n;
  v.require(summed == raw, "per (state, year) sums differ from raw record counts");
  v.require(found_36, "36-record collection not found");
  const std::string summary = std::to_string(raw.size()) + " (state, year) cells, " + std::to_string(total) +
                              " records conserved; 36-record collection present";
  v.detail = summary + (v.pass ? "" : "; " + v.detail);
  return v;
}

Verdict round_trip() {
  Verdict v;
  const std::string first = rdf::serialize_ntriples(testing::build_fixture().graph);
  const std::string second = rdf::serialize_ntriples(testing::build_fixture().graph);
  v.require(first == second, "two ingests differ");
  const std::string reexport = rdf::serialize_ntriples(rdf::parse_ntriples(first));
  v.require(reexport == first, "export/import/export differs");
  v.require(ingest::read_file(testing::fixture_dir() / "evkg.nt") == first, "committed snapshot is stale");
  v.detail = std::to_string(first.size()) + " bytes identical across ingest, re-ingest and re-export" +
             (v.pass ? "" : "; " + v.detail);
  return v;
}

Verdict scenarios() {
  Verdict v;
  const testing::ScenarioOracle oracle(testing::fixture_dir());
  const rdf::Graph& g = fixture();
  auto local = [](const std::optional<rdf::Term>& t) {
    const std::string& iri = std::get<rdf::Iri>(*t).str();
    return iri.substr(iri.rfind('.') + 1);
  };
  auto run = [&g](int n) { return sparql::evaluate(g, sparql::parse_listing(n, vocab::registry().prefixes())); };
  auto col = [](const sparql::Solution& s, const std::string& var) {
    return static_cast<std::size_t>(std::find(s.vars.begin(), s.vars.end(), var) - s.vars.begin());
  };

  const auto l3 = run(3);
  std::set<std::pair<std::string, std::string>> stations;
  for (const auto& r : l3.rows) stations.insert({local(r[col(l3, "co")]), local(r[col(l3, "station")])});
  const auto expected_stations = oracle.target_stations();
  v.require(stations == expected_stations, "Q3 station set differs from recomputation");
  v.require(expected_stations == std::set<std::pair<std::string, std::string>>{{"CHAdeMO", "S1"}, {"CHAdeMO", "S7"}},
            "Q3 recomputation is not {S1, S7} x CHAdeMO");

  auto zips = [&](int n) {
    const auto s = run(n);
    std::set<std::string> out;
    for (const auto& r : s.rows) out.insert(local(r[col(s, "zipcode")]));
    return out;
  };
  const auto low = zips(9);
  const auto high = zips(10);
  v.require(low == oracle.low_share_zips(), "Listing 9 zips differ from recomputation");
  v.require(high == oracle.high_adoption_zips(), "Listing 10 zips differ from recomputation");
  std::set<std::string> selected;
  for (const auto& z : low) {
    if (high.count(z)) selected.insert(z);
  }
  v.require(selected == oracle.selected_zips(), "Q6 selection differs from recomputation");
  v.require(selected == std::set<std::string>{"07030", "08901"}, "Q6 selection is not {07030, 08901}");
  v.detail = "Q3 {S1, S7} x CHAdeMO; Q6 {07030, 08901}; both recomputed from CSVs" + (v.pass ? "" : "; " + v.detail);
  return v;
}

Verdict vocabulary() {
  Verdict v;
  const auto& reg = vocab::registry();
  const rdf::Graph& g = fixture();
  int unresolved = 0;
  for (int n = 1; n <= sparql::kListingCount; ++n) {
    testing::ListingIris iris;
    testing::collect_iris(sparql::parse_listing(n, reg.prefixes()), iris);
    for (const auto& p : iris.predicates) unresolved += reg.find_property(p) == nullptr;
    for (const auto& c : iris.classes) unresolved += reg.find_class(c) == nullptr;
    for (const auto& r : iris.resources) unresolved += g.match(rdf::Term(r), std::nullopt, std::nullopt).empty();
  }
  v.require(unresolved == 0, std::to_string(unresolved) + " listing IRIs unresolved");
  const auto violations = vocab::validate_instances(g, reg);
  v.require(violations.empty(), std::to_string(violations.size()) + " validation violations");

  // recount type triples straight from the snapshot text
  const std::string text = rdf::serialize_ntriples(g);
  const std::regex re(R"(^(<[^>]*>) <http://www\.w3\.org/1999/02/22-rdf-syntax-ns#type> <([^>]*)> \.$)");
  std::map<std::string, std::set<std::string>> typed;
  std::istringstream in(text);
  std::smatch m;
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line); ++lines) {
    if (std::regex_match(line, m, re)) typed[m[2]].insert(m[1]);
  }
  const cli::Stats stats = cli::compute_stats(g, reg);
  for (const auto& row : stats.classes) {
    const std::string iri = row.out_of_scope ? ns::kwg_ont(row.label) : ns::ev_ont(row.label);
    const auto it = typed.find(iri);
    const std::size_t expected = it == typed.end() ? 0 : it->second.size();
    v.require(row.count == expected, row.label + " " + std::to_string(row.count) + " vs recount " +
                                         std::to_string(expected));
  }
  std::set<std::string> entities;
  for (const auto& [cls, subjects] : typed) {
    if (reg.find_class(Iri(cls))) entities.insert(subjects.begin(), subjects.end());
  }
  v.require(stats.statements == lines, "statement total differs from line count");
  v.require(stats.entities == entities.size(), "entity total differs from recount");
  v.require(stats.properties == reg.properties().size() && stats.class_count == reg.classes().size(),
            "registry totals differ");
  v.detail = "listing IRIs resolve, " + std::to_string(violations.size()) + " violations, stats agree with recount (" +
             std::to_string(reg.classes().size()) + " classes, " + std::to_string(reg.properties().size()) +
             " properties)" + (v.pass ? "" : "; " + v.detail);
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"1 listing conformance", listing_conformance},
      {"2 query engine oracle equivalence", random_oracle},
      {"3 spatial predicate correctness", spatial_predicates},
      {"4 materialization equivalence", materialization},
      {"5 ingestion conservation", conservation},
      {"6 round-trip determinism", round_trip},
      {"7 competency-question scenarios", scenarios},
      {"8 vocabulary completeness", vocabulary},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << ": " << v.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
