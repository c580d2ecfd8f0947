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

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "evkg/ingest/csv.hpp"
#include "evkg/materialize/materialize.hpp"
#include "evkg/rdf/ntriples.hpp"
#include "evkg/vocabulary/registry.hpp"
#include "support/fixture.hpp"

namespace evkg::cli {
namespace {

namespace fs = std::filesystem;
using testing::data_dir;
using testing::fixture_dir;
using testing::scratch_dir;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation evkg(std::vector<std::string> args) {
  args.insert(args.begin(), "evkg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) { return ingest::read_file(p); }

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Fixture config with absolute inputs and the snapshot written to `dir`.
fs::path fixture_config(const fs::path& dir, const std::string& registrations = "") {
  const fs::path fx = fixture_dir();
  std::string json = "{\n";
  json += "  \"registrations\": \"" + (registrations.empty() ? (fx / "registrations.csv").string() : registrations) + "\",\n";
  json += "  \"stations\": \"" + (fx / "stations.csv").string() + "\",\n";
  json += "  \"transmission\": \"" + (fx / "transmission.csv").string() + "\",\n";
  json += "  \"places\": \"" + (fx / "places.csv").string() + "\",\n";
  json += "  \"output\": \"evkg.nt\",\n  \"materialize\": true,\n  \"subclass_closure\": true\n}\n";
  spit(dir / "config.json", json);
  return dir / "config.json";
}

/// Snapshot of the fixture built through the CLI once per test binary.
const fs::path& fixture_snapshot() {
  static const fs::path path = [] {
    const fs::path dir = scratch_dir("cli-fixture");
    const auto r = evkg({"ingest", "-c", fixture_config(dir).string()});
    EXPECT_EQ(r.code, kOk) << r.err << r.out;
    return dir / "evkg.nt";
  }();
  return path;
}

TEST(Ingest, FixtureBuildsWithoutViolations) {
  const fs::path dir = scratch_dir("ingest-ok");
  const auto r = evkg({"ingest", "-c", fixture_config(dir).string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("validation violations: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("stations: "), std::string::npos);
  EXPECT_NE(r.out.find("entities by class:"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "evkg.nt"));
}

TEST(Ingest, MissingInputExitsTwoAndNamesPath) {
  const fs::path dir = scratch_dir("ingest-missing");
  const std::string absent = (dir / "no-such-registrations.csv").string();
  const auto r = evkg({"ingest", "-c", fixture_config(dir, absent).string()});
  EXPECT_EQ(r.code, kIoError);
  EXPECT_NE(r.err.find(absent), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir / "evkg.nt"));
}

TEST(Ingest, MissingConfigAndMalformedCsvExitTwo) {
  const fs::path dir = scratch_dir("ingest-bad");
  EXPECT_EQ(evkg({"ingest", "-c", (dir / "absent.json").string()}).code, kIoError);
  spit(dir / "broken.csv", "vin8,zip\n\"unterminated,07030\n");
  const auto r = evkg({"ingest", "-c", fixture_config(dir, (dir / "broken.csv").string()).string()});
  EXPECT_EQ(r.code, kIoError);
  EXPECT_NE(r.err.find("broken.csv"), std::string::npos) << r.err;
}

TEST(Ingest, HeaderOnlyRegistrationsGiveNoCollections) {
  const fs::path dir = scratch_dir("ingest-header-only");
  const std::string header = slurp(fixture_dir() / "registrations.csv").substr(0, slurp(fixture_dir() / "registrations.csv").find('\n') + 1);
  spit(dir / "registrations.csv", header);
  const auto r = evkg({"ingest", "-c", fixture_config(dir, (dir / "registrations.csv").string()).string()});
  ASSERT_EQ(r.code, kOk) << r.err << r.out;
  EXPECT_NE(r.out.find("registrations: 0 rows loaded, 0 skipped"), std::string::npos);
  EXPECT_EQ(slurp(dir / "evkg.nt").find("ElectricVehicleRegistrationCollection>"), std::string::npos);
}

TEST(Query, ListingOneReturnsOneRow) {
  const fs::path dir = scratch_dir("query-l1");
  spit(dir / "l1.rq", evkg({"listing", "-n", "1"}).out);
  const auto r = evkg({"query", "-i", fixture_snapshot().string(), "-q", (dir / "l1.rq").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2) << r.out;
  EXPECT_NE(r.out.find("Leaf"), std::string::npos) << r.out;
}

TEST(Query, JsonFormat) {
  const auto r = evkg({"query", "-i", fixture_snapshot().string(), "-q", (data_dir() / "queries/listing01.rq").string(),
                       "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("\"bindings\""), std::string::npos);
}

TEST(Query, ErrorsExitThreeWithPosition) {
  const fs::path dir = scratch_dir("query-bad");
  spit(dir / "bad.rq", "SELECT ?s WHERE {\n  ?s ?p \n}\n");
  auto r = evkg({"query", "-i", fixture_snapshot().string(), "-q", (dir / "bad.rq").string()});
  EXPECT_EQ(r.code, kQueryError);
  EXPECT_TRUE(std::regex_search(r.err, std::regex("line 3"))) << r.err;
  spit(dir / "unsupported.rq", "SELECT ?s WHERE { ?s ?p ?o } LIMIT 3\n");
  r = evkg({"query", "-i", fixture_snapshot().string(), "-q", (dir / "unsupported.rq").string()});
  EXPECT_EQ(r.code, kQueryError);
  r = evkg({"query", "-i", (dir / "missing.nt").string(), "-q", (dir / "bad.rq").string()});
  EXPECT_EQ(r.code, kIoError);
}

TEST(Cq, EveryQuestionPassesOnFixture) {
  for (int q = 1; q <= 6; ++q) {
    const fs::path out = scratch_dir("cq-" + std::to_string(q));
    const auto r = evkg({"cq", "-i", fixture_snapshot().string(), "-q", std::to_string(q), "--out", out.string()});
    EXPECT_EQ(r.code, kOk) << r.out;
    EXPECT_NE(r.out.find("Q" + std::to_string(q) + ": PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("vacuous"), std::string::npos);
  }
}

TEST(Cq, PlotSeriesFiles) {
  const fs::path out = scratch_dir("cq-plots");
  for (const char* q : {"4", "5", "6"}) {
    ASSERT_EQ(evkg({"cq", "-i", fixture_snapshot().string(), "-q", q, "--out", out.string()}).code, kOk);
  }
  EXPECT_EQ(slurp(out / "q6_selected_zips.csv"), "zip\n07030\n08901\n");
  const std::string q4 = slurp(out / "q4_dcfc_per_ev_by_year.csv");
  EXPECT_EQ(q4.substr(0, q4.find('\n')), "year,connector,dcfc_count,ev_count,dcfc_per_ev");
  const std::string q5 = slurp(out / "q5_ccs_registrations_by_zip.csv");
  EXPECT_NE(q5.find("07030"), std::string::npos);
  EXPECT_TRUE(fs::exists(out / "q5_ccs_chargers_per_ev_by_zip.csv"));
  EXPECT_TRUE(fs::exists(out / "listing07.tsv"));
}

TEST(Cq, EmptyGraphIsAVacuousPass) {
  const fs::path dir = scratch_dir("cq-empty");
  spit(dir / "empty.nt", "");
  fs::create_directories(dir / "expected");
  spit(dir / "expected/listing01.tsv", "?lev\n");
  const auto r = evkg({"cq", "-i", (dir / "empty.nt").string(), "-q", "1", "--expected", (dir / "expected").string()});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("listing 1: PASS (vacuous pass: empty result matches empty expectation)"), std::string::npos)
      << r.out;
}

TEST(Cq, MismatchFailsWithUnifiedDiff) {
  const fs::path dir = scratch_dir("cq-mismatch");
  fs::create_directories(dir / "expected");
  std::string expected = slurp(data_dir() / "expected/listing03.tsv");
  expected += "<http://example.org/extra>\n";
  spit(dir / "expected/listing03.tsv", expected);
  const auto r = evkg({"cq", "-i", fixture_snapshot().string(), "-q", "3", "--expected", (dir / "expected").string()});
  EXPECT_EQ(r.code, kCqFailure);
  EXPECT_NE(r.out.find("listing 3: FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("--- "), std::string::npos);
  EXPECT_NE(r.out.find("+++ actual"), std::string::npos);
  EXPECT_NE(r.out.find("@@"), std::string::npos);
  EXPECT_NE(r.out.find("\n-<http://example.org/extra>\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Q3: FAIL"), std::string::npos);
}

TEST(UnifiedDiff, EqualTextsGiveNothing) {
  EXPECT_EQ(unified_diff("a\nb\n", "a\nb\n", "x", "y"), "");
  const std::string d = unified_diff("a\nb\nc\n", "a\nc\nd\n", "x", "y");
  EXPECT_NE(d.find("\n-b\n"), std::string::npos) << d;
  EXPECT_NE(d.find("\n+d\n"), std::string::npos) << d;
  EXPECT_NE(d.find("\n a\n"), std::string::npos) << d;
}

/// Counts distinct subjects per class IRI by scanning snapshot lines for
/// rdf:type triples. Works on the closed fixture, where every entity carries
/// its superclass types explicitly.
std::map<std::string, std::set<std::string>> grep_types(const std::string& snapshot) {
  std::map<std::string, std::set<std::string>> out;
  const std::regex re(R"(^(<[^>]*>) <http://www\.w3\.org/1999/02/22-rdf-syntax-ns#type> <([^>]*)> \.$)");
  std::istringstream in(snapshot);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, re)) out[m[2]].insert(m[1]);
  }
  return out;
}

std::size_t stats_value(const std::string& report, const std::string& label) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(label + " ", 0) == 0 || line.rfind(label + "* ", 0) == 0) {
      return std::stoul(line.substr(line.find_last_of(' ') + 1));
    }
  }
  ADD_FAILURE() << "no row " << label << " in\n" << report;
  return 0;
}

TEST(Stats, FixtureMatchesRecount) {
  const std::string snapshot = slurp(fixture_snapshot());
  const auto types = grep_types(snapshot);
  const auto r = evkg({"stats", "-i", fixture_snapshot().string()});
  ASSERT_EQ(r.code, kOk);
  const std::string ev = "https://w3id.org/evkg/ontology/";
  for (const char* cls : {"ChargingStation", "ChargerCollection", "ElectricVehicleRegistrationCollection",
                          "ElectricVehicleProduct", "TransmissionLine", "Substation", "PowerPlant"}) {
    auto it = types.find(ev + cls);
    const std::size_t expected = it == types.end() ? 0 : it->second.size();
    EXPECT_EQ(stats_value(r.out, cls), expected) << cls;
    EXPECT_GT(expected, 0u) << cls;
  }
  EXPECT_EQ(stats_value(r.out, "RoadSegment"), 0u);
  EXPECT_EQ(stats_value(r.out, "RoadSegmentNode"), 0u);
  EXPECT_NE(r.out.find("* road network"), std::string::npos);

  const std::size_t lines = std::count(snapshot.begin(), snapshot.end(), '\n');
  EXPECT_EQ(stats_value(r.out, "Total number of statements"), lines);

  std::set<std::string> entities;
  const auto& reg = vocab::registry();
  for (const auto& [cls, subjects] : types) {
    if (reg.find_class(rdf::Iri(cls))) entities.insert(subjects.begin(), subjects.end());
  }
  EXPECT_EQ(stats_value(r.out, "Total number of entities"), entities.size());
  EXPECT_EQ(stats_value(r.out, "Total number of properties"), reg.properties().size());
  EXPECT_EQ(stats_value(r.out, "Total number of classes"), reg.classes().size());

  // fixed row order, out-of-scope rows last
  const char* order[] = {"ChargingStation ", "ChargerCollection ", "ElectricVehicleRegistrationCollection ",
                         "ElectricVehicleProduct ", "TransmissionLine ", "Substation ", "PowerPlant ",
                         "RoadSegment* ", "RoadSegmentNode* ", "Total number of statements"};
  std::size_t at = 0;
  for (const char* label : order) {
    const std::size_t next = r.out.find(label, at);
    ASSERT_NE(next, std::string::npos) << label;
    at = next;
  }
}

TEST(Stats, EmptySnapshotReportsOnlyRegistryCounts) {
  const fs::path dir = scratch_dir("stats-empty");
  spit(dir / "empty.nt", "");
  const auto r = evkg({"stats", "-i", (dir / "empty.nt").string()});
  ASSERT_EQ(r.code, kOk);
  for (const char* cls : {"ChargingStation", "ChargerCollection", "ElectricVehicleRegistrationCollection",
                          "ElectricVehicleProduct", "TransmissionLine", "Substation", "PowerPlant", "RoadSegment",
                          "RoadSegmentNode", "Total number of statements", "Total number of entities"}) {
    EXPECT_EQ(stats_value(r.out, cls), 0u) << cls;
  }
  EXPECT_GT(stats_value(r.out, "Total number of properties"), 0u);
  EXPECT_GT(stats_value(r.out, "Total number of classes"), 0u);
}

TEST(Materialize, PrintedCountsEqualModuleResult) {
  const fs::path dir = scratch_dir("materialize");
  std::string json = slurp(fixture_config(dir));
  json = std::regex_replace(json, std::regex("\"materialize\": true"), "\"materialize\": false");
  json = std::regex_replace(json, std::regex("\"subclass_closure\": true"), "\"subclass_closure\": false");
  spit(dir / "config.json", json);
  ASSERT_EQ(evkg({"ingest", "-c", (dir / "config.json").string()}).code, kOk);

  rdf::Graph g = rdf::parse_ntriples(slurp(dir / "evkg.nt"));
  const std::size_t before = g.size();
  const auto report = mat::materialize_spatial_relations(g, vocab::registry());
  const std::size_t closure = mat::materialize_subclass_closure(g, vocab::registry());

  const auto r = evkg({"materialize", "-i", (dir / "evkg.nt").string(), "-o", (dir / "out.nt").string(),
                       "--subclass-closure"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto printed = [&r](const std::string& label) {
    std::smatch m;
    EXPECT_TRUE(std::regex_search(r.out, m, std::regex(label + R"(\s+(\d+))"))) << r.out;
    return m.empty() ? std::size_t{0} : std::stoul(m[1]);
  };
  EXPECT_EQ(printed("kwg-ont:sfWithin"), report.within_added);
  EXPECT_EQ(printed("kwg-ont:sfContains"), report.contains_added);
  EXPECT_EQ(printed("kwg-ont:sfCrosses"), report.crosses_added);
  EXPECT_EQ(printed(R"(rdf:type \(closure\))"), closure);
  EXPECT_GT(report.within_added, 0u);
  EXPECT_GT(report.crosses_added, 0u);
  EXPECT_EQ(rdf::parse_ntriples(slurp(dir / "out.nt")).size(), g.size());
  EXPECT_EQ(g.size(), before + report.within_added + report.contains_added + report.crosses_added + closure);
  // the CLI path with flags on produces the same snapshot as ingest with materialization
  EXPECT_EQ(slurp(dir / "out.nt"), slurp(fixture_snapshot()));
  EXPECT_EQ(evkg({"materialize", "-i", (dir / "absent.nt").string(), "-o", (dir / "x.nt").string()}).code, kIoError);
}

TEST(ExportOntology, WritesParsableTurtle) {
  const fs::path dir = scratch_dir("ontology");
  const auto r = evkg({"export-ontology", "-o", (dir / "evkg-ontology.ttl").string()});
  ASSERT_EQ(r.code, kOk);
  const rdf::Graph g = rdf::parse_turtle(slurp(dir / "evkg-ontology.ttl"));
  EXPECT_EQ(g.size(), vocab::schema_graph(vocab::registry()).size());
  EXPECT_GT(g.size(), 0u);
}

TEST(Determinism, RoundTripAndRepeatedIngestAreByteIdentical) {
  const fs::path a = scratch_dir("determinism-a");
  const fs::path b = scratch_dir("determinism-b");
  ASSERT_EQ(evkg({"ingest", "-c", fixture_config(a).string()}).code, kOk);
  ASSERT_EQ(evkg({"ingest", "-c", fixture_config(b).string()}).code, kOk);
  const std::string first = slurp(a / "evkg.nt");
  EXPECT_EQ(first, slurp(b / "evkg.nt"));

  // export -> import -> export
  const std::string second = rdf::serialize_ntriples(rdf::parse_ntriples(first));
  EXPECT_EQ(first, second);
  // a no-op materialization pass also re-exports the same bytes
  ASSERT_EQ(evkg({"materialize", "-i", (a / "evkg.nt").string(), "-o", (a / "again.nt").string(),
                  "--subclass-closure"}).code, kOk);
  EXPECT_EQ(slurp(a / "again.nt"), first);
  // the committed snapshot is what ingest produces today
  EXPECT_EQ(slurp(fixture_dir() / "evkg.nt"), first);

  const auto q1 = evkg({"stats", "-i", (a / "evkg.nt").string()});
  const auto q2 = evkg({"stats", "-i", (b / "evkg.nt").string()});
  EXPECT_EQ(q1.out, q2.out);
}

TEST(Listing, ExpandedTextMatchesCommittedQueries) {
  for (int n = 1; n <= 10; ++n) {
    char name[32];
    std::snprintf(name, sizeof name, "listing%02d.rq", n);
    EXPECT_EQ(evkg({"listing", "-n", std::to_string(n), "--expanded"}).out, slurp(data_dir() / "queries" / name)) << n;
  }
  EXPECT_NE(evkg({"listing", "-n", "11"}).code, kOk);
}

}  // namespace
}  // namespace evkg::cli
