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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evkg/ingest/records.hpp"
#include "evkg/materialize/materialize.hpp"
#include "evkg/rdf/graph.hpp"
#include "evkg/sparql/evaluator.hpp"
#include "evkg/vocabulary/registry.hpp"

namespace evkg::cli {

enum ExitCode : int { kOk = 0, kCqFailure = 1, kIoError = 2, kQueryError = 3 };

/// Declarative build description read by `evkg ingest -c`.
struct IngestConfig {
  std::optional<std::filesystem::path> registrations;
  std::optional<std::filesystem::path> stations;
  std::optional<std::filesystem::path> transmission;
  std::optional<std::filesystem::path> places;
  std::filesystem::path output;
  bool materialize = false;
  bool subclass_closure = false;
};

/// JSON config; relative paths resolve against the config file's directory.
IngestConfig load_config(const std::filesystem::path& path);

struct SourceReport {
  std::string name;
  std::size_t loaded = 0;
  std::vector<ingest::RowIssue> skipped;
};

struct IngestOutcome {
  rdf::Graph graph;
  std::vector<SourceReport> sources;
  std::optional<mat::SpatialReport> spatial;
  std::size_t closure_added = 0;
  std::vector<vocab::Violation> violations;
};

/// Loads, triplifies, optionally materializes, then validates. Throws on
/// I/O failures, malformed CSV and record-level ingest errors.
IngestOutcome build_graph(const IngestConfig& config);

struct StatsRow {
  std::string label;
  std::size_t count = 0;
  bool out_of_scope = false;
};

struct Stats {
  std::vector<StatsRow> classes;
  std::size_t statements = 0;
  std::size_t entities = 0;
  std::size_t properties = 0;
  std::size_t class_count = 0;
};

/// Key-class entity counts: distinct subjects typed with the class or one of
/// its registered subclasses.
Stats compute_stats(const rdf::Graph& graph, const vocab::OntologyRegistry& reg);
std::string format_stats(const Stats& stats);

/// Listings that answer competency question `q` (1-6).
std::vector<int> listings_for_question(int q);

struct ListingCheck {
  int listing = 0;
  bool passed = false;
  bool vacuous = false;
  std::string diff;
  std::string actual;
};

/// Runs one listing and renders the sorted TSV.
std::string run_listing_tsv(const rdf::Graph& graph, int listing);

/// Line diff in unified style; empty when the texts are equal.
std::string unified_diff(const std::string& expected, const std::string& actual, const std::string& expected_name,
                         const std::string& actual_name);

/// Plot-ready CSV files for questions 4-6, keyed by file name.
std::vector<std::pair<std::string, std::string>> plot_series(const rdf::Graph& graph, int question);

/// Entry point behind the `evkg` binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evkg::cli
