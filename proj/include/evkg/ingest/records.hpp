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

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "evkg/geometry/geometry.hpp"
#include "evkg/ingest/csv.hpp"

namespace evkg::ingest {

/// Record-level violation raised by the triplification functions.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Technology { BEV, PHEV };

struct ProductKey {
  std::string vin8;
  std::string make;
  std::string model;
  int model_year = 0;
  Technology technology = Technology::BEV;
  std::string manufacturer;
  std::string use_case;
  std::string weight_level;
  std::set<std::string> charger_types;
  std::set<std::string> connector_types;

  friend bool operator==(const ProductKey&, const ProductKey&) = default;
  friend auto operator<=>(const ProductKey&, const ProductKey&) = default;
};

struct RegistrationRecord {
  std::string zip;
  int registration_year = 0;
  ProductKey product;
};

struct ChargerGroup {
  std::string charger_type;
  std::string connector_type;
  int count = 0;
};

enum class Access { Public, Private };

struct StationRecord {
  std::string station_id;
  std::string name;
  double lon = 0.0;
  double lat = 0.0;
  std::string zip;
  Access access = Access::Public;
  std::optional<std::string> network;
  std::string operating_hours;
  /// YYYY-MM-DD when the source provides a full date.
  std::optional<std::string> open_date;
  std::optional<int> open_year;
  std::optional<std::string> pricing;
  std::optional<std::string> parking_restriction;
  std::optional<std::string> user_group;
  std::vector<ChargerGroup> charger_groups;
};

enum class AssetKind { Line, Substation, Plant };

struct TransmissionAssetRecord {
  std::string asset_id;
  AssetKind kind = AssetKind::Line;
  geom::Geometry geometry;
  std::optional<std::string> voltage_class;
  // Decimal lexical forms, kept as written in the source.
  std::optional<std::string> min_voltage_kv;
  std::optional<std::string> max_voltage_kv;
  std::optional<std::string> summer_capacity_mw;
  std::optional<std::string> winter_capacity_mw;
  std::optional<std::string> operating_capacity_mw;
  std::string status;
  std::optional<std::string> owner;
};

struct ZipAreaRecord {
  std::string zip;
  geom::Geometry geometry;
  std::string state;
  std::string county;
  std::optional<std::string> kwg_sameas;
};

struct RowIssue {
  std::size_t line;
  std::string message;
};

template <class Record>
struct LoadResult {
  std::vector<Record> records;
  std::vector<RowIssue> skipped;
};

// Loaders validate every row; rows that violate a record invariant are
// skipped and reported with their line number. A missing column is fatal.
LoadResult<RegistrationRecord> load_registrations(const CsvTable& table);
LoadResult<StationRecord> load_stations(const CsvTable& table);
LoadResult<TransmissionAssetRecord> load_transmission(const CsvTable& table);
LoadResult<ZipAreaRecord> load_places(const CsvTable& table);

// Record invariants, shared by the loaders and the triplifiers.
void check(const RegistrationRecord& r);
void check(const StationRecord& r);
void check(const TransmissionAssetRecord& r);
void check(const ZipAreaRecord& r);

std::string to_string(Technology t);
std::string to_string(AssetKind k);

}  // namespace evkg::ingest
