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

#include "evkg/ingest/records.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>

#include "evkg/geometry/wkt.hpp"
#include "evkg/rdf/term.hpp"
#include "evkg/vocabulary/registry.hpp"

namespace evkg::ingest {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int parse_year(const std::string& s, const char* what) {
  if (s.size() != 4 || !all_digits(s)) throw IngestError(std::string(what) + " '" + s + "' is not a 4-digit year");
  return std::stoi(s);
}

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last || !std::isfinite(v)) {
    throw IngestError(std::string(what) + " '" + s + "' is not a number");
  }
  return v;
}

std::optional<std::string> optional_field(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string item = s.substr(start, end - start);
    if (!item.empty()) out.push_back(item);
    start = end + 1;
  }
  return out;
}

std::set<std::string> split_set(const std::string& s) {
  auto items = split_list(s);
  return {items.begin(), items.end()};
}

/// Column lookup done once per table.
class Columns {
 public:
  Columns(const CsvTable& table, std::initializer_list<std::string_view> names) {
    for (auto n : names) index_[std::string(n)] = table.column(n);
    width_ = table.header.size();
  }
  const std::string& get(const CsvRow& row, const std::string& name) const {
    return row.fields[index_.at(name)];
  }
  void check_width(const CsvRow& row) const {
    if (row.fields.size() != width_) {
      throw IngestError("expected " + std::to_string(width_) + " fields, found " +
                        std::to_string(row.fields.size()));
    }
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::size_t width_ = 0;
};

template <class Record, class Fn>
LoadResult<Record> load_rows(const CsvTable& table, const Columns& cols, Fn&& convert) {
  LoadResult<Record> out;
  for (const auto& row : table.rows) {
    try {
      cols.check_width(row);
      Record r = convert(row);
      check(r);
      out.records.push_back(std::move(r));
    } catch (const IngestError& e) {
      out.skipped.push_back({row.line, e.what()});
    } catch (const geom::WktError& e) {
      out.skipped.push_back({row.line, e.what()});
    } catch (const geom::ValidationError& e) {
      out.skipped.push_back({row.line, e.what()});
    } catch (const rdf::RdfError& e) {
      out.skipped.push_back({row.line, e.what()});
    }
  }
  return out;
}

void check_decimal(const std::optional<std::string>& v, const char* what) {
  if (v && !rdf::is_valid_decimal(*v)) throw IngestError(std::string(what) + " '" + *v + "' is not a decimal");
}

}  // namespace

std::string to_string(Technology t) { return t == Technology::BEV ? "BEV" : "PHEV"; }

std::string to_string(AssetKind k) {
  switch (k) {
    case AssetKind::Line: return "line";
    case AssetKind::Substation: return "substation";
    case AssetKind::Plant: return "plant";
  }
  return "?";
}

void check(const RegistrationRecord& r) {
  const ProductKey& p = r.product;
  if (p.vin8.size() != 8) throw IngestError("vin8 '" + p.vin8 + "' must have exactly 8 characters");
  for (char c : p.vin8) {
    if (!std::isalnum(static_cast<unsigned char>(c))) throw IngestError("vin8 '" + p.vin8 + "' is not alphanumeric");
  }
  if (r.zip.size() != 5 || !all_digits(r.zip)) throw IngestError("zip '" + r.zip + "' is not a 5-digit code");
  if (r.registration_year < 1000 || r.registration_year > 9999) throw IngestError("registration year out of range");
  if (p.model_year < 1000 || p.model_year > 9999) throw IngestError("model year out of range");
  if (p.make.empty() || p.model.empty()) throw IngestError("make and model are required");
  for (const auto& c : p.charger_types) {
    if (!vocab::find_charger(c)) throw IngestError("unknown charger type '" + c + "'");
  }
  for (const auto& c : p.connector_types) {
    if (!vocab::find_connector(c)) throw IngestError("unknown connector type '" + c + "'");
  }
}

void check(const StationRecord& r) {
  if (r.station_id.empty()) throw IngestError("station_id is required");
  if (!std::isfinite(r.lon) || !std::isfinite(r.lat)) throw IngestError("non-finite station coordinates");
  if (r.access == Access::Public && r.user_group) {
    throw IngestError("public station '" + r.station_id + "' cannot have an exclusive user group");
  }
  if (r.open_date) {
    const std::string& d = *r.open_date;
    bool shape = d.size() == 10 && d[4] == '-' && d[7] == '-' && all_digits(d.substr(0, 4)) &&
                 all_digits(d.substr(5, 2)) && all_digits(d.substr(8, 2));
    if (!shape) throw IngestError("open_date '" + d + "' is not YYYY-MM-DD");
    int month = std::stoi(d.substr(5, 2));
    int day = std::stoi(d.substr(8, 2));
    if (month < 1 || month > 12 || day < 1 || day > 31) throw IngestError("open_date '" + d + "' is out of range");
    if (r.open_year && *r.open_year != std::stoi(d.substr(0, 4))) {
      throw IngestError("open_year disagrees with open_date");
    }
  }
  for (const auto& g : r.charger_groups) {
    if (g.count < 1) throw IngestError("charger count must be at least 1");
    if (!vocab::find_charger(g.charger_type)) throw IngestError("unknown charger type '" + g.charger_type + "'");
    if (!vocab::find_connector(g.connector_type)) {
      throw IngestError("unknown connector type '" + g.connector_type + "'");
    }
  }
}

void check(const TransmissionAssetRecord& r) {
  if (r.asset_id.empty()) throw IngestError("asset_id is required");
  geom::validate(r.geometry);
  const bool lineal = std::holds_alternative<geom::LineString>(r.geometry) ||
                      std::holds_alternative<geom::MultiLineString>(r.geometry);
  const bool point = std::holds_alternative<geom::Point>(r.geometry);
  if (r.kind == AssetKind::Line && !lineal) {
    throw IngestError("line '" + r.asset_id + "' needs a LineString or MultiLineString geometry");
  }
  if (r.kind != AssetKind::Line && !point) {
    throw IngestError(to_string(r.kind) + " '" + r.asset_id + "' needs a Point geometry");
  }
  auto only_for = [&](const std::optional<std::string>& v, AssetKind kind, const char* what) {
    if (v && r.kind != kind) {
      throw IngestError(std::string(what) + " does not apply to a " + to_string(r.kind));
    }
  };
  only_for(r.voltage_class, AssetKind::Line, "voltage_class");
  only_for(r.owner, AssetKind::Line, "owner");
  only_for(r.min_voltage_kv, AssetKind::Substation, "min_voltage_kv");
  only_for(r.max_voltage_kv, AssetKind::Substation, "max_voltage_kv");
  only_for(r.summer_capacity_mw, AssetKind::Plant, "summer_capacity_mw");
  only_for(r.winter_capacity_mw, AssetKind::Plant, "winter_capacity_mw");
  only_for(r.operating_capacity_mw, AssetKind::Plant, "operating_capacity_mw");
  check_decimal(r.min_voltage_kv, "min_voltage_kv");
  check_decimal(r.max_voltage_kv, "max_voltage_kv");
  check_decimal(r.summer_capacity_mw, "summer_capacity_mw");
  check_decimal(r.winter_capacity_mw, "winter_capacity_mw");
  check_decimal(r.operating_capacity_mw, "operating_capacity_mw");
  if (r.status.empty()) throw IngestError("status is required");
}

void check(const ZipAreaRecord& r) {
  if (r.zip.size() != 5 || !all_digits(r.zip)) throw IngestError("zip '" + r.zip + "' is not a 5-digit code");
  geom::validate(r.geometry);
  if (!std::holds_alternative<geom::Polygon>(r.geometry) && !std::holds_alternative<geom::MultiPolygon>(r.geometry)) {
    throw IngestError("zip area " + r.zip + " needs a Polygon or MultiPolygon geometry");
  }
  if (r.state.empty() || r.county.empty()) throw IngestError("state and county are required");
  if (r.kwg_sameas) rdf::Iri check_iri(*r.kwg_sameas);
}

LoadResult<RegistrationRecord> load_registrations(const CsvTable& table) {
  Columns cols(table, {"vin8", "zip", "model_year", "registration_year", "make", "model", "technology",
                       "manufacturer", "use_case", "weight_level", "charger_types", "connector_types"});
  return load_rows<RegistrationRecord>(table, cols, [&](const CsvRow& row) {
    RegistrationRecord r;
    r.zip = cols.get(row, "zip");
    r.registration_year = parse_year(cols.get(row, "registration_year"), "registration_year");
    ProductKey& p = r.product;
    p.vin8 = cols.get(row, "vin8");
    p.make = cols.get(row, "make");
    p.model = cols.get(row, "model");
    p.model_year = parse_year(cols.get(row, "model_year"), "model_year");
    const std::string& tech = cols.get(row, "technology");
    if (tech == "BEV") {
      p.technology = Technology::BEV;
    } else if (tech == "PHEV") {
      p.technology = Technology::PHEV;
    } else {
      throw IngestError("technology '" + tech + "' is neither BEV nor PHEV");
    }
    p.manufacturer = cols.get(row, "manufacturer");
    p.use_case = cols.get(row, "use_case");
    p.weight_level = cols.get(row, "weight_level");
    p.charger_types = split_set(cols.get(row, "charger_types"));
    p.connector_types = split_set(cols.get(row, "connector_types"));
    return r;
  });
}

LoadResult<StationRecord> load_stations(const CsvTable& table) {
  Columns cols(table, {"station_id", "name", "lon", "lat", "zip", "access", "network", "operating_hours",
                       "open_date", "pricing", "parking_restriction", "user_group", "charger_groups"});
  return load_rows<StationRecord>(table, cols, [&](const CsvRow& row) {
    StationRecord r;
    r.station_id = cols.get(row, "station_id");
    r.name = cols.get(row, "name");
    r.lon = parse_double(cols.get(row, "lon"), "lon");
    r.lat = parse_double(cols.get(row, "lat"), "lat");
    r.zip = cols.get(row, "zip");
    const std::string& access = cols.get(row, "access");
    if (access == "public") {
      r.access = Access::Public;
    } else if (access == "private") {
      r.access = Access::Private;
    } else {
      throw IngestError("access '" + access + "' is neither public nor private");
    }
    r.network = optional_field(cols.get(row, "network"));
    r.operating_hours = cols.get(row, "operating_hours");
    r.open_date = optional_field(cols.get(row, "open_date"));
    if (r.open_date) r.open_year = parse_year(r.open_date->substr(0, 4), "open_date year");
    r.pricing = optional_field(cols.get(row, "pricing"));
    r.parking_restriction = optional_field(cols.get(row, "parking_restriction"));
    r.user_group = optional_field(cols.get(row, "user_group"));
    for (const auto& item : split_list(cols.get(row, "charger_groups"))) {
      auto c1 = item.find(':');
      auto c2 = c1 == std::string::npos ? c1 : item.find(':', c1 + 1);
      if (c2 == std::string::npos) throw IngestError("charger group '" + item + "' is not CHARGER:CONNECTOR:COUNT");
      std::string count = item.substr(c2 + 1);
      if (!all_digits(count) || count.size() > 6) throw IngestError("charger count '" + count + "' is not a number");
      r.charger_groups.push_back({item.substr(0, c1), item.substr(c1 + 1, c2 - c1 - 1), std::stoi(count)});
    }
    return r;
  });
}

LoadResult<TransmissionAssetRecord> load_transmission(const CsvTable& table) {
  Columns cols(table, {"asset_id", "kind", "geometry", "voltage_class", "min_voltage_kv", "max_voltage_kv",
                       "summer_capacity_mw", "winter_capacity_mw", "operating_capacity_mw", "status", "owner"});
  return load_rows<TransmissionAssetRecord>(table, cols, [&](const CsvRow& row) {
    TransmissionAssetRecord r;
    r.asset_id = cols.get(row, "asset_id");
    const std::string& kind = cols.get(row, "kind");
    if (kind == "line") {
      r.kind = AssetKind::Line;
    } else if (kind == "substation") {
      r.kind = AssetKind::Substation;
    } else if (kind == "plant") {
      r.kind = AssetKind::Plant;
    } else {
      throw IngestError("kind '" + kind + "' is not line, substation or plant");
    }
    r.geometry = geom::parse_wkt(cols.get(row, "geometry"));
    r.voltage_class = optional_field(cols.get(row, "voltage_class"));
    r.min_voltage_kv = optional_field(cols.get(row, "min_voltage_kv"));
    r.max_voltage_kv = optional_field(cols.get(row, "max_voltage_kv"));
    r.summer_capacity_mw = optional_field(cols.get(row, "summer_capacity_mw"));
    r.winter_capacity_mw = optional_field(cols.get(row, "winter_capacity_mw"));
    r.operating_capacity_mw = optional_field(cols.get(row, "operating_capacity_mw"));
    r.status = cols.get(row, "status");
    r.owner = optional_field(cols.get(row, "owner"));
    return r;
  });
}

LoadResult<ZipAreaRecord> load_places(const CsvTable& table) {
  Columns cols(table, {"zip", "state", "county", "geometry", "kwg_sameas"});
  return load_rows<ZipAreaRecord>(table, cols, [&](const CsvRow& row) {
    ZipAreaRecord r;
    r.zip = cols.get(row, "zip");
    r.state = cols.get(row, "state");
    r.county = cols.get(row, "county");
    r.geometry = geom::parse_wkt(cols.get(row, "geometry"));
    r.kwg_sameas = optional_field(cols.get(row, "kwg_sameas"));
    return r;
  });
}

}  // namespace evkg::ingest
