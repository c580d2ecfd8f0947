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

#include "evkg/ingest/triplify.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <set>

#include "evkg/geometry/wkt.hpp"
#include "evkg/vocabulary/namespaces.hpp"
#include "evkg/vocabulary/registry.hpp"

namespace evkg::ingest {

using rdf::Iri;
using rdf::Literal;

namespace {

std::uint32_t fnv1a(std::string_view s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

std::string product_natural_key(const ProductKey& p) {
  std::string k;
  auto add = [&k](std::string_view part) {
    k += part;
    k += '\x1f';
  };
  add(p.vin8);
  add(p.make);
  add(p.model);
  add(std::to_string(p.model_year));
  add(to_string(p.technology));
  add(p.manufacturer);
  add(p.use_case);
  add(p.weight_level);
  for (const auto& c : p.charger_types) add(c);
  add("|");
  for (const auto& c : p.connector_types) add(c);
  return k;
}

/// Graph under construction with the registry prefixes attached.
class Builder {
 public:
  Builder() {
    for (const auto& [prefix, ns_iri] : vocab::registry().prefixes().entries()) g_.prefixes().add(prefix, ns_iri);
  }

  void add(const Iri& s, const std::string& p, rdf::Term o) { g_.insert({s, Iri(p), std::move(o)}); }
  void type(const Iri& s, const std::string& cls) { add(s, ns::kRdfType, Iri(cls)); }
  void label(const Iri& s, const std::string& text) { add(s, ns::kRdfsLabel, Literal(text)); }

  /// Typed, labelled individual shared between records.
  void individual(const Iri& s, const std::string& cls, const std::string& text) {
    type(s, cls);
    label(s, text);
  }

  void reference(const vocab::Individual& ind) { individual(ind.iri, ind.type.str(), ind.label); }

  void geometry(const Iri& feature, const Iri& node, const geom::Geometry& shape) {
    static const char* const kinds[] = {"Point", "LineString", "Polygon", "MultiPoint", "MultiLineString",
                                        "MultiPolygon"};
    add(feature, ns::kHasGeometry, node);
    type(node, ns::sf(kinds[shape.index()]));
    add(node, ns::kAsWkt, Literal(geom::to_wkt(shape), Iri(ns::geo("wktLiteral"))));
  }

  rdf::Graph take() { return std::move(g_); }

 private:
  rdf::Graph g_;
};

const vocab::Individual& charger(const std::string& token) {
  const vocab::Individual* ind = vocab::find_charger(token);
  if (!ind) throw IngestError("unknown charger type '" + token + "'");
  return *ind;
}

const vocab::Individual& connector(const std::string& token) {
  const vocab::Individual* ind = vocab::find_connector(token);
  if (!ind) throw IngestError("unknown connector type '" + token + "'");
  return *ind;
}

std::string gyear(int year) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04d", year);
  return buf;
}

}  // namespace

std::string sanitize(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    if (std::isspace(c)) continue;
    out += (std::isalnum(c) || c == '_' || c == '-') ? static_cast<char>(c) : '_';
  }
  return out;
}

std::string zip_iri(std::string_view zip) { return ns::evr("zipcode." + sanitize(zip)); }

std::string product_iri(const ProductKey& p) {
  return ns::evr("evproduct." + sanitize(p.vin8) + "_" + hex8(fnv1a(product_natural_key(p))));
}

std::string collection_iri(const RegistrationCollection& c) {
  return ns::evr("evregcol." + sanitize(c.zip) + "_" + gyear(c.year) + "_" + sanitize(c.product.vin8) + "_" +
                 hex8(fnv1a(product_natural_key(c.product))));
}

std::string station_iri(std::string_view station_id) { return ns::evr("chargingstation." + sanitize(station_id)); }

Iri IriMinter::mint(std::string iri, std::string_view natural_key) {
  auto it = keys_.find(iri);
  if (it == keys_.end()) {
    keys_.emplace(iri, std::string(natural_key));
  } else if (it->second != natural_key) {
    throw IngestError("IRI collision: <" + iri + "> minted for both '" + it->second + "' and '" +
                      std::string(natural_key) + "'");
  }
  return Iri(std::move(iri));
}

std::vector<RegistrationCollection> aggregate_registrations(const std::vector<RegistrationRecord>& records) {
  std::map<std::tuple<std::string, int, ProductKey>, std::size_t> groups;
  for (const auto& r : records) ++groups[{r.zip, r.registration_year, r.product}];
  std::vector<RegistrationCollection> out;
  out.reserve(groups.size());
  for (const auto& [key, amount] : groups) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), amount});
  }
  return out;
}

std::vector<ProductKey> distinct_products(const std::vector<RegistrationCollection>& collections) {
  std::set<ProductKey> seen;
  for (const auto& c : collections) seen.insert(c.product);
  return {seen.begin(), seen.end()};
}

rdf::Graph triplify_adoption(const std::vector<RegistrationCollection>& collections,
                             const std::vector<ProductKey>& products) {
  const std::set<ProductKey> known(products.begin(), products.end());
  std::set<std::string> dangling;
  for (const auto& c : collections) {
    if (!known.count(c.product)) dangling.insert(c.product.vin8 + " " + c.product.make + " " + c.product.model);
  }
  if (!dangling.empty()) {
    std::string msg = "collections reference unknown products:";
    for (const auto& d : dangling) msg += " [" + d + "]";
    throw IngestError(msg);
  }

  Builder b;
  IriMinter mint;
  auto ont = [](std::string_view local) { return ns::ev_ont(local); };

  for (const auto& p : known) {
    const Iri product = mint.mint(product_iri(p), product_natural_key(p));
    b.type(product, ont("ElectricVehicleProduct"));
    b.label(product, p.make + " " + p.model);
    b.add(product, ont("hasModelYear"), Literal(gyear(p.model_year), Iri(std::string(rdf::xsd::kGYear))));

    const Iri make = mint.mint(ns::evr(sanitize(p.make)), "make\x1f" + p.make);
    b.individual(make, ont("MakeType"), p.make);
    b.add(product, ont("hasMakeType"), make);

    const std::string model_key = p.make + "\x1f" + p.model + "\x1f" + std::to_string(p.model_year);
    const Iri model = mint.mint(
        ns::evr("modeltype." + sanitize(p.make) + "_" + sanitize(p.model) + "_" + gyear(p.model_year)), model_key);
    b.individual(model, ont("ModelType"), p.model);
    b.add(model, ont("hasModelYear"), Literal(gyear(p.model_year), Iri(std::string(rdf::xsd::kGYear))));
    b.add(product, ont("hasModelType"), model);

    const std::string tech = to_string(p.technology);
    const Iri technology = mint.mint(ns::evr("technology." + tech), "technology\x1f" + tech);
    b.individual(technology, ont("Technology"), tech);
    b.add(product, ont("isWithTechnology"), technology);

    auto attribute = [&](const std::string& kind, const std::string& cls, const std::string& prop,
                         const std::string& value) {
      if (value.empty()) return;
      const Iri node = mint.mint(ns::evr(kind + "." + sanitize(value)), kind + "\x1f" + value);
      b.individual(node, ont(cls), value);
      b.add(product, ont(prop), node);
    };
    attribute("manufacturer", "Manufacturer", "hasManufacturer", p.manufacturer);
    attribute("vehicleusecase", "VehicleUseCase", "hasVehicleUseCase", p.use_case);
    attribute("weightlevel", "WeightLevel", "hasWeightLevel", p.weight_level);

    for (const auto& token : p.charger_types) {
      const auto& ind = charger(token);
      b.reference(ind);
      b.add(product, ont("hasMatchableChargerType"), ind.iri);
    }
    for (const auto& token : p.connector_types) {
      const auto& ind = connector(token);
      b.reference(ind);
      b.add(product, ont("hasMatchableConnectorType"), ind.iri);
    }
  }

  for (const auto& c : collections) {
    const Iri coll = mint.mint(collection_iri(c), c.zip + "\x1f" + gyear(c.year) + "\x1f" +
                                                      product_natural_key(c.product));
    b.type(coll, ont("ElectricVehicleRegistrationCollection"));
    b.add(coll, ont("hasSpatialScope"), Iri(zip_iri(c.zip)));
    b.add(coll, ont("hasTemporalScope"), Literal(gyear(c.year), Iri(std::string(rdf::xsd::kGYear))));
    b.add(coll, ont("hasProductInfo"), Iri(product_iri(c.product)));
    b.add(coll, ont("hasAmount"), Literal(std::to_string(c.amount), Iri(std::string(rdf::xsd::kInteger))));
  }
  return b.take();
}

rdf::Graph triplify_stations(const std::vector<StationRecord>& records) {
  Builder b;
  IriMinter mint;
  auto ont = [](std::string_view local) { return ns::ev_ont(local); };
  const Iri integer(std::string(rdf::xsd::kInteger));

  for (const auto& r : records) {
    check(r);
    const Iri station = mint.mint(station_iri(r.station_id), "station\x1f" + r.station_id);
    b.type(station, ont(r.access == Access::Public ? "PublicChargingStation" : "PrivateChargingStation"));
    b.type(station, ont(r.network ? "NetworkedChargingStation" : "NonNetworkedChargingStation"));
    if (!r.name.empty()) b.label(station, r.name);
    b.geometry(station, mint.mint(ns::evr("geometry.chargingstation." + sanitize(r.station_id)), r.station_id),
               geom::Point{r.lon, r.lat});

    if (!r.operating_hours.empty()) b.add(station, ont("hasOperatingHours"), Literal(r.operating_hours));
    if (r.open_date) b.add(station, ont("hasOpenTime"), Literal(*r.open_date, Iri(std::string(rdf::xsd::kDate))));
    if (r.open_year) {
      b.add(station, ont("hasOpenYear"), Literal(gyear(*r.open_year), Iri(std::string(rdf::xsd::kGYear))));
    }
    if (r.pricing) b.add(station, ont("hasPricingScheme"), Literal(*r.pricing));
    if (r.parking_restriction) b.add(station, ont("hasParkingRestriction"), Literal(*r.parking_restriction));

    if (r.network) {
      const Iri network = mint.mint(ns::evr("chargingnetwork." + sanitize(*r.network)), "network\x1f" + *r.network);
      b.individual(network, ont("ChargingNetwork"), *r.network);
      b.add(station, ont("isUnderChargingNetwork"), network);
    }
    if (r.user_group) {
      const Iri group =
          mint.mint(ns::evr("chargingusergroup." + sanitize(*r.user_group)), "usergroup\x1f" + *r.user_group);
      b.individual(group, ont("ChargingUserGroup"), *r.user_group);
      b.add(station, ont("hasChargingUserGroup"), group);
    }

    std::map<std::pair<std::string, std::string>, int> grouped;
    for (const auto& g : r.charger_groups) grouped[{g.charger_type, g.connector_type}] += g.count;
    for (const auto& [key, count] : grouped) {
      const auto& ch = charger(key.first);
      const auto& co = connector(key.second);
      const Iri coll = mint.mint(
          ns::evr("chargercollection." + sanitize(r.station_id) + "_" + key.first + "_" + key.second),
          r.station_id + "\x1f" + key.first + "\x1f" + key.second);
      b.reference(ch);
      b.reference(co);
      b.type(coll, ont("ChargerCollection"));
      b.add(coll, ont("hasChargerType"), ch.iri);
      b.add(coll, ont("hasConnectorType"), co.iri);
      b.add(coll, ont("hasAmount"), Literal(std::to_string(count), integer));
      b.add(station, ont("hosts"), coll);
    }
  }
  return b.take();
}

rdf::Graph triplify_transmission(const std::vector<TransmissionAssetRecord>& records) {
  Builder b;
  IriMinter mint;
  auto ont = [](std::string_view local) { return ns::ev_ont(local); };
  const Iri decimal(std::string(rdf::xsd::kDecimal));

  for (const auto& r : records) {
    check(r);
    std::string kind_local;
    std::string cls;
    std::string status_prop;
    switch (r.kind) {
      case AssetKind::Line:
        kind_local = "transmissionline";
        cls = "TransmissionLine";
        status_prop = "hasLineStatus";
        break;
      case AssetKind::Substation:
        kind_local = "substation";
        cls = "Substation";
        status_prop = "hasStationStatus";
        break;
      case AssetKind::Plant:
        kind_local = "powerplant";
        cls = "PowerPlant";
        status_prop = "hasPlantStatus";
        break;
    }
    const std::string id = sanitize(r.asset_id);
    const Iri asset = mint.mint(ns::evr(kind_local + "." + id), kind_local + "\x1f" + r.asset_id);
    b.type(asset, ont(cls));
    b.geometry(asset, mint.mint(ns::evr("geometry." + kind_local + "." + id), r.asset_id), r.geometry);

    const Iri status = mint.mint(ns::evr("servingstatus." + sanitize(r.status)), "status\x1f" + r.status);
    b.individual(status, ont("ServingStatus"), r.status);
    b.add(asset, ont(status_prop), status);

    if (r.voltage_class) {
      const Iri vc =
          mint.mint(ns::evr("voltageclass." + sanitize(*r.voltage_class)), "voltage\x1f" + *r.voltage_class);
      b.individual(vc, ont("VoltageClass"), *r.voltage_class);
      b.add(asset, ont("hasVoltageClass"), vc);
    }
    if (r.owner) {
      const Iri owner = mint.mint(ns::evr("transmissionlineowner." + sanitize(*r.owner)), "owner\x1f" + *r.owner);
      b.individual(owner, ont("TransmissionLineOwner"), *r.owner);
      b.add(asset, ont("hasLineOwner"), owner);
    }
    auto quantity = [&](const std::optional<std::string>& v, const char* prop) {
      if (v) b.add(asset, ont(prop), Literal(*v, decimal));
    };
    quantity(r.min_voltage_kv, "hasMinVoltage");
    quantity(r.max_voltage_kv, "hasMaxVoltage");
    quantity(r.summer_capacity_mw, "hasSummerCapacity");
    quantity(r.winter_capacity_mw, "hasWinterCapacity");
    quantity(r.operating_capacity_mw, "hasOperatingCapacity");
  }
  return b.take();
}

rdf::Graph triplify_places(const std::vector<ZipAreaRecord>& records) {
  Builder b;
  IriMinter mint;
  std::set<std::string> zips;
  const std::string within = ns::kSfWithin;
  const std::string contains = ns::kSfContains;

  for (const auto& r : records) {
    check(r);
    if (!zips.insert(r.zip).second) throw IngestError("duplicate zip " + r.zip);
    const Iri zip = mint.mint(zip_iri(r.zip), "zip\x1f" + r.zip);
    b.individual(zip, ns::kwg_ont("ZipCodeArea"), "zip code " + r.zip);
    b.geometry(zip, mint.mint(ns::evr("geometry.zipcode." + sanitize(r.zip)), r.zip), r.geometry);

    const Iri state = mint.mint(ns::evr("state." + sanitize(r.state)), "state\x1f" + r.state);
    b.individual(state, ns::kwg_ont("AdministrativeRegion_2"), r.state);
    const Iri county = mint.mint(ns::evr("county." + sanitize(r.state) + "_" + sanitize(r.county)),
                                 "county\x1f" + r.state + "\x1f" + r.county);
    b.individual(county, ns::kwg_ont("AdministrativeRegion_3"), r.county);

    for (const Iri* parent : {&state, &county}) {
      b.add(*parent, contains, zip);
      b.add(zip, within, *parent);
    }
    if (r.kwg_sameas) b.add(zip, ns::kOwlSameAs, Iri(*r.kwg_sameas));
  }
  return b.take();
}

}  // namespace evkg::ingest
