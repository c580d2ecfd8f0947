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

#include "evkg/vocabulary/registry.hpp"

#include <algorithm>
#include <map>

#include "evkg/vocabulary/namespaces.hpp"

namespace evkg::vocab {

using rdf::Iri;

namespace {

struct ClassSpec {
  std::string_view iri;
  std::string_view label;
  std::vector<std::string_view> supers;
};

struct PropertySpec {
  std::string_view iri;
  PropertyKind kind;
  std::string_view domain;
  std::string_view range;
  std::string_view label;
};

rdf::PrefixTable default_prefixes() {
  rdf::PrefixTable t;
  t.add("ev-ont", std::string(ns::kEvOnt));
  t.add("evr", std::string(ns::kEvr));
  t.add("kwg-ont", std::string(ns::kKwgOnt));
  t.add("geo", std::string(ns::kGeo));
  t.add("sf", std::string(ns::kSf));
  t.add("rdf", std::string(ns::kRdf));
  t.add("rdfs", std::string(ns::kRdfs));
  t.add("owl", std::string(ns::kOwl));
  t.add("xsd", std::string(ns::kXsd));
  return t;
}

OntologyRegistry build_registry() {
  const rdf::PrefixTable prefixes = default_prefixes();
  auto x = [&prefixes](std::string_view curie) { return prefixes.expand(curie); };

  const std::vector<std::pair<ModuleTag, std::vector<ClassSpec>>> class_specs = {
      {ModuleTag::Adoption,
       {
           {"ev-ont:ElectricVehicleRegistrationCollection", "Electric Vehicle Registration Collection", {}},
           {"ev-ont:ElectricVehicleProduct", "Electric Vehicle Product", {}},
           {"ev-ont:MakeType", "Make Type", {}},
           {"ev-ont:ModelType", "Model Type", {}},
           {"ev-ont:Technology", "Technology", {}},
           {"ev-ont:Manufacturer", "Manufacturer", {}},
           {"ev-ont:VehicleUseCase", "Vehicle Use Case", {}},
           {"ev-ont:WeightLevel", "Weight Level", {}},
           {"ev-ont:ChargerType", "Charger Type", {}},
           {"ev-ont:ConnectorType", "Connector Type", {}},
       }},
      {ModuleTag::Charging,
       {
           {"ev-ont:ChargingStation", "Charging Station", {"geo:Feature"}},
           {"ev-ont:PublicChargingStation", "Public Charging Station", {"ev-ont:ChargingStation"}},
           {"ev-ont:PrivateChargingStation", "Private Charging Station", {"ev-ont:ChargingStation"}},
           {"ev-ont:NetworkedChargingStation", "Networked Charging Station", {"ev-ont:ChargingStation"}},
           {"ev-ont:NonNetworkedChargingStation", "Non-Networked Charging Station", {"ev-ont:ChargingStation"}},
           {"ev-ont:ChargerCollection", "Charger Collection", {}},
           {"ev-ont:ChargingNetwork", "Charging Network", {}},
           {"ev-ont:ChargingUserGroup", "Charging User Group", {}},
       }},
      {ModuleTag::Transmission,
       {
           {"ev-ont:PowerPlant", "Power Plant", {"geo:Feature"}},
           {"ev-ont:TransmissionLine", "Transmission Line", {"geo:Feature"}},
           {"ev-ont:Substation", "Substation", {"geo:Feature"}},
           {"ev-ont:LineAttribute", "Line Attribute", {}},
           {"ev-ont:VoltageClass", "Voltage Class", {"ev-ont:LineAttribute"}},
           {"ev-ont:ServingStatus", "Serving Status", {}},
           {"ev-ont:TransmissionLineOwner", "Transmission Line Owner", {}},
       }},
      {ModuleTag::External,
       {
           {"geo:Feature", "Feature", {}},
           {"geo:Geometry", "Geometry", {}},
           {"sf:Point", "Point", {"geo:Geometry"}},
           {"sf:LineString", "Line String", {"geo:Geometry"}},
           {"sf:Polygon", "Polygon", {"geo:Geometry"}},
           {"sf:MultiPoint", "Multi Point", {"geo:Geometry"}},
           {"sf:MultiLineString", "Multi Line String", {"geo:Geometry"}},
           {"sf:MultiPolygon", "Multi Polygon", {"geo:Geometry"}},
           {"kwg-ont:ZipCodeArea", "Zip Code Area", {"geo:Feature"}},
           {"kwg-ont:AdministrativeRegion_2", "Administrative Region Level 2", {"geo:Feature"}},
           {"kwg-ont:AdministrativeRegion_3", "Administrative Region Level 3", {"geo:Feature"}},
           {"kwg-ont:RoadSegment", "Road Segment", {"geo:Feature"}},
           {"kwg-ont:RoadSegmentNode", "Road Segment Node", {"geo:Feature"}},
       }},
  };

  constexpr auto O = PropertyKind::Object;
  constexpr auto D = PropertyKind::Datatype;
  const std::vector<std::pair<ModuleTag, std::vector<PropertySpec>>> property_specs = {
      {ModuleTag::Adoption,
       {
           {"ev-ont:hasSpatialScope", O, "ev-ont:ElectricVehicleRegistrationCollection", "kwg-ont:ZipCodeArea", "has spatial scope"},
           {"ev-ont:hasTemporalScope", D, "ev-ont:ElectricVehicleRegistrationCollection", "xsd:gYear", "has temporal scope"},
           {"ev-ont:hasProductInfo", O, "ev-ont:ElectricVehicleRegistrationCollection", "ev-ont:ElectricVehicleProduct", "has product info"},
           {"ev-ont:hasAmount", D, "", "xsd:integer", "has amount"},
           {"ev-ont:hasModelYear", D, "", "xsd:gYear", "has model year"},
           {"ev-ont:hasModelType", O, "ev-ont:ElectricVehicleProduct", "ev-ont:ModelType", "has model type"},
           {"ev-ont:hasMakeType", O, "ev-ont:ElectricVehicleProduct", "ev-ont:MakeType", "has make type"},
           {"ev-ont:hasManufacturer", O, "ev-ont:ElectricVehicleProduct", "ev-ont:Manufacturer", "has manufacturer"},
           {"ev-ont:hasVehicleUseCase", O, "ev-ont:ElectricVehicleProduct", "ev-ont:VehicleUseCase", "has vehicle use case"},
           {"ev-ont:hasWeightLevel", O, "ev-ont:ElectricVehicleProduct", "ev-ont:WeightLevel", "has weight level"},
           {"ev-ont:isWithTechnology", O, "ev-ont:ElectricVehicleProduct", "ev-ont:Technology", "is with technology"},
           {"ev-ont:hasMatchableChargerType", O, "ev-ont:ElectricVehicleProduct", "ev-ont:ChargerType", "has matchable charger type"},
           {"ev-ont:hasMatchableConnectorType", O, "ev-ont:ElectricVehicleProduct", "ev-ont:ConnectorType", "has matchable connector type"},
       }},
      {ModuleTag::Charging,
       {
           {"ev-ont:hosts", O, "ev-ont:ChargingStation", "ev-ont:ChargerCollection", "hosts"},
           {"ev-ont:hasConnectorType", O, "ev-ont:ChargerCollection", "ev-ont:ConnectorType", "has connector type"},
           {"ev-ont:hasChargerType", O, "ev-ont:ChargerCollection", "ev-ont:ChargerType", "has charger type"},
           {"ev-ont:hasOpenTime", D, "ev-ont:ChargingStation", "xsd:date", "has open time"},
           {"ev-ont:hasOpenYear", D, "ev-ont:ChargingStation", "xsd:gYear", "has open year"},
           {"ev-ont:hasOperatingHours", D, "ev-ont:ChargingStation", "xsd:string", "has operating hours"},
           {"ev-ont:hasParkingRestriction", D, "ev-ont:ChargingStation", "xsd:string", "has parking restriction"},
           {"ev-ont:hasPricingScheme", D, "ev-ont:ChargingStation", "xsd:string", "has pricing scheme"},
           {"ev-ont:isUnderChargingNetwork", O, "ev-ont:NetworkedChargingStation", "ev-ont:ChargingNetwork", "is under charging network"},
           {"ev-ont:hasChargingUserGroup", O, "ev-ont:PrivateChargingStation", "ev-ont:ChargingUserGroup", "has charging user group"},
       }},
      {ModuleTag::Transmission,
       {
           {"ev-ont:hasSummerCapacity", D, "ev-ont:PowerPlant", "xsd:decimal", "has summer capacity"},
           {"ev-ont:hasWinterCapacity", D, "ev-ont:PowerPlant", "xsd:decimal", "has winter capacity"},
           {"ev-ont:hasOperatingCapacity", D, "ev-ont:PowerPlant", "xsd:decimal", "has operating capacity"},
           {"ev-ont:hasMinVoltage", D, "ev-ont:Substation", "xsd:decimal", "has min voltage"},
           {"ev-ont:hasMaxVoltage", D, "ev-ont:Substation", "xsd:decimal", "has max voltage"},
           {"ev-ont:hasLineStatus", O, "ev-ont:TransmissionLine", "ev-ont:ServingStatus", "has line status"},
           {"ev-ont:hasPlantStatus", O, "ev-ont:PowerPlant", "ev-ont:ServingStatus", "has plant status"},
           {"ev-ont:hasStationStatus", O, "ev-ont:Substation", "ev-ont:ServingStatus", "has station status"},
           {"ev-ont:hasVoltageClass", O, "ev-ont:TransmissionLine", "ev-ont:VoltageClass", "has voltage class"},
           {"ev-ont:hasLineOwner", O, "ev-ont:TransmissionLine", "ev-ont:TransmissionLineOwner", "has line owner"},
       }},
      {ModuleTag::External,
       {
           {"kwg-ont:sfWithin", O, "geo:Feature", "geo:Feature", "sf within"},
           {"kwg-ont:sfContains", O, "geo:Feature", "geo:Feature", "sf contains"},
           {"kwg-ont:sfCrosses", O, "geo:Feature", "geo:Feature", "sf crosses"},
           {"geo:hasGeometry", O, "geo:Feature", "geo:Geometry", "has geometry"},
           {"geo:asWKT", D, "geo:Geometry", "geo:wktLiteral", "as WKT"},
           {"rdfs:label", D, "", "xsd:string", "label"},
           {"rdfs:subClassOf", O, "", "", "sub class of"},
           {"owl:sameAs", O, "", "", "same as"},
           {"rdf:type", O, "", "", "type"},
       }},
  };

  std::vector<ClassDef> classes;
  for (const auto& [tag, specs] : class_specs) {
    for (const auto& s : specs) {
      std::vector<Iri> supers;
      for (auto sup : s.supers) supers.push_back(x(sup));
      classes.push_back(ClassDef{x(s.iri), std::string(s.label), std::move(supers), tag});
    }
  }
  std::vector<PropertyDef> properties;
  for (const auto& [tag, specs] : property_specs) {
    for (const auto& s : specs) {
      std::optional<Iri> domain, range;
      if (!s.domain.empty()) domain = x(s.domain);
      if (!s.range.empty()) range = x(s.range);
      properties.push_back(PropertyDef{x(s.iri), s.kind, domain, range, std::string(s.label), tag});
    }
  }
  return OntologyRegistry(std::move(classes), std::move(properties), prefixes);
}

std::vector<Individual> build_individuals() {
  auto ind = [](std::string_view local, std::string_view type, std::string_view label,
                std::string_view token) {
    return Individual{Iri(ns::evr(local)), Iri(ns::ev_ont(type)), std::string(label), std::string(token)};
  };
  return {
      ind("chargertype.Level1Charger", "ChargerType", "Level 1", "LEVEL1"),
      ind("chargertype.Level2Charger", "ChargerType", "Level 2", "LEVEL2"),
      ind("chargertype.DCFastCharger", "ChargerType", "DC Fast", "DCFC"),
      ind("connectortype.J1772", "ConnectorType", "J1772", "J1772"),
      ind("connectortype.J1772COMBO", "ConnectorType", "J1772COMBO", "J1772COMBO"),
      ind("connectortype.CHAdeMO", "ConnectorType", "CHAdeMO", "CHAdeMO"),
      ind("connectortype.TESLA", "ConnectorType", "TESLA", "TESLA"),
      ind("connectortype.NEMA", "ConnectorType", "NEMA", "NEMA"),
  };
}

const Individual* find_by_token(std::string_view type_local, std::string_view token) {
  const Iri type(ns::ev_ont(type_local));
  for (const auto& i : reference_individuals()) {
    if (i.type == type && i.token == token) return &i;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(ModuleTag tag) {
  switch (tag) {
    case ModuleTag::Adoption: return "adoption";
    case ModuleTag::Charging: return "charging";
    case ModuleTag::Transmission: return "transmission";
    case ModuleTag::External: return "external";
  }
  return "?";
}

OntologyRegistry::OntologyRegistry(std::vector<ClassDef> classes, std::vector<PropertyDef> properties,
                                   rdf::PrefixTable prefixes)
    : classes_(std::move(classes)), properties_(std::move(properties)), prefixes_(std::move(prefixes)) {}

const ClassDef* OntologyRegistry::find_class(const Iri& iri) const {
  auto it = std::find_if(classes_.begin(), classes_.end(), [&](const ClassDef& c) { return c.iri == iri; });
  return it == classes_.end() ? nullptr : &*it;
}

const PropertyDef* OntologyRegistry::find_property(const Iri& iri) const {
  auto it = std::find_if(properties_.begin(), properties_.end(),
                         [&](const PropertyDef& p) { return p.iri == iri; });
  return it == properties_.end() ? nullptr : &*it;
}

bool OntologyRegistry::is_datatype(const Iri& iri) const {
  const std::string& s = iri.str();
  return s.rfind(ns::kXsd, 0) == 0 || s == ns::geo("wktLiteral") || s == rdf::kLangString;
}

std::set<Iri> OntologyRegistry::ancestors(const Iri& cls) const {
  std::set<Iri> out;
  if (find_class(cls) == nullptr) return out;
  std::vector<Iri> stack{cls};
  while (!stack.empty()) {
    Iri c = stack.back();
    stack.pop_back();
    if (!out.insert(c).second) continue;
    if (const ClassDef* def = find_class(c)) {
      for (const auto& s : def->super_classes) stack.push_back(s);
    }
  }
  return out;
}

std::set<Iri> OntologyRegistry::descendants(const Iri& cls) const {
  std::set<Iri> out;
  for (const auto& c : classes_) {
    if (ancestors(c.iri).count(cls) > 0) out.insert(c.iri);
  }
  return out;
}

bool OntologyRegistry::is_subclass_of(const Iri& sub, const Iri& super) const {
  return ancestors(sub).count(super) > 0;
}

bool OntologyRegistry::acyclic() const {
  // Kahn-style peeling over the subclass edges.
  std::map<Iri, int> pending;
  for (const auto& c : classes_) pending.emplace(c.iri, 0);
  for (const auto& c : classes_) {
    for (const auto& s : c.super_classes) {
      (void)s;
      ++pending[c.iri];
    }
  }
  std::vector<Iri> ready;
  for (const auto& [iri, n] : pending) {
    if (n == 0) ready.push_back(iri);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Iri done = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& c : classes_) {
      for (const auto& s : c.super_classes) {
        if (s == done && --pending[c.iri] == 0) ready.push_back(c.iri);
      }
    }
  }
  return removed == pending.size();
}

std::vector<std::string> OntologyRegistry::check() const {
  std::vector<std::string> problems;
  std::set<Iri> seen;
  for (const auto& c : classes_) {
    if (!seen.insert(c.iri).second) problems.push_back("duplicate IRI " + c.iri.str());
    for (const auto& s : c.super_classes) {
      if (find_class(s) == nullptr) problems.push_back(c.iri.str() + ": unknown superclass " + s.str());
    }
    bool own = c.iri.str().rfind(ns::kEvOnt, 0) == 0;
    if (own == (c.module == ModuleTag::External)) {
      problems.push_back(c.iri.str() + ": module tag does not match namespace");
    }
  }
  for (const auto& p : properties_) {
    if (!seen.insert(p.iri).second) problems.push_back("duplicate IRI " + p.iri.str());
    if (p.domain && find_class(*p.domain) == nullptr) {
      problems.push_back(p.iri.str() + ": unknown domain " + p.domain->str());
    }
    if (p.range) {
      bool ok = p.kind == PropertyKind::Object ? find_class(*p.range) != nullptr : is_datatype(*p.range);
      if (!ok) problems.push_back(p.iri.str() + ": range " + p.range->str() + " does not fit its kind");
    }
  }
  if (!acyclic()) problems.push_back("subclass graph has a cycle");
  return problems;
}

const OntologyRegistry& registry() {
  static const OntologyRegistry instance = build_registry();
  return instance;
}

const std::vector<Individual>& reference_individuals() {
  static const std::vector<Individual> instance = build_individuals();
  return instance;
}

const Individual* find_connector(std::string_view token) { return find_by_token("ConnectorType", token); }
const Individual* find_charger(std::string_view token) { return find_by_token("ChargerType", token); }

}  // namespace evkg::vocab

namespace evkg::vocab {

rdf::Graph schema_graph(const OntologyRegistry& reg) {
  rdf::Graph g;
  for (const auto& [prefix, ns_iri] : reg.prefixes().entries()) g.prefixes().add(prefix, ns_iri);
  const Iri type(ns::kRdfType);
  const Iri label(ns::kRdfsLabel);
  const Iri sub(ns::kRdfsSubClassOf);
  const Iri domain(ns::rdfs("domain"));
  const Iri range(ns::rdfs("range"));
  for (const auto& c : reg.classes()) {
    g.insert({c.iri, type, Iri(ns::owl("Class"))});
    g.insert({c.iri, label, rdf::Literal(c.label)});
    for (const auto& s : c.super_classes) g.insert({c.iri, sub, s});
  }
  for (const auto& p : reg.properties()) {
    const char* kind = p.kind == PropertyKind::Object ? "ObjectProperty" : "DatatypeProperty";
    g.insert({p.iri, type, Iri(ns::owl(kind))});
    g.insert({p.iri, label, rdf::Literal(p.label)});
    if (p.domain) g.insert({p.iri, domain, *p.domain});
    if (p.range) g.insert({p.iri, range, *p.range});
  }
  return g;
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::RangeMismatch: return "range-mismatch";
    case Violation::Kind::DatatypeMismatch: return "datatype-mismatch";
    case Violation::Kind::UnknownClass: return "unknown-class";
    case Violation::Kind::UnknownProperty: return "unknown-property";
  }
  return "?";
}

std::vector<Violation> validate_instances(const rdf::Graph& data, const OntologyRegistry& reg) {
  std::vector<Violation> out;
  const Iri type(ns::kRdfType);
  auto in_ev_ont = [](const Iri& i) { return i.str().rfind(ns::kEvOnt, 0) == 0; };
  auto report = [&out](Violation::Kind k, const rdf::Triple& t, std::string msg) {
    out.push_back(Violation{k, t, std::move(msg)});
  };

  for (const auto& t : data.triples()) {
    if (t.predicate == type) {
      if (const auto* cls = std::get_if<Iri>(&t.object); cls && in_ev_ont(*cls) && !reg.find_class(*cls)) {
        report(Violation::Kind::UnknownClass, t, "unregistered class " + cls->str());
      }
      continue;
    }
    const PropertyDef* prop = reg.find_property(t.predicate);
    if (prop == nullptr) {
      if (in_ev_ont(t.predicate)) {
        report(Violation::Kind::UnknownProperty, t, "unregistered property " + t.predicate.str());
      }
      continue;
    }
    if (!prop->range) continue;

    if (prop->kind == PropertyKind::Datatype) {
      const auto* lit = std::get_if<rdf::Literal>(&t.object);
      if (lit == nullptr) {
        report(Violation::Kind::DatatypeMismatch, t, "expected a literal of " + prop->range->str());
        continue;
      }
      bool ok = lit->datatype() == *prop->range ||
                (prop->range->str() == rdf::xsd::kString && lit->datatype().str() == rdf::kLangString);
      if (!ok) {
        report(Violation::Kind::DatatypeMismatch, t,
               "datatype " + lit->datatype().str() + " where " + prop->range->str() + " is required");
      }
      continue;
    }

    if (rdf::is_literal(t.object)) {
      report(Violation::Kind::RangeMismatch, t, "literal object where " + prop->range->str() + " is required");
      continue;
    }
    bool ok = false;
    for (const auto& tt : data.match(t.object, type, std::nullopt)) {
      if (const auto* cls = std::get_if<Iri>(&tt.object); cls && reg.is_subclass_of(*cls, *prop->range)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      report(Violation::Kind::RangeMismatch, t,
             "object " + rdf::to_ntriples(t.object) + " is not typed as " + prop->range->str());
    }
  }
  return out;
}

}  // namespace evkg::vocab
