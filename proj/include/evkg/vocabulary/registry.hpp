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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "evkg/rdf/graph.hpp"
#include "evkg/rdf/prefixes.hpp"

namespace evkg::vocab {

enum class ModuleTag { Adoption, Charging, Transmission, External };

std::string_view to_string(ModuleTag tag);

struct ClassDef {
  rdf::Iri iri;
  std::string label;
  std::vector<rdf::Iri> super_classes;
  ModuleTag module;
};

enum class PropertyKind { Object, Datatype };

struct PropertyDef {
  rdf::Iri iri;
  PropertyKind kind;
  std::optional<rdf::Iri> domain;
  /// Class for object properties, datatype for datatype properties. Only the
  /// RDF/OWL built-ins (rdf:type, rdfs:subClassOf, owl:sameAs) leave it open.
  std::optional<rdf::Iri> range;
  std::string label;
  ModuleTag module;
};

/// Named individual shipped with the ontology (charger levels, connector
/// standards).
struct Individual {
  rdf::Iri iri;
  rdf::Iri type;
  std::string label;
  /// Token used for this individual in the ingest CSV files.
  std::string token;
};

class OntologyRegistry {
 public:
  OntologyRegistry(std::vector<ClassDef> classes, std::vector<PropertyDef> properties,
                   rdf::PrefixTable prefixes);

  const std::vector<ClassDef>& classes() const noexcept { return classes_; }
  const std::vector<PropertyDef>& properties() const noexcept { return properties_; }
  const rdf::PrefixTable& prefixes() const noexcept { return prefixes_; }

  const ClassDef* find_class(const rdf::Iri& iri) const;
  const PropertyDef* find_property(const rdf::Iri& iri) const;
  bool is_datatype(const rdf::Iri& iri) const;

  /// Reflexive-transitive superclasses of `cls` (empty for unknown classes).
  std::set<rdf::Iri> ancestors(const rdf::Iri& cls) const;
  /// Reflexive-transitive subclasses of `cls`.
  std::set<rdf::Iri> descendants(const rdf::Iri& cls) const;
  bool is_subclass_of(const rdf::Iri& sub, const rdf::Iri& super) const;

  bool acyclic() const;

  /// Human-readable invariant violations; empty for a well-formed registry.
  std::vector<std::string> check() const;

 private:
  std::vector<ClassDef> classes_;
  std::vector<PropertyDef> properties_;
  rdf::PrefixTable prefixes_;
};

/// The EVKG ontology: adoption, charging and transmission modules plus the
/// reused GeoSPARQL / KnowWhereGraph / RDF(S) / OWL terms.
const OntologyRegistry& registry();

/// Charger-level and connector-standard individuals.
const std::vector<Individual>& reference_individuals();
const Individual* find_connector(std::string_view token);
const Individual* find_charger(std::string_view token);

/// Declaration triples: a type and a label per entry, plus subclass,
/// domain and range axioms.
rdf::Graph schema_graph(const OntologyRegistry& reg);

struct Violation {
  enum class Kind { RangeMismatch, DatatypeMismatch, UnknownClass, UnknownProperty };
  Kind kind;
  rdf::Triple triple;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

/// Conformance check of instance data against the registry.
std::vector<Violation> validate_instances(const rdf::Graph& data, const OntologyRegistry& reg);

}  // namespace evkg::vocab
