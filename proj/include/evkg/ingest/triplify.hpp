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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "evkg/ingest/records.hpp"
#include "evkg/rdf/graph.hpp"

namespace evkg::ingest {

struct RegistrationCollection {
  std::string zip;
  int year = 0;
  ProductKey product;
  std::size_t amount = 0;

  friend bool operator==(const RegistrationCollection&, const RegistrationCollection&) = default;
};

/// Groups records by (zip, registration year, product). Output is sorted by
/// that key; amounts sum to the number of input records.
std::vector<RegistrationCollection> aggregate_registrations(const std::vector<RegistrationRecord>& records);

/// Distinct products referenced by `collections`, sorted.
std::vector<ProductKey> distinct_products(const std::vector<RegistrationCollection>& collections);

/// Throws IngestError listing every collection product missing from
/// `products`.
rdf::Graph triplify_adoption(const std::vector<RegistrationCollection>& collections,
                             const std::vector<ProductKey>& products);

/// Throws IngestError on an unknown charger or connector token.
rdf::Graph triplify_stations(const std::vector<StationRecord>& records);

/// Throws IngestError when a geometry does not fit the asset kind.
rdf::Graph triplify_transmission(const std::vector<TransmissionAssetRecord>& records);

/// Throws IngestError on a duplicate zip.
rdf::Graph triplify_places(const std::vector<ZipAreaRecord>& records);

/// Drops whitespace and maps every character outside [A-Za-z0-9_-] to '_'.
std::string sanitize(std::string_view s);

// Minted resource IRIs.
std::string zip_iri(std::string_view zip);
std::string product_iri(const ProductKey& p);
std::string collection_iri(const RegistrationCollection& c);
std::string station_iri(std::string_view station_id);

/// Detects two different natural keys minting the same IRI.
class IriMinter {
 public:
  /// Returns `iri`; throws IngestError when `iri` was already minted for a
  /// different `natural_key`.
  rdf::Iri mint(std::string iri, std::string_view natural_key);

 private:
  std::map<std::string, std::string, std::less<>> keys_;
};

}  // namespace evkg::ingest
