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

#include <string>
#include <string_view>

namespace evkg::ns {

inline constexpr std::string_view kEvOnt = "https://w3id.org/evkg/ontology/";
inline constexpr std::string_view kEvr = "https://w3id.org/evkg/resource/";
inline constexpr std::string_view kKwgOnt = "http://stko-kwg.geog.ucsb.edu/lod/ontology/";
inline constexpr std::string_view kGeo = "http://www.opengis.net/ont/geosparql#";
inline constexpr std::string_view kSf = "http://www.opengis.net/ont/sf#";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline std::string ev_ont(std::string_view local) { return std::string(kEvOnt) + std::string(local); }
inline std::string evr(std::string_view local) { return std::string(kEvr) + std::string(local); }
inline std::string kwg_ont(std::string_view local) { return std::string(kKwgOnt) + std::string(local); }
inline std::string geo(std::string_view local) { return std::string(kGeo) + std::string(local); }
inline std::string sf(std::string_view local) { return std::string(kSf) + std::string(local); }
inline std::string rdf(std::string_view local) { return std::string(kRdf) + std::string(local); }
inline std::string rdfs(std::string_view local) { return std::string(kRdfs) + std::string(local); }
inline std::string owl(std::string_view local) { return std::string(kOwl) + std::string(local); }
inline std::string xsd(std::string_view local) { return std::string(kXsd) + std::string(local); }

inline const std::string kRdfType = rdf("type");
inline const std::string kRdfsLabel = rdfs("label");
inline const std::string kRdfsSubClassOf = rdfs("subClassOf");
inline const std::string kOwlSameAs = owl("sameAs");
inline const std::string kHasGeometry = geo("hasGeometry");
inline const std::string kAsWkt = geo("asWKT");
inline const std::string kSfWithin = kwg_ont("sfWithin");
inline const std::string kSfContains = kwg_ont("sfContains");
inline const std::string kSfCrosses = kwg_ont("sfCrosses");

}  // namespace evkg::ns
