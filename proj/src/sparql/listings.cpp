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

#include "evkg/sparql/listings.hpp"

#include <regex>
#include <stdexcept>

#include "evkg/sparql/parser.hpp"

namespace evkg::sparql {

namespace {

constexpr std::string_view kListings[] = {
    // Listing 1
    R"rq(SELECT DISTINCT ?lev WHERE { 
	?ev a ev-ont:ElectricVehicleProduct.
    	?ev ev-ont:hasMatchableConnectorType evr:connectortype.CHAdeMO.
    	?ev rdfs:label ?lev.
})rq",
    // Listing 2
    R"rq(SELECT * WHERE { 
    ?county a kwg-ont:AdministrativeRegion_3.
    ?county rdfs:label "King".
    ?zipcode a kwg-ont:ZipCodeArea.
    ?zipcode kwg-ont:sfWithin ?county.
    {?road a kwg-ont:RoadSegment.
    ?road kwg-ont:sfWithin ?county.}
    UNION
    {?transline a ev-ont:TransmissionLine.
    ?transline kwg-ont:sfCrosses ?zipcode.}
    UNION
    {?char_station a ev-ont:ChargingStation.
    ?char_station kwg-ont:sfWithin ?zipcode.}
    UNION
    {?substation a ev-ont:Substation.
    ?substation kwg-ont:sfWithin ?zipcode.}
    UNION
    {?powerplant a ev-ont:PowerPlant.
    ?powerplant kwg-ont:sfWithin ?zipcode.}
    })rq",
    // Listing 3
    R"rq(SELECT DISTINCT ?co ?station ?sWKT
WHERE {{    
    ?zipcode a kwg-ont:ZipCodeArea.
    ?zipcode rdfs:label "zip code 95814".
    ?station a ev-ont:PublicChargingStation.
    ?station kwg-ont:sfWithin ?zipcode.
    ?station ev-ont:hosts ?chargerCollection. 
    ?chargerCollection ev-ont:hasConnectorType ?co.
    ?station ev-ont:hasOperatingHours "24 hours daily  ".
    ?station ev-ont:isUnderChargingNetwork 
        evr:chargingnetwork.ChargePointNetwork.
    ?station geo:hasGeometry ?sGeom .
    ?sGeom geo:asWKT ?sWKT .

    ?ev a ev-ont:ElectricVehicleProduct.
    ?ev ev-ont:hasModelType ?model.
    ?ev rdfs:label "Nissan Leaf".
    ?ev ev-ont:hasModelYear "2021"^^xsd:gYear.
    ?ev ev-ont:hasMatchableConnectorType ?co.
    ?co rdfs:label ?co_name.
    VALUES ?co_name{"CHAdeMO" "J1772COMBO" "TESLA"}}})rq",
    // Listing 4
    R"rq(SELECT ?co (SUM(?charger_n) AS ?zip_dcfc_num) ?year
WHERE{
SELECT DISTINCT ?charger_conn ?co ?charger_n ?year WHERE { 
    ?zip a kwg-ont:ZipCodeArea.
    ?state a kwg-ont:AdministrativeRegion_2.
    ?state rdfs:label "New Jersey".
    ?state kwg-ont:sfContains ?zip.

    ?stn a ev-ont:ChargingStation.
    ?stn kwg-ont:sfWithin ?zip.
    ?stn ev-ont:hasOpenYear ?year.
    ?stn ev-ont:hosts ?charger_conn.
    ?charger_conn ev-ont:hasAmount ?charger_n.
    ?charger_conn ev-ont:hasChargerType ?charger.
    VALUES (?charger) {(evr:chargertype.DCFastCharger)}
    ?charger_conn ev-ont:hasConnectorType ?co.

}}  Group By ?co ?year ?stn)rq",
    // Listing 5
    R"rq(    SELECT ?co_name ?reg_year (SUM(?evtg_n) AS ?ev_with_dc_num) WHERE{
    SELECT Distinct ?evtg ?evtg_n ?co_name ?reg_year WHERE { 
    ?zip a kwg-ont:ZipCodeArea.
    ?state a kwg-ont:AdministrativeRegion_2.
    ?state rdfs:label "New Jersey".
    ?state kwg-ont:sfContains ?zip.

    ?evtg a ev-ont:ElectricVehicleRegistrationCollection.
    ?evtg ev-ont:hasAmount ?evtg_n.
    ?evtg ev-ont:hasTemporalScope ?reg_year.
    ?evtg ev-ont:hasSpatialScope ?zip.
    ?evtg ev-ont:hasProductInfo ?ev.
    ?ev ev-ont:hasMatchableConnectorType ?co.
    ?co rdfs:label ?co_name.
    VALUES ?co_name{"TESLA" "CHAdeMO" "J1772COMBO"}
}}  GROUP BY ?co_name ?reg_year)rq",
    // Listing 6
    R"rq(SELECT (?zip_dcfc_num/?ev_with_dc_num AS ?dcfc_per_ev) WHERE{
{``` Query from Listing 4 ```}
{``` Query from Listing 5```}
})rq",
    // Listing 7
    R"rq(SELECT DISTINCT ?zipcode (SUM(?regNum) AS ?zipRegNum)
WHERE{
        ?zipcode a kwg-ont:ZipCodeArea.
        ?state a kwg-ont:AdministrativeRegion_2.
        ?state rdfs:label "New Jersey".
        ?state kwg-ont:sfContains ?zipcode.
        ?reggroup a ev-ont:ElectricVehicleRegistrationCollection.
        ?reggroup ev-ont:hasSpatialScope ?zipcode.
        ?reggroup ev-ont:hasTemporalScope "2021"^^xsd:gYear.
        ?reggroup ev-ont:hasProductInfo ?ev. 
        ?reggroup ev-ont:hasAmount ?regNum.
        ?ev ev-ont:hasMatchableConnectorType 
            evr:connectortype.J1772COMBO.
	} GROUP BY ?zipcode)rq",
    // Listing 8
    R"rq(SELECT ?zipcode ?zipChargerNum ?zipRegNum 
(?zipChargerNum/?zipRegNum AS ?ratio) 
WHERE{
    ### part 1 the EVSE number at zip code level
    {SELECT DISTINCT ?zipcode (SUM(?chargerNum) AS ?zipChargerNum) 
    WHERE{
    ?zipcode a kwg-ont:ZipCodeArea.
    ?state a kwg-ont:AdministrativeRegion_2.
    ?state rdfs:label "New Jersey".
    ?zipcode kwg-ont:sfWithin ?state.
    ?station a ev-ont:ChargingStation.
    ?station kwg-ont:sfWithin ?zipcode.
    ?station ev-ont:hosts ?chargerCollection. 
    ?chargerCollection ev-ont:hasAmount ?chargerNum.
    ?chargerCollection ev-ont:hasConnectorType 
        evr:connectortype.J1772COMBO.
    } GROUP BY ?zipcode}
    ### part 2 the registration number at zip code level
    {```Query from Listing 7```}
    })rq",
    // Listing 9
    R"rq(## Condition 1: Average charging resource less than 0.1
SELECT ?zipcode ?transline ?ratio 
WHERE{
    {FILTER(?ratio < 0.1)}
    {```Query from Listing 8```} 
    {SELECT DISTINCT ?zipcode ?transline WHERE {		
        ?zipcode a kwg-ont:ZipCodeArea.
        ?state a kwg-ont:AdministrativeRegion_2.
        ?state rdfs:label "New Jersey".
        ?state kwg-ont:sfContains ?zipcode.
        ?transline a ev-ont:TransmissionLine.
        ?transline kwg-ont:sfCrosses ?zipcode.
        ?transline ev-ont:hasVoltageClass ?v_class.
        ?v_class rdfs:label "500".
    } GROUP BY ?zipcode ?transline}})rq",
    // Listing 10
    R"rq(## Condition 2: Electric vehicle registration more than 98
SELECT ?zipcode
WHERE{
    {FILTER(?zipRegNum>98)}
    {``` Query from Listing 7```}
    {SELECT DISTINCT ?zipcode ?transline WHERE {		
    ?zipcode a kwg-ont:ZipCodeArea.
    ?state a kwg-ont:AdministrativeRegion_2.
    ?state rdfs:label "New Jersey".
    ?state kwg-ont:sfContains ?zipcode.
    ?transline a ev-ont:TransmissionLine.
    ?transline kwg-ont:sfCrosses ?zipcode.
    ?transline ev-ont:hasVoltageClass ?v_class.
    ?v_class rdfs:label "500".
    } GROUP BY ?zipcode ?transline}})rq",
};

}  // namespace

std::string_view listing_text(int n) {
  if (n < 1 || n > kListingCount) throw std::out_of_range("no listing " + std::to_string(n));
  return kListings[n - 1];
}

std::vector<int> listing_references(int n) {
  static const std::regex placeholder(R"(```\s*Query from Listing\s*(\d+)\s*```)");
  std::vector<int> out;
  const std::string text(listing_text(n));
  for (auto it = std::sregex_iterator(text.begin(), text.end(), placeholder); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoi((*it)[1].str()));
  }
  return out;
}

std::string expand_listing(int n) {
  static const std::regex placeholder(R"(```\s*Query from Listing\s*(\d+)\s*```)");
  const std::string text(listing_text(n));
  std::string out;
  std::size_t last = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), placeholder); it != std::sregex_iterator(); ++it) {
    const int ref = std::stoi((*it)[1].str());
    if (ref >= n) throw std::invalid_argument("listing " + std::to_string(n) + " refers forward to " + std::to_string(ref));
    out += text.substr(last, static_cast<std::size_t>(it->position()) - last);
    out += expand_listing(ref);
    last = static_cast<std::size_t>(it->position() + it->length());
  }
  out += text.substr(last);
  return out;
}

Query parse_listing(int n, const rdf::PrefixTable& prefixes) { return parse_query(expand_listing(n), prefixes); }

Solution evaluate_federated_listing(const rdf::Graph& graph, int listing_id, const rdf::PrefixTable& prefixes) {
  if (listing_id != 6 && listing_id != 8 && listing_id != 9 && listing_id != 10) {
    throw std::invalid_argument("listing " + std::to_string(listing_id) + " has no embedded listing");
  }
  return evaluate(graph, parse_listing(listing_id, prefixes));
}

}  // namespace evkg::sparql
