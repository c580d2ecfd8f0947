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

#include "evkg/sparql/results.hpp"

#include <algorithm>

#include "json.hpp"

namespace evkg::sparql {

namespace {

std::string join_tabs(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += '\t';
    line += cells[i];
  }
  return line;
}

struct Indexed {
  std::string line;
  std::size_t index;
};

std::vector<std::size_t> sorted_order(const Solution& s, std::vector<std::vector<std::string>>& cells) {
  cells.clear();
  std::vector<Indexed> keyed;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    std::vector<std::string> row;
    for (const auto& t : s.rows[i]) row.push_back(t ? rdf::to_ntriples(*t) : std::string());
    keyed.push_back({join_tabs(row), i});
    cells.push_back(std::move(row));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const Indexed& a, const Indexed& b) { return a.line < b.line; });
  std::vector<std::size_t> order;
  for (const auto& k : keyed) order.push_back(k.index);
  return order;
}

}  // namespace

std::vector<std::vector<std::string>> sorted_rows(const Solution& s) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::string>> out;
  for (auto i : sorted_order(s, cells)) out.push_back(std::move(cells[i]));
  return out;
}

std::string to_tsv(const Solution& s) {
  std::vector<std::string> header;
  for (const auto& v : s.vars) header.push_back("?" + v);
  std::string out = join_tabs(header) + "\n";
  for (const auto& row : sorted_rows(s)) out += join_tabs(row) + "\n";
  return out;
}

std::string to_json(const Solution& s) {
  std::vector<std::vector<std::string>> cells;
  const auto order = sorted_order(s, cells);
  nlohmann::ordered_json bindings = nlohmann::ordered_json::array();
  for (auto i : order) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < s.vars.size(); ++j) {
      const auto& t = s.rows[i][j];
      if (!t) continue;
      nlohmann::ordered_json v;
      if (const auto* iri = std::get_if<rdf::Iri>(&*t)) {
        v["type"] = "uri";
        v["value"] = iri->str();
      } else if (const auto* bn = std::get_if<rdf::BlankNode>(&*t)) {
        v["type"] = "bnode";
        v["value"] = bn->label;
      } else {
        const auto& lit = std::get<rdf::Literal>(*t);
        v["type"] = "literal";
        v["value"] = lit.lexical();
        if (lit.language()) {
          v["xml:lang"] = *lit.language();
        } else if (lit.datatype().str() != rdf::xsd::kString) {
          v["datatype"] = lit.datatype().str();
        }
      }
      b[s.vars[j]] = std::move(v);
    }
    bindings.push_back(std::move(b));
  }
  nlohmann::ordered_json doc;
  doc["head"]["vars"] = s.vars;
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump(2) + "\n";
}

}  // namespace evkg::sparql
