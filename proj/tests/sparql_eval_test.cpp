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

#include <gtest/gtest.h>

#include "evkg/rdf/ntriples.hpp"
#include "evkg/sparql/parser.hpp"
#include "evkg/sparql/results.hpp"

namespace evkg::sparql {
namespace {

const char* kData = R"(<http://x/a> <http://x/p> "1"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://x/a> <http://x/p> "2"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://x/b> <http://x/p> "2"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://x/b> <http://x/q> <http://x/a> .
<http://x/c> <http://x/q> <http://x/a> .
<http://x/c> <http://x/name> "cee" .
<http://x/a> <http://x/name> "ay" .
<http://x/a> <http://x/year> "2021"^^<http://www.w3.org/2001/XMLSchema#gYear> .
<http://x/b> <http://x/year> "2019"^^<http://www.w3.org/2001/XMLSchema#gYear> .
<http://x/c> <http://x/price> "0.5"^^<http://www.w3.org/2001/XMLSchema#decimal> .
)";

rdf::Graph data() { return rdf::parse_ntriples(kData); }

std::string tsv(const std::string& query) {
  rdf::PrefixTable p;
  p.add("x", "http://x/");
  return to_tsv(evaluate(data(), parse_query(query, p)));
}

constexpr const char* kInt = "^^<http://www.w3.org/2001/XMLSchema#integer>";

std::string i(int v) { return "\"" + std::to_string(v) + "\"" + kInt; }

TEST(Evaluate, BgpJoin) {
  EXPECT_EQ(tsv("SELECT ?s ?n { ?s x:q ?o . ?o x:name ?n }"),
            "?s\t?n\n<http://x/b>\t\"ay\"\n<http://x/c>\t\"ay\"\n");
}

TEST(Evaluate, MultisetUnlessDistinct) {
  EXPECT_EQ(tsv("SELECT ?o { ?s x:q ?o }"), "?o\n<http://x/a>\n<http://x/a>\n");
  EXPECT_EQ(tsv("SELECT DISTINCT ?o { ?s x:q ?o }"), "?o\n<http://x/a>\n");
  EXPECT_EQ(tsv("SELECT ?v { ?s x:p ?v }"), "?v\n" + i(1) + "\n" + i(2) + "\n" + i(2) + "\n");
}

TEST(Evaluate, UnionLeavesOtherBranchUnbound) {
  EXPECT_EQ(tsv("SELECT ?s ?n ?o { { ?s x:name ?n } UNION { ?s x:q ?o } }"),
            "?s\t?n\t?o\n<http://x/a>\t\"ay\"\t\n<http://x/b>\t\t<http://x/a>\n<http://x/c>\t\t<http://x/a>\n"
            "<http://x/c>\t\"cee\"\t\n");
}

TEST(Evaluate, FiltersApplyToWholeGroup) {
  EXPECT_EQ(tsv("SELECT ?s { FILTER(?v > 1) ?s x:p ?v }"), "?s\n<http://x/a>\n<http://x/b>\n");
  // a filter alone in a nested group constrains the enclosing group
  EXPECT_EQ(tsv("SELECT ?s { {FILTER(?v > 1)} { ?s x:p ?v } }"), "?s\n<http://x/a>\n<http://x/b>\n");
  EXPECT_EQ(tsv("SELECT ?s { ?s x:p ?v FILTER(?missing > 1) }"), "?s\n");
}

TEST(Evaluate, ComparisonSemantics) {
  EXPECT_EQ(tsv("SELECT ?s { ?s x:name ?n FILTER(?n < \"b\") }"), "?s\n<http://x/a>\n");
  EXPECT_EQ(tsv("SELECT ?s { ?s x:price ?v FILTER(?v = 0.50) }"), "?s\n<http://x/c>\n");
  EXPECT_EQ(tsv("SELECT ?s { ?s x:year ?y FILTER(?y > 2020) }"), "?s\n<http://x/a>\n");
  // string vs number is a type error for both = and !=
  EXPECT_EQ(tsv("SELECT ?s { ?s x:name ?n FILTER(?n != 1) }"), "?s\n");
  EXPECT_EQ(tsv("SELECT ?s { ?s x:q ?o FILTER(?o != 1) }"), "?s\n<http://x/b>\n<http://x/c>\n");
  EXPECT_EQ(tsv("SELECT ?s { ?s x:q ?o FILTER(?o < 1) }"), "?s\n");
}

TEST(Evaluate, ValuesJoinOnTermEquality) {
  EXPECT_EQ(tsv("SELECT ?s { ?s x:p ?v VALUES ?v { 2 } }"), "?s\n<http://x/a>\n<http://x/b>\n");
  EXPECT_EQ(tsv("SELECT ?s { ?s x:p ?v VALUES ?v { 2.0 } }"), "?s\n");
  EXPECT_EQ(tsv("SELECT ?s ?v { ?s x:name ?n VALUES (?s ?v) { (<http://x/a> UNDEF) (<http://x/c> 7) } }"),
            "?s\t?v\n<http://x/a>\t\n<http://x/c>\t" + i(7) + "\n");
}

TEST(Evaluate, GroupBySum) {
  EXPECT_EQ(tsv("SELECT ?s (SUM(?v) AS ?t) { ?s x:p ?v } GROUP BY ?s"),
            "?s\t?t\n<http://x/a>\t" + i(3) + "\n<http://x/b>\t" + i(2) + "\n");
  EXPECT_EQ(tsv("SELECT (SUM(?v) AS ?t) { ?s x:p ?v }"), "?t\n" + i(5) + "\n");
  EXPECT_EQ(tsv("SELECT (SUM(?v) AS ?t) { ?s x:nothing ?v }"), "?t\n" + i(0) + "\n");
  EXPECT_EQ(tsv("SELECT ?s (SUM(?v) AS ?t) { ?s x:nothing ?v } GROUP BY ?s"), "?s\t?t\n");
  // a non-numeric member makes the aggregate unbound
  EXPECT_EQ(tsv("SELECT ?s (SUM(?v) AS ?t) { ?s x:name ?v } GROUP BY ?s"), "?s\t?t\n<http://x/a>\t\n<http://x/c>\t\n");
  // grouping by a variable no row binds puts everything in one group
  EXPECT_EQ(tsv("SELECT (SUM(?v) AS ?t) { ?s x:p ?v } GROUP BY ?unbound"), "?t\n" + i(5) + "\n");
  EXPECT_EQ(tsv("SELECT (SUM(?v + 0.5) AS ?t) { ?s x:p ?v }"),
            "?t\n\"6.5\"^^<http://www.w3.org/2001/XMLSchema#decimal>\n");
}

TEST(Evaluate, Arithmetic) {
  const std::string dec = "^^<http://www.w3.org/2001/XMLSchema#decimal>";
  EXPECT_EQ(tsv("SELECT ?s ((?v / 4) AS ?r) { ?s x:p ?v } GROUP BY ?s ?v"),
            "?s\t?r\n<http://x/a>\t\"0.25\"" + dec + "\n<http://x/a>\t\"0.5\"" + dec + "\n<http://x/b>\t\"0.5\"" + dec + "\n");
  EXPECT_EQ(tsv("SELECT ?s ((?v / 0) AS ?r) { ?s x:p ?v } GROUP BY ?s ?v"), "?s\t?r\n<http://x/a>\t\n<http://x/a>\t\n<http://x/b>\t\n");
  EXPECT_EQ(tsv("SELECT ?s ((?v * 3 - 1) AS ?r) { ?s x:p ?v FILTER(?v = 1) } GROUP BY ?s ?v"),
            "?s\t?r\n<http://x/a>\t" + i(2) + "\n");
  EXPECT_EQ(tsv("SELECT ?s ((4 / 2) AS ?r) { ?s x:price ?v } GROUP BY ?s"), "?s\t?r\n<http://x/c>\t\"2.0\"" + dec + "\n");
}

TEST(Evaluate, SubSelectScope) {
  // the inner ?v is not projected, so the outer ?v stays independent
  EXPECT_EQ(tsv("SELECT ?s ?v { { SELECT ?s { ?s x:p ?v } } ?s x:year ?v }"),
            "?s\t?v\n<http://x/a>\t\"2021\"^^<http://www.w3.org/2001/XMLSchema#gYear>\n"
            "<http://x/a>\t\"2021\"^^<http://www.w3.org/2001/XMLSchema#gYear>\n"
            "<http://x/b>\t\"2019\"^^<http://www.w3.org/2001/XMLSchema#gYear>\n");
  EXPECT_EQ(tsv("SELECT ?s ?t { { SELECT ?s (SUM(?v) AS ?t) { ?s x:p ?v } GROUP BY ?s } { SELECT ?s { ?s x:name ?n } } }"),
            "?s\t?t\n<http://x/a>\t" + i(3) + "\n");
}

TEST(Evaluate, SelectAllColumnOrder) {
  EXPECT_EQ(tsv("SELECT * { ?s x:q ?o . ?o x:name ?n }").substr(0, 11), "?s\t?o\t?n\n<h");
}

TEST(Results, JsonShape) {
  rdf::PrefixTable p;
  p.add("x", "http://x/");
  const std::string json = to_json(evaluate(data(), parse_query("SELECT ?s ?n ?z { ?s x:name ?n }", p)));
  EXPECT_NE(json.find("\"vars\": [\n      \"s\",\n      \"n\",\n      \"z\"\n    ]"), std::string::npos);
  EXPECT_NE(json.find("\"type\": \"uri\""), std::string::npos);
  EXPECT_NE(json.find("\"value\": \"ay\""), std::string::npos);
  EXPECT_EQ(json.find("\"z\": {"), std::string::npos);
  EXPECT_EQ(json.find("XMLSchema#string"), std::string::npos);
}

TEST(Numeric, CanonicalForms) {
  using K = Numeric::Kind;
  auto lex = [](const Numeric& n) { return std::get<rdf::Literal>(*numeric_term(n)).lexical(); };
  EXPECT_EQ(lex({K::Integer, -12, 0}), "-12");
  EXPECT_EQ(lex({K::Decimal, 0, 2.0}), "2.0");
  EXPECT_EQ(lex({K::Decimal, 0, 3.0 / 98.0}), "0.030612244897959183");
  EXPECT_EQ(lex({K::Decimal, 0, 1e-7}), "0.0000001");
  EXPECT_EQ(lex({K::Double, 0, 1500.0}), "1.5E3");
  EXPECT_EQ(numeric_value(rdf::typed("2019", rdf::xsd::kGYear))->integer, 2019);
  EXPECT_FALSE(numeric_value(rdf::literal("12")).has_value());
}

}  // namespace
}  // namespace evkg::sparql
