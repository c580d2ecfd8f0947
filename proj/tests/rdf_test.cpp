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

#include <random>

#include "evkg/rdf/graph.hpp"
#include "evkg/rdf/ntriples.hpp"

namespace evkg::rdf {
namespace {

const std::string kEx = "http://example.org/";

Triple tr(const std::string& s, const std::string& p, Term o) { return {Iri(kEx + s), Iri(kEx + p), std::move(o)}; }

TEST(Term, LiteralLexicalFormsAreChecked) {
  EXPECT_NO_THROW(typed("2021", xsd::kGYear));
  EXPECT_NO_THROW(typed("-0012", xsd::kGYear));
  EXPECT_THROW(typed("21", xsd::kGYear), RdfError);
  EXPECT_THROW(typed("1.5", xsd::kInteger), RdfError);
  EXPECT_THROW(typed("abc", xsd::kDecimal), RdfError);
  EXPECT_NO_THROW(typed("1.5E3", xsd::kDouble));
  EXPECT_THROW(Iri("has space"), RdfError);
  EXPECT_THROW(Iri(""), RdfError);
}

TEST(Term, NTriplesForms) {
  EXPECT_EQ(to_ntriples(iri("http://a/b")), "<http://a/b>");
  EXPECT_EQ(to_ntriples(literal("x\"y\n")), "\"x\\\"y\\n\"");
  EXPECT_EQ(to_ntriples(typed("7", xsd::kInteger)), "\"7\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  EXPECT_EQ(to_ntriples(Term(Literal::lang_string("chat", "fr"))), "\"chat\"@fr");
  EXPECT_EQ(to_ntriples(Term(BlankNode{"b0"})), "_:b0");
}

TEST(Graph, InsertIsSetSemantics) {
  Graph g;
  EXPECT_TRUE(g.insert(tr("s", "p", literal("o"))));
  EXPECT_FALSE(g.insert(tr("s", "p", literal("o"))));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_THROW(g.insert({literal("x"), Iri(kEx + "p"), literal("o")}), RdfError);
}

TEST(Graph, IndexesStayInStep) {
  std::mt19937 rng(7);
  Graph g;
  std::vector<Triple> all;
  for (int i = 0; i < 300; ++i) {
    auto t = tr("s" + std::to_string(rng() % 9), "p" + std::to_string(rng() % 4),
                rng() % 2 ? iri(kEx + "o" + std::to_string(rng() % 9)) : literal(std::to_string(rng() % 5)));
    if (g.insert(t)) all.push_back(t);
  }
  EXPECT_EQ(g.spo_size(), all.size());
  EXPECT_EQ(g.pos_size(), all.size());
  EXPECT_EQ(g.osp_size(), all.size());

  // every bound/unbound combination agrees with a linear scan
  for (const auto& probe : all) {
    for (int mask = 0; mask < 8; ++mask) {
      std::optional<Term> s = mask & 1 ? std::optional<Term>(probe.subject) : std::nullopt;
      std::optional<Iri> p = mask & 2 ? std::optional<Iri>(probe.predicate) : std::nullopt;
      std::optional<Term> o = mask & 4 ? std::optional<Term>(probe.object) : std::nullopt;
      std::size_t expected = 0;
      for (const auto& t : all) {
        expected += (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
      }
      ASSERT_EQ(g.match(s, p, o).size(), expected) << "mask " << mask;
    }
  }
}

TEST(NTriples, SerializationIsSortedAndRoundTrips) {
  Graph g;
  g.insert(tr("b", "p", literal("tab\there")));
  g.insert(tr("a", "p", typed("3", xsd::kInteger)));
  g.insert(tr("a", "q", Term(Literal::lang_string("hi", "en"))));
  g.insert({BlankNode{"x"}, Iri(kEx + "p"), iri(kEx + "a")});
  const std::string text = serialize_ntriples(g);
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(lines.size(), 4u);
  Graph back = parse_ntriples(text);
  EXPECT_EQ(back.size(), g.size());
  EXPECT_EQ(serialize_ntriples(back), text);
}

TEST(NTriples, EmptyGraphIsEmptyString) { EXPECT_EQ(serialize_ntriples(Graph{}), ""); }

TEST(NTriples, ErrorsCarryLine) {
  try {
    parse_ntriples("<http://a> <http://b> \"c\" .\n<http://a> <http://b> .\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_ntriples("\"lit\" <http://b> <http://c> .\n"), ParseError);
}

TEST(NTriples, UnicodeEscapes) {
  Graph g = parse_ntriples("<http://a> <http://b> \"caf\\u00E9\" .\n");
  auto t = g.triples().front();
  EXPECT_EQ(std::get<Literal>(t.object).lexical(), "caf\xC3\xA9");
}

TEST(Turtle, RoundTripThroughPrefixes) {
  Graph g;
  g.prefixes().add("ex", kEx);
  g.insert(tr("a", "p", iri(kEx + "b")));
  g.insert(tr("a", "p", literal("x")));
  g.insert({Iri(kEx + "a"), Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"), iri(kEx + "C")});
  const std::string ttl = serialize_turtle(g);
  EXPECT_NE(ttl.find("@prefix ex:"), std::string::npos);
  EXPECT_NE(ttl.find("ex:a"), std::string::npos);
  Graph back = parse_turtle(ttl);
  EXPECT_EQ(serialize_ntriples(back), serialize_ntriples(g));
}

TEST(Prefixes, ExpandAndCompact) {
  PrefixTable t;
  t.add("ex", kEx);
  t.add("exs", kEx + "sub/");
  EXPECT_EQ(t.expand("ex:x").str(), kEx + "x");
  EXPECT_THROW(t.expand("nope:x"), UnknownPrefixError);
  EXPECT_EQ(t.compact(Iri(kEx + "sub/y")), "exs:y");
  EXPECT_EQ(t.compact(Iri("http://other/z")), "<http://other/z>");
}

}  // namespace
}  // namespace evkg::rdf
