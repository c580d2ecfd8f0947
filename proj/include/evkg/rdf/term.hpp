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

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace evkg::rdf {

/// Structural violation of the RDF data model (bad IRI, ill-typed literal,
/// literal in subject position, ...).
class RdfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace xsd {
inline constexpr std::string_view kNamespace = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kGYear = "http://www.w3.org/2001/XMLSchema#gYear";
inline constexpr std::string_view kDate = "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view kBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace xsd

inline constexpr std::string_view kLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

/// Absolute IRI. Non-empty, no whitespace, no angle brackets.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

/// Literal with a lexical form, a datatype and an optional language tag.
/// Lexical forms of the numeric and gYear datatypes are checked on
/// construction; equality is exact on (lexical, datatype, language).
class Literal {
 public:
  /// Plain xsd:string literal.
  explicit Literal(std::string lexical);
  Literal(std::string lexical, Iri datatype);

  static Literal lang_string(std::string lexical, std::string language);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& language() const noexcept { return language_; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> language_;
};

struct BlankNode {
  std::string label;

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
};

using Term = std::variant<Iri, Literal, BlankNode>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Throws RdfError when the subject is a literal.
void check_triple(const Triple& t);

/// Canonical N-Triples lexical form of a term (`<iri>`, `_:b`, `"x"^^<dt>`).
/// xsd:string literals are written without a datatype suffix.
std::string to_ntriples(const Term& t);
std::string to_ntriples(const Triple& t);

/// Escapes `"`, `\`, and control characters for use inside a quoted literal.
std::string escape_string(std::string_view s);

bool is_valid_gyear(std::string_view s);
bool is_valid_integer(std::string_view s);
bool is_valid_decimal(std::string_view s);
bool is_valid_double(std::string_view s);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

// Convenience constructors used throughout the pipelines.
inline Term iri(std::string value) { return Iri(std::move(value)); }
inline Term literal(std::string lexical) { return Literal(std::move(lexical)); }
inline Term typed(std::string lexical, std::string_view datatype) {
  return Literal(std::move(lexical), Iri(std::string(datatype)));
}

}  // namespace evkg::rdf
