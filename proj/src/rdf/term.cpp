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

#include "evkg/rdf/term.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <functional>

namespace evkg::rdf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return s;
}

void check_lexical(const std::string& lexical, const Iri& datatype) {
  const std::string& dt = datatype.str();
  bool ok = true;
  if (dt == xsd::kGYear) {
    ok = is_valid_gyear(lexical);
  } else if (dt == xsd::kInteger) {
    ok = is_valid_integer(lexical);
  } else if (dt == xsd::kDecimal) {
    ok = is_valid_decimal(lexical);
  } else if (dt == xsd::kDouble) {
    ok = is_valid_double(lexical);
  }
  if (!ok) {
    throw RdfError("invalid lexical form \"" + lexical + "\" for datatype <" + dt + ">");
  }
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw RdfError("empty IRI");
  for (unsigned char c : value_) {
    if (c <= 0x20 || c == '<' || c == '>' || c == '"') {
      throw RdfError("invalid character in IRI: " + value_);
    }
  }
}

Literal::Literal(std::string lexical)
    : lexical_(std::move(lexical)), datatype_(std::string(xsd::kString)) {}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (datatype_.str() == kLangString) {
    throw RdfError("language-tagged literal requires a language tag");
  }
  check_lexical(lexical_, datatype_);
}

Literal Literal::lang_string(std::string lexical, std::string language) {
  if (language.empty()) throw RdfError("empty language tag");
  Literal lit(std::move(lexical));
  lit.datatype_ = Iri(std::string(kLangString));
  lit.language_ = std::move(language);
  return lit;
}

bool is_valid_gyear(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.size() < 4 || !all_digits(s)) return false;
  return s.size() == 4 || s.front() != '0';
}

bool is_valid_integer(std::string_view s) { return all_digits(strip_sign(s)); }

bool is_valid_decimal(std::string_view s) {
  s = strip_sign(s);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  auto whole = s.substr(0, dot);
  auto frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  return (whole.empty() || all_digits(whole)) && (frac.empty() || all_digits(frac));
}

bool is_valid_double(std::string_view s) {
  if (s == "INF" || s == "-INF" || s == "+INF" || s == "NaN") return true;
  auto e = s.find_first_of("eE");
  if (e == std::string_view::npos) return is_valid_decimal(s);
  return is_valid_decimal(s.substr(0, e)) && is_valid_integer(s.substr(e + 1));
}

void check_triple(const Triple& t) {
  if (is_literal(t.subject)) {
    throw RdfError("literal in subject position: " + to_ntriples(t.subject));
  }
}

std::string escape_string(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string to_ntriples(const Term& t) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Iri>) {
          return "<" + v.str() + ">";
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          return "_:" + v.label;
        } else {
          std::string out = "\"" + escape_string(v.lexical()) + "\"";
          if (v.language()) {
            out += "@" + *v.language();
          } else if (v.datatype().str() != xsd::kString) {
            out += "^^<" + v.datatype().str() + ">";
          }
          return out;
        }
      },
      t);
}

std::string to_ntriples(const Triple& t) {
  return to_ntriples(t.subject) + " " + to_ntriples(Term(t.predicate)) + " " +
         to_ntriples(t.object) + " .";
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::hash<std::string> h;
  std::size_t seed = t.index();
  auto mix = [&seed](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Iri>) {
          mix(h(v.str()));
        } else if constexpr (std::is_same_v<T, BlankNode>) {
          mix(h(v.label));
        } else {
          mix(h(v.lexical()));
          mix(h(v.datatype().str()));
          if (v.language()) mix(h(*v.language()));
        }
      },
      t);
  return seed;
}

}  // namespace evkg::rdf
