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

#include "evkg/rdf/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace evkg::rdf {

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Cursor shared by the N-Triples and Turtle readers.
class Reader {
 public:
  Reader(std::string_view text, const PrefixTable* prefixes)
      : text_(text), prefixes_(prefixes) {}

  std::size_t line() const { return line_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  // Skips spaces, tabs, comments; newlines only when `newlines` is set.
  void skip_ws(bool newlines) {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '\n' && newlines) {
        ++pos_;
        ++line_;
      } else if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    auto end = text_.find_first_of(" \t\r\n", pos_);
    std::string token(text_.substr(pos_, end == std::string_view::npos ? end : end - pos_));
    if (token.empty()) token = at_end() ? "<eof>" : "<eol>";
    throw ParseError(line_, token, what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume_keyword(std::string_view kw, bool case_insensitive) {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive ? std::toupper(static_cast<unsigned char>(a)) != b : a != b) return false;
    }
    pos_ += kw.size();
    return true;
  }

  Iri read_iriref() {
    expect('<');
    auto end = text_.find('>', pos_);
    if (end == std::string_view::npos) fail("unterminated IRI");
    std::string value(text_.substr(pos_, end - pos_));
    try {
      Iri iri(value);
      pos_ = end + 1;
      return iri;
    } catch (const RdfError& e) {
      fail(e.what());
    }
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          static_cast<unsigned char>(c) >= 0x80) {
        ++pos_;
      } else if (c == '.' && pos_ + 1 < text_.size() &&
                 (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_' ||
                  text_[pos_ + 1] == '-')) {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Iri read_prefixed() {
    if (prefixes_ == nullptr) fail("prefixed names are not allowed here");
    std::string prefix = read_name();
    expect(':');
    std::string local = read_name();
    try {
      return prefixes_->expand(prefix + ":" + local);
    } catch (const RdfError& e) {
      fail(e.what());
    }
  }

  Iri read_iri() { return peek() == '<' ? read_iriref() : read_prefixed(); }

  BlankNode read_blank() {
    expect('_');
    expect(':');
    std::string label = read_name();
    if (label.empty()) fail("empty blank node label");
    return BlankNode{label};
  }

  std::string read_quoted() {
    expect('"');
    std::string out;
    while (true) {
      if (at_end() || text_[pos_] == '\n') fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        out += c;
        continue;
      }
      if (at_end()) fail("bad escape");
      char e = text_[pos_++];
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u':
        case 'U': {
          std::size_t n = e == 'u' ? 4 : 8;
          if (text_.size() - pos_ < n) fail("bad unicode escape");
          std::uint32_t cp = 0;
          for (std::size_t i = 0; i < n; ++i) {
            char h = text_[pos_++];
            if (!std::isxdigit(static_cast<unsigned char>(h))) fail("bad unicode escape");
            cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(h))
                                                           ? h - '0'
                                                           : std::toupper(h) - 'A' + 10);
          }
          append_utf8(out, cp);
          break;
        }
        default:
          --pos_;
          fail("bad escape");
      }
    }
    return out;
  }

  Term read_literal() {
    std::string lexical = read_quoted();
    try {
      if (peek() == '@') {
        ++pos_;
        std::string lang;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
          lang += text_[pos_++];
        }
        return Literal::lang_string(std::move(lexical), std::move(lang));
      }
      if (peek() == '^') {
        expect('^');
        expect('^');
        Iri dt = read_iri();
        return Literal(std::move(lexical), std::move(dt));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const RdfError& e) {
      fail(e.what());
    }
    return Literal(std::move(lexical));
  }

  Term read_term(bool allow_a) {
    char c = peek();
    if (c == '<') return read_iriref();
    if (c == '_') return read_blank();
    if (c == '"') return read_literal();
    if (allow_a && c == 'a' && pos_ + 1 < text_.size() &&
        (text_[pos_ + 1] == ' ' || text_[pos_ + 1] == '\t')) {
      ++pos_;
      return Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
    }
    if (prefixes_ != nullptr && (std::isalpha(static_cast<unsigned char>(c)) || c == ':')) {
      return read_prefixed();
    }
    fail("expected an RDF term");
  }

  void read_triple(Graph& g, bool turtle) {
    std::size_t start_line = line_;
    Term s = read_term(false);
    skip_ws(turtle);
    Term p = read_term(turtle);
    if (!is_iri(p)) fail("predicate must be an IRI");
    skip_ws(turtle);
    Term o = read_term(false);
    skip_ws(turtle);
    expect('.');
    if (is_literal(s)) throw ParseError(start_line, to_ntriples(s), "literal in subject position");
    g.insert(Triple{std::move(s), std::get<Iri>(p), std::move(o)});
  }

 private:
  std::string_view text_;
  const PrefixTable* prefixes_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::string join_sorted(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string turtle_term(const Term& t, const PrefixTable& prefixes) {
  if (const auto* iri = std::get_if<Iri>(&t)) return prefixes.compact(*iri);
  if (const auto* lit = std::get_if<Literal>(&t)) {
    std::string out = "\"" + escape_string(lit->lexical()) + "\"";
    if (lit->language()) return out + "@" + *lit->language();
    if (lit->datatype().str() == xsd::kString) return out;
    return out + "^^" + prefixes.compact(lit->datatype());
  }
  return to_ntriples(t);
}

}  // namespace

std::string serialize_ntriples(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const auto& t : graph.triples()) lines.push_back(to_ntriples(t));
  return join_sorted(std::move(lines));
}

Graph parse_ntriples(std::string_view text) {
  Graph g;
  Reader r(text, nullptr);
  while (true) {
    r.skip_ws(true);
    if (r.at_end()) break;
    r.read_triple(g, false);
    r.skip_ws(false);
    if (!r.at_end() && r.peek() != '\n') r.fail("trailing content after triple");
  }
  return g;
}

std::string serialize_turtle(const Graph& graph) {
  const PrefixTable& prefixes = graph.prefixes();
  std::string out;
  for (const auto& [prefix, ns] : prefixes.entries()) {
    out += "@prefix " + prefix + ": <" + ns + "> .\n";
  }
  if (!prefixes.empty()) out += '\n';
  std::vector<std::string> lines;
  lines.reserve(graph.size());
  for (const auto& t : graph.triples()) {
    lines.push_back(turtle_term(t.subject, prefixes) + " " + turtle_term(Term(t.predicate), prefixes) +
                    " " + turtle_term(t.object, prefixes) + " .");
  }
  return out + join_sorted(std::move(lines));
}

Graph parse_turtle(std::string_view text) {
  Graph g;
  PrefixTable prefixes;
  Reader r(text, &prefixes);
  while (true) {
    r.skip_ws(true);
    if (r.at_end()) break;
    bool at_form = r.peek() == '@';
    if (at_form ? r.consume_keyword("@prefix", false) : r.consume_keyword("PREFIX", true)) {
      r.skip_ws(true);
      std::string prefix = r.read_name();
      r.expect(':');
      r.skip_ws(true);
      Iri ns = r.read_iriref();
      r.skip_ws(true);
      if (at_form) r.expect('.');
      try {
        prefixes.add(prefix, ns.str());
        g.prefixes().add(prefix, ns.str());
      } catch (const RdfError& e) {
        r.fail(e.what());
      }
      continue;
    }
    r.read_triple(g, true);
  }
  return g;
}

}  // namespace evkg::rdf
