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

#include "evkg/sparql/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace evkg::sparql {

namespace {

constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

enum class Tok { Iri, PName, Var, String, LangTag, DtMark, Integer, Decimal, Double, Punct, Word, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

void append_utf8(std::string& out, unsigned long cp) {
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

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, col()});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw QuerySyntaxError(line_, col(), what); }

  std::size_t col() const { return pos_ - line_start_ + 1; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    const std::size_t line = line_;
    const std::size_t column = col();
    auto make = [&](Tok k, std::string s) { return Token{k, std::move(s), line, column}; };
    const char c = peek();

    if (c == '<') {
      // An IRI reference when a '>' closes it before any character that
      // cannot occur in one; otherwise a comparison operator.
      std::size_t j = pos_ + 1;
      while (j < text_.size()) {
        char d = text_[j];
        if (d == '>' || std::isspace(static_cast<unsigned char>(d)) || d == '<' || d == '"' || d == '{' ||
            d == '}' || d == '|' || d == '^' || d == '`' || d == '\\') {
          break;
        }
        ++j;
      }
      if (j < text_.size() && text_[j] == '>' && j > pos_ + 1) {
        std::string iri(text_.substr(pos_ + 1, j - pos_ - 1));
        while (pos_ <= j) advance();
        return make(Tok::Iri, iri);
      }
      advance();
      if (peek() == '=') {
        advance();
        return make(Tok::Punct, "<=");
      }
      return make(Tok::Punct, "<");
    }
    if (c == '?' || c == '$') {
      advance();
      std::string name;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                                     static_cast<unsigned char>(peek()) >= 0x80)) {
        name += peek();
        advance();
      }
      if (name.empty()) fail("expected variable name");
      return make(Tok::Var, name);
    }
    if (c == '"' || c == '\'') return make(Tok::String, string_literal());
    if (c == '@') {
      advance();
      std::string tag;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') {
        tag += peek();
        advance();
      }
      if (tag.empty()) fail("expected language tag");
      return make(Tok::LangTag, tag);
    }
    if (c == '^' && peek(1) == '^') {
      advance();
      advance();
      return make(Tok::DtMark, "^^");
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return number(line, column);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
        static_cast<unsigned char>(c) >= 0x80) {
      return name(line, column);
    }
    static const std::string_view two[] = {">=", "!=", "&&", "||"};
    for (auto op : two) {
      if (text_.substr(pos_, 2) == op) {
        advance();
        advance();
        return make(Tok::Punct, std::string(op));
      }
    }
    if (std::string_view("{}().,;*/+-=>!|^[]").find(c) != std::string_view::npos) {
      advance();
      return make(Tok::Punct, std::string(1, c));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string string_literal() {
    const char quote = peek();
    if (peek(1) == quote && peek(2) == quote) fail("long string literals are not supported");
    advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string literal");
      char c = peek();
      if (c == quote) {
        advance();
        return out;
      }
      if (c == '\n' || c == '\r') fail("line break inside string literal");
      if (c == '\\') {
        advance();
        char e = peek();
        advance();
        switch (e) {
          case 't': out += '\t'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'b': out += '\b'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u':
          case 'U': {
            std::size_t n = e == 'u' ? 4 : 8;
            if (pos_ + n > text_.size()) fail("truncated unicode escape");
            std::string hex(text_.substr(pos_, n));
            if (!std::all_of(hex.begin(), hex.end(), [](char h) { return std::isxdigit(static_cast<unsigned char>(h)); })) {
              fail("bad unicode escape");
            }
            for (std::size_t i = 0; i < n; ++i) advance();
            append_utf8(out, std::stoul(hex, nullptr, 16));
            break;
          }
          default: fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      out += c;
      advance();
    }
  }

  Token number(std::size_t line, std::size_t column) {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    Tok kind = Tok::Integer;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      kind = Tok::Decimal;
      s += '.';
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        s += peek();
        advance();
      }
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t k = 1;
      if (peek(k) == '+' || peek(k) == '-') ++k;
      if (std::isdigit(static_cast<unsigned char>(peek(k)))) {
        kind = Tok::Double;
        for (std::size_t i = 0; i < k; ++i) {
          s += peek();
          advance();
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          s += peek();
          advance();
        }
      }
    }
    return Token{kind, s, line, column};
  }

  Token name(std::size_t line, std::size_t column) {
    if (peek() == '_' && peek(1) == ':') throw UnsupportedFeature("blank node", line, column);
    std::string s;
    bool colon = false;
    while (pos_ < text_.size()) {
      char c = peek();
      if (is_name_char(c)) {
        s += c;
      } else if (c == ':') {
        colon = true;
        s += c;
      } else if (c == '.' && colon) {
        s += c;
      } else if (c == '.' && is_name_char(peek(1)) && !s.empty()) {
        // dots inside a prefix label, e.g. "a.b:c"
        std::size_t j = pos_ + 1;
        while (j < text_.size() && (is_name_char(text_[j]) || text_[j] == '.')) ++j;
        if (j < text_.size() && text_[j] == ':') {
          s += c;
        } else {
          break;
        }
      } else {
        break;
      }
      advance();
    }
    // A trailing dot terminates the triple rather than the local name.
    while (!s.empty() && s.back() == '.') {
      s.pop_back();
      --pos_;
    }
    return Token{colon ? Tok::PName : Tok::Word, s, line, column};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

const std::set<std::string>& unsupported_words() {
  static const std::set<std::string> words = {
      "OPTIONAL", "MINUS",  "BIND",   "SERVICE", "GRAPH",     "ORDER",    "LIMIT",    "OFFSET",
      "HAVING",   "CONSTRUCT", "ASK", "DESCRIBE", "REDUCED",  "FROM",     "BASE",     "COUNT",
      "AVG",      "MIN",    "MAX",    "SAMPLE",  "GROUP_CONCAT", "EXISTS", "NOT",     "IN",
      "LOAD",     "INSERT", "DELETE", "CLEAR",   "DROP",      "CREATE",   "NAMED"};
  return words;
}

class Parser {
 public:
  Parser(std::string_view text, const rdf::PrefixTable& defaults) : tokens_(Lexer(text).run()) {
    for (const auto& [p, ns] : defaults.entries()) prefixes_.add(p, ns);
  }

  Query parse() {
    Query q;
    while (is_word("PREFIX") || is_word("BASE")) {
      if (is_word("BASE")) unsupported("BASE");
      next();
      const Token& pn = expect(Tok::PName, "prefix name");
      if (pn.text.back() != ':' || pn.text.find(':') != pn.text.size() - 1) {
        fail(pn, "expected 'prefix:' in PREFIX declaration");
      }
      std::string prefix = pn.text.substr(0, pn.text.size() - 1);
      const Token& ns = expect(Tok::Iri, "namespace IRI");
      try {
        declared_.add(prefix, ns.text);
      } catch (const rdf::RdfError& e) {
        fail(pn, e.what());
      }
      q.prefixes.emplace_back(prefix, ns.text);
    }
    select_query(q, true);
    if (peek().kind != Tok::End) {
      if (peek().kind == Tok::Punct && peek().text == "}") fail(peek(), "unbalanced '}'");
      fail(peek(), "unexpected '" + peek().text + "' after query");
    }
    return q;
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    throw QuerySyntaxError(t.line, t.column, what);
  }
  [[noreturn]] void unsupported(const std::string& construct) const {
    throw UnsupportedFeature(construct, peek().line, peek().column);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_word(std::string_view w) const { return peek().kind == Tok::Word && upper(peek().text) == w; }

  void check_unsupported_word() const {
    if (peek().kind == Tok::Word && unsupported_words().count(upper(peek().text))) unsupported(upper(peek().text));
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    return next();
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }
  void expect_word(std::string_view w) {
    check_unsupported_word();
    if (!is_word(w)) fail(peek(), "expected " + std::string(w));
    next();
  }

  rdf::Iri resolve(const Token& t) {
    const std::size_t colon = t.text.find(':');
    const std::string prefix = t.text.substr(0, colon);
    std::optional<std::string> ns = declared_.find(prefix);
    if (!ns) ns = prefixes_.find(prefix);
    if (!ns) fail(t, "unknown prefix '" + prefix + "'");
    try {
      return rdf::Iri(*ns + t.text.substr(colon + 1));
    } catch (const rdf::RdfError& e) {
      fail(t, e.what());
    }
  }

  rdf::Iri iri_token() {
    const Token& t = next();
    if (t.kind == Tok::Iri) {
      try {
        return rdf::Iri(t.text);
      } catch (const rdf::RdfError& e) {
        fail(t, e.what());
      }
    }
    if (t.kind == Tok::PName) return resolve(t);
    fail(t, "expected IRI");
  }

  // ---- query ------------------------------------------------------------

  void select_query(Query& q, bool top_level) {
    check_unsupported_word();
    expect_word("SELECT");
    if (is_word("DISTINCT")) {
      next();
      q.distinct = true;
    }
    check_unsupported_word();
    if (is_punct("*")) {
      next();
      q.select_all = true;
    } else {
      while (peek().kind == Tok::Var || is_punct("(")) {
        if (peek().kind == Tok::Var) {
          q.select.push_back({next().text, std::nullopt});
        } else {
          next();
          Expr e = expression();
          expect_word("AS");
          std::string v = expect(Tok::Var, "variable after AS").text;
          expect_punct(")");
          q.select.push_back({v, std::move(e)});
        }
      }
      if (q.select.empty()) fail(peek(), "expected projection");
    }
    check_unsupported_word();
    if (is_word("WHERE")) next();
    const Token& open = peek();
    q.where = group_pattern();
    check_unsupported_word();
    if (is_word("GROUP")) {
      next();
      expect_word("BY");
      if (peek().kind != Tok::Var) {
        if (is_punct("(")) unsupported("GROUP BY expression");
        fail(peek(), "expected variable after GROUP BY");
      }
      while (peek().kind == Tok::Var) q.group_by.push_back(next().text);
    }
    check_unsupported_word();
    (void)top_level;
    validate(q, open);
  }

  void validate(const Query& q, const Token& at) const {
    if (q.select_all && q.grouped()) fail(at, "SELECT * cannot be combined with grouping");
    const std::vector<std::string> scope = in_scope_variables(q.where);
    std::set<std::string> seen;
    for (const auto& item : q.select) {
      if (!seen.insert(item.var).second) fail(at, "variable ?" + item.var + " projected twice");
      if (item.expr && std::find(scope.begin(), scope.end(), item.var) != scope.end()) {
        fail(at, "?" + item.var + " is already bound in the pattern");
      }
    }
    if (!q.grouped()) {
      for (const auto& item : q.select) {
        if (item.expr && item.expr->has_aggregate()) fail(at, "aggregate outside a grouped query");
      }
      return;
    }
    for (const auto& item : q.select) {
      if (item.expr) continue;
      if (std::find(q.group_by.begin(), q.group_by.end(), item.var) == q.group_by.end()) {
        fail(at, "?" + item.var + " is projected but is not a GROUP BY key");
      }
    }
  }

  // ---- patterns ---------------------------------------------------------

  Group group_pattern() {
    expect_punct("{");
    Group g;
    check_unsupported_word();
    if (is_word("SELECT")) {
      auto sub = std::make_shared<Query>();
      select_query(*sub, false);
      expect_punct("}");
      g.elements.push_back(GraphPattern{SubSelect{std::move(sub)}});
      return g;
    }
    while (!is_punct("}")) {
      check_unsupported_word();
      if (peek().kind == Tok::End) fail(peek(), "unterminated group, expected '}'");
      if (is_punct("{")) {
        Group first = group_pattern();
        if (is_word("UNION")) {
          Union u;
          u.branches.push_back(std::move(first));
          while (is_word("UNION")) {
            next();
            u.branches.push_back(group_pattern());
          }
          g.elements.push_back(GraphPattern{std::move(u)});
        } else {
          g.elements.push_back(GraphPattern{std::move(first)});
        }
        if (is_punct(".")) next();
      } else if (is_word("FILTER")) {
        next();
        g.filters.push_back(constraint());
        if (is_punct(".")) next();
      } else if (is_word("VALUES")) {
        next();
        g.elements.push_back(GraphPattern{values()});
        if (is_punct(".")) next();
      } else if (is_word("UNION")) {
        fail(peek(), "UNION must follow a group");
      } else {
        triples_block(g);
      }
    }
    expect_punct("}");
    return g;
  }

  void triples_block(Group& g) {
    if (g.elements.empty() || !std::holds_alternative<Bgp>(g.elements.back().node)) {
      g.elements.push_back(GraphPattern{Bgp{}});
    }
    auto& bgp = std::get<Bgp>(g.elements.back().node);
    PatternTerm subject = pattern_term(false);
    while (true) {
      PatternTerm predicate = verb();
      while (true) {
        PatternTerm object = pattern_term(false);
        if (const auto* t = std::get_if<rdf::Term>(&subject); t && rdf::is_literal(*t)) {
          fail(peek(), "literal in subject position");
        }
        bgp.triples.push_back({subject, predicate, std::move(object)});
        if (is_punct(",")) {
          next();
          continue;
        }
        break;
      }
      if (is_punct(";")) {
        next();
        if (is_punct(".") || is_punct("}")) break;
        continue;
      }
      break;
    }
    if (is_punct(".")) {
      next();
    } else if (!is_punct("}") && !is_punct("{") && !is_word("FILTER") && !is_word("VALUES")) {
      check_unsupported_word();
      fail(peek(), "expected '.' after triple pattern");
    }
  }

  PatternTerm verb() {
    if (peek().kind == Tok::Word && peek().text == "a") {
      next();
      check_path();
      return rdf::Term(rdf::Iri(std::string(kRdfType)));
    }
    if (peek().kind == Tok::Var) {
      PatternTerm v = Var{next().text};
      check_path();
      return v;
    }
    if (peek().kind == Tok::Iri || peek().kind == Tok::PName) {
      PatternTerm p = rdf::Term(iri_token());
      check_path();
      return p;
    }
    if (is_punct("^") || is_punct("!") || is_punct("(")) unsupported("property path");
    fail(peek(), "expected predicate");
  }

  void check_path() const {
    for (auto p : {"/", "|", "*", "+", "?"}) {
      if (is_punct(p)) unsupported("property path");
    }
  }

  PatternTerm pattern_term(bool allow_undef) {
    check_unsupported_word();
    if (peek().kind == Tok::Var) return Var{next().text};
    if (is_punct("[")) unsupported("blank node property list");
    if (is_punct("(")) unsupported("RDF collection");
    auto t = constant(allow_undef);
    if (!t) fail(peek(), "UNDEF is only allowed in VALUES");
    return *t;
  }

  /// A constant term; nullopt for UNDEF when allowed.
  std::optional<rdf::Term> constant(bool allow_undef) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Iri:
      case Tok::PName: return rdf::Term(iri_token());
      case Tok::String: {
        std::string lex = next().text;
        try {
          if (peek().kind == Tok::LangTag) return rdf::Term(rdf::Literal::lang_string(lex, next().text));
          if (peek().kind == Tok::DtMark) {
            next();
            const Token& dt_tok = peek();
            rdf::Iri dt = iri_token();
            try {
              return rdf::Term(rdf::Literal(lex, dt));
            } catch (const rdf::RdfError& e) {
              fail(dt_tok, e.what());
            }
          }
          return rdf::Term(rdf::Literal(lex));
        } catch (const rdf::RdfError& e) {
          fail(t, e.what());
        }
      }
      case Tok::Integer: return rdf::typed(next().text, rdf::xsd::kInteger);
      case Tok::Decimal: return rdf::typed(next().text, rdf::xsd::kDecimal);
      case Tok::Double: return rdf::typed(next().text, rdf::xsd::kDouble);
      case Tok::Word: {
        std::string w = upper(t.text);
        if (w == "TRUE" || w == "FALSE") {
          next();
          return rdf::typed(w == "TRUE" ? "true" : "false", rdf::xsd::kBoolean);
        }
        if (w == "UNDEF" && allow_undef) {
          next();
          return std::nullopt;
        }
        check_unsupported_word();
        fail(t, "unexpected '" + t.text + "'");
      }
      case Tok::Punct:
        if ((t.text == "-" || t.text == "+") &&
            (peek(1).kind == Tok::Integer || peek(1).kind == Tok::Decimal || peek(1).kind == Tok::Double)) {
          std::string sign = next().text == "-" ? "-" : "";
          const Token& n = next();
          std::string_view dt = n.kind == Tok::Integer   ? rdf::xsd::kInteger
                                : n.kind == Tok::Decimal ? rdf::xsd::kDecimal
                                                         : rdf::xsd::kDouble;
          return rdf::typed(sign + n.text, dt);
        }
        fail(t, "expected a term");
      default: fail(t, "expected a term");
    }
  }

  Values values() {
    Values v;
    if (peek().kind == Tok::Var) {
      v.vars.push_back(next().text);
      expect_punct("{");
      while (!is_punct("}")) {
        if (peek().kind == Tok::End) fail(peek(), "unterminated VALUES block");
        v.rows.push_back({constant(true)});
      }
      next();
      return v;
    }
    expect_punct("(");
    while (peek().kind == Tok::Var) v.vars.push_back(next().text);
    expect_punct(")");
    expect_punct("{");
    while (!is_punct("}")) {
      const Token& open = peek();
      expect_punct("(");
      std::vector<std::optional<rdf::Term>> row;
      while (!is_punct(")")) {
        if (peek().kind == Tok::End) fail(peek(), "unterminated VALUES row");
        row.push_back(constant(true));
      }
      next();
      if (row.size() != v.vars.size()) fail(open, "VALUES row width does not match its variable list");
      v.rows.push_back(std::move(row));
    }
    next();
    return v;
  }

  // ---- expressions ------------------------------------------------------

  Expr constraint() {
    if (!is_punct("(")) {
      check_unsupported_word();
      if (peek().kind == Tok::Word) unsupported("function " + upper(peek().text));
      fail(peek(), "expected '(' after FILTER");
    }
    next();
    Expr e = expression();
    expect_punct(")");
    return e;
  }

  Expr expression() {
    Expr left = additive();
    static const std::pair<std::string_view, Expr::Op> ops[] = {
        {"=", Expr::Op::Eq}, {"!=", Expr::Op::Ne}, {"<", Expr::Op::Lt},
        {">", Expr::Op::Gt}, {"<=", Expr::Op::Le}, {">=", Expr::Op::Ge}};
    for (const auto& [text, op] : ops) {
      if (is_punct(text)) {
        next();
        Expr right = additive();
        Expr out{op, "", std::nullopt, {std::move(left), std::move(right)}};
        reject_logic();
        return out;
      }
    }
    reject_logic();
    return left;
  }

  void reject_logic() const {
    if (is_punct("&&") || is_punct("||")) unsupported("logical operator " + peek().text);
    check_unsupported_word();
  }

  Expr additive() {
    Expr left = multiplicative();
    while (is_punct("+") || is_punct("-")) {
      Expr::Op op = next().text == "+" ? Expr::Op::Add : Expr::Op::Sub;
      Expr right = multiplicative();
      left = Expr{op, "", std::nullopt, {std::move(left), std::move(right)}};
    }
    return left;
  }

  Expr multiplicative() {
    Expr left = unary();
    while (is_punct("*") || is_punct("/")) {
      Expr::Op op = next().text == "*" ? Expr::Op::Mul : Expr::Op::Div;
      Expr right = unary();
      left = Expr{op, "", std::nullopt, {std::move(left), std::move(right)}};
    }
    return left;
  }

  Expr unary() {
    if (is_punct("!")) unsupported("logical operator !");
    if (is_punct("-")) {
      if (peek(1).kind == Tok::Integer || peek(1).kind == Tok::Decimal || peek(1).kind == Tok::Double) {
        return Expr{Expr::Op::Const, "", constant(false), {}};
      }
      next();
      return Expr{Expr::Op::Neg, "", std::nullopt, {unary()}};
    }
    if (is_punct("+")) {
      next();
      return unary();
    }
    return primary();
  }

  Expr primary() {
    if (is_punct("(")) {
      next();
      Expr e = expression();
      expect_punct(")");
      return e;
    }
    if (peek().kind == Tok::Var) return Expr{Expr::Op::Var, next().text, std::nullopt, {}};
    if (is_word("SUM")) {
      next();
      expect_punct("(");
      if (is_word("DISTINCT")) unsupported("SUM(DISTINCT ...)");
      Expr arg = expression();
      if (arg.has_aggregate()) fail(peek(), "nested aggregate");
      expect_punct(")");
      return Expr{Expr::Op::Sum, "", std::nullopt, {std::move(arg)}};
    }
    if (peek().kind == Tok::Word && is_punct("(", 1)) {
      check_unsupported_word();
      unsupported("function " + upper(peek().text));
    }
    if ((peek().kind == Tok::PName || peek().kind == Tok::Iri) && is_punct("(", 1)) unsupported("function call");
    return Expr{Expr::Op::Const, "", constant(false), {}};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  rdf::PrefixTable prefixes_;
  rdf::PrefixTable declared_;
};

// ---- printing -----------------------------------------------------------

std::string term_text(const PatternTerm& t) {
  if (const auto* v = std::get_if<Var>(&t)) return "?" + v->name;
  return rdf::to_ntriples(std::get<rdf::Term>(t));
}

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::Eq:
    case Expr::Op::Ne:
    case Expr::Op::Lt:
    case Expr::Op::Gt:
    case Expr::Op::Le:
    case Expr::Op::Ge: return 1;
    case Expr::Op::Add:
    case Expr::Op::Sub: return 2;
    case Expr::Op::Mul:
    case Expr::Op::Div: return 3;
    default: return 4;
  }
}

std::string op_text(Expr::Op op) {
  switch (op) {
    case Expr::Op::Eq: return "=";
    case Expr::Op::Ne: return "!=";
    case Expr::Op::Lt: return "<";
    case Expr::Op::Gt: return ">";
    case Expr::Op::Le: return "<=";
    case Expr::Op::Ge: return ">=";
    case Expr::Op::Add: return "+";
    case Expr::Op::Sub: return "-";
    case Expr::Op::Mul: return "*";
    case Expr::Op::Div: return "/";
    default: return "?";
  }
}

void print_group(const Group& g, std::string& out, int depth);

std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

void print_select(const Query& q, std::string& out, int depth) {
  out += "SELECT ";
  if (q.distinct) out += "DISTINCT ";
  if (q.select_all) {
    out += "*";
  } else {
    for (std::size_t i = 0; i < q.select.size(); ++i) {
      if (i > 0) out += ' ';
      const auto& item = q.select[i];
      out += item.expr ? "(" + to_string(*item.expr) + " AS ?" + item.var + ")" : "?" + item.var;
    }
  }
  out += " WHERE ";
  print_group(q.where, out, depth);
  if (!q.group_by.empty()) {
    out += " GROUP BY";
    for (const auto& v : q.group_by) out += " ?" + v;
  }
}

void print_group(const Group& g, std::string& out, int depth) {
  if (g.elements.size() == 1 && g.filters.empty()) {
    if (const auto* sub = std::get_if<SubSelect>(&g.elements.front().node)) {
      out += "{ ";
      print_select(*sub->query, out, depth);
      out += " }";
      return;
    }
  }
  out += "{\n";
  for (const auto& el : g.elements) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Bgp>) {
            for (const auto& tp : node.triples) {
              out += indent(depth + 1) + term_text(tp.subject) + " " + term_text(tp.predicate) + " " +
                     term_text(tp.object) + " .\n";
            }
          } else if constexpr (std::is_same_v<T, Group>) {
            out += indent(depth + 1);
            print_group(node, out, depth + 1);
            out += "\n";
          } else if constexpr (std::is_same_v<T, Union>) {
            out += indent(depth + 1);
            for (std::size_t i = 0; i < node.branches.size(); ++i) {
              if (i > 0) out += " UNION ";
              print_group(node.branches[i], out, depth + 1);
            }
            out += "\n";
          } else if constexpr (std::is_same_v<T, Values>) {
            out += indent(depth + 1) + "VALUES (";
            for (std::size_t i = 0; i < node.vars.size(); ++i) out += (i ? " ?" : "?") + node.vars[i];
            out += ") {";
            for (const auto& row : node.rows) {
              out += " (";
              for (std::size_t i = 0; i < row.size(); ++i) {
                if (i > 0) out += ' ';
                out += row[i] ? rdf::to_ntriples(*row[i]) : "UNDEF";
              }
              out += ")";
            }
            out += " }\n";
          } else {
            out += indent(depth + 1) + "{ ";
            print_select(*node.query, out, depth + 1);
            out += " }\n";
          }
        },
        el.node);
  }
  for (const auto& f : g.filters) out += indent(depth + 1) + "FILTER(" + to_string(f) + ")\n";
  out += indent(depth) + "}";
}

}  // namespace

Query parse_query(std::string_view text, const rdf::PrefixTable& defaults) {
  return Parser(text, defaults).parse();
}

Query parse_query(std::string_view text) { return parse_query(text, rdf::PrefixTable{}); }

std::string to_string(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Var: return "?" + e.var;
    case Expr::Op::Const: return rdf::to_ntriples(*e.value);
    case Expr::Op::Sum: return "SUM(" + to_string(e.args[0]) + ")";
    case Expr::Op::Neg: return "-(" + to_string(e.args[0]) + ")";
    default: break;
  }
  auto side = [&e](const Expr& child, bool right) {
    std::string s = to_string(child);
    int pc = precedence(child.op);
    int pe = precedence(e.op);
    bool paren = pc < pe || (right && pc == pe) || (pe == 1 && pc == 1);
    return paren ? "(" + s + ")" : s;
  };
  return side(e.args[0], false) + " " + op_text(e.op) + " " + side(e.args[1], true);
}

std::string to_string(const Query& q) {
  std::string out;
  for (const auto& [p, ns] : q.prefixes) out += "PREFIX " + p + ": <" + ns + ">\n";
  print_select(q, out, 0);
  out += "\n";
  return out;
}

}  // namespace evkg::sparql
