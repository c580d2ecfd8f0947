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

#include "evkg/geometry/wkt.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace evkg::geom {

namespace {

class WktParser {
 public:
  explicit WktParser(std::string_view text) : text_(text) {}

  Geometry parse() {
    std::string kw = keyword();
    Geometry g = Point{};
    if (kw == "POINT") {
      open();
      g = coordinate();
      close();
    } else if (kw == "LINESTRING") {
      g = LineString{coordinate_list()};
    } else if (kw == "POLYGON") {
      g = polygon();
    } else if (kw == "MULTIPOINT") {
      g = multipoint();
    } else if (kw == "MULTILINESTRING") {
      MultiLineString m;
      open();
      do {
        m.lines.push_back(LineString{coordinate_list()});
      } while (comma());
      close();
      g = std::move(m);
    } else if (kw == "MULTIPOLYGON") {
      MultiPolygon m;
      open();
      do {
        m.polygons.push_back(polygon());
      } while (comma());
      close();
      g = std::move(m);
    } else {
      fail_at(start_, "unsupported geometry type '" + kw + "'");
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw WktError(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const { throw WktError(at, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string keyword() {
    skip_ws();
    start_ = pos_;
    std::string kw;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      kw += static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++])));
    }
    if (kw.empty()) fail("expected geometry keyword");
    skip_ws();
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t at = pos_;
      std::string extra;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        extra += static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++])));
      }
      fail_at(at, "unsupported modifier '" + extra + "'");
    }
    return kw;
  }

  void open() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
  }

  void close() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
  }

  bool comma() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_open() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == '(';
  }

  double number() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  Point coordinate() {
    double x = number();
    double y = number();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') {
      fail("only 2D coordinates are supported");
    }
    return Point{x, y};
  }

  std::vector<Point> coordinate_list() {
    open();
    std::vector<Point> pts;
    do {
      pts.push_back(coordinate());
    } while (comma());
    close();
    return pts;
  }

  Polygon polygon() {
    open();
    Polygon p;
    p.outer = coordinate_list();
    while (comma()) p.holes.push_back(coordinate_list());
    close();
    return p;
  }

  MultiPoint multipoint() {
    open();
    MultiPoint m;
    do {
      if (peek_open()) {
        open();
        m.points.push_back(coordinate());
        close();
      } else {
        m.points.push_back(coordinate());
      }
    } while (comma());
    close();
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
};

std::string coords(const std::vector<Point>& pts) {
  std::string out = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_coordinate(pts[i].x) + " " + format_coordinate(pts[i].y);
  }
  return out + ")";
}

std::string polygon_body(const Polygon& p) {
  std::string out = "(" + coords(p.outer);
  for (const auto& h : p.holes) out += ", " + coords(h);
  return out + ")";
}

}  // namespace

std::string format_coordinate(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s(buf);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

Geometry parse_wkt(std::string_view text) {
  Geometry g = WktParser(text).parse();
  validate(g);
  return g;
}

std::string to_wkt(const Geometry& g) {
  if (const auto* p = std::get_if<Point>(&g)) {
    return "POINT (" + format_coordinate(p->x) + " " + format_coordinate(p->y) + ")";
  }
  if (const auto* l = std::get_if<LineString>(&g)) return "LINESTRING " + coords(l->points);
  if (const auto* p = std::get_if<Polygon>(&g)) return "POLYGON " + polygon_body(*p);
  if (const auto* m = std::get_if<MultiPoint>(&g)) {
    std::string out = "MULTIPOINT (";
    for (std::size_t i = 0; i < m->points.size(); ++i) {
      if (i > 0) out += ", ";
      out += coords({m->points[i]});
    }
    return out + ")";
  }
  if (const auto* m = std::get_if<MultiLineString>(&g)) {
    std::string out = "MULTILINESTRING (";
    for (std::size_t i = 0; i < m->lines.size(); ++i) {
      if (i > 0) out += ", ";
      out += coords(m->lines[i].points);
    }
    return out + ")";
  }
  const auto& m = std::get<MultiPolygon>(g);
  std::string out = "MULTIPOLYGON (";
  for (std::size_t i = 0; i < m.polygons.size(); ++i) {
    if (i > 0) out += ", ";
    out += polygon_body(m.polygons[i]);
  }
  return out + ")";
}

}  // namespace evkg::geom
