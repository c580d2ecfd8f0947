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

#include "evkg/geometry/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evkg/geometry/predicates.hpp"

namespace evkg::geom {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void extend(BBox& box, const Point& p) {
  box.min_x = std::min(box.min_x, p.x);
  box.min_y = std::min(box.min_y, p.y);
  box.max_x = std::max(box.max_x, p.x);
  box.max_y = std::max(box.max_y, p.y);
}

void check_finite(const std::vector<Point>& pts) {
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ValidationError("non-finite coordinate");
  }
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
         (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d));
}

void check_ring(const Ring& ring, bool require_simple) {
  check_finite(ring);
  if (ring.size() < 4) throw ValidationError("ring has fewer than 4 points");
  if (ring.front() != ring.back()) throw ValidationError("ring is not closed");
  if (!require_simple) return;
  const std::size_t n = ring.size() - 1;  // edge count
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i] == ring[i + 1]) throw ValidationError("ring has a repeated point");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& a = ring[i];
      const Point& b = ring[i + 1];
      const Point& c = ring[j];
      const Point& d = ring[j + 1];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Neighbouring edges share one vertex; they must not fold back on each other.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& p = (j == i + 1) ? a : b;
        const Point& q = (j == i + 1) ? d : c;
        if (orientation(p, shared, q) == 0 && n > 2) {
          double dot = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
          if (dot > 0) throw ValidationError("outer ring folds back on itself");
        }
        continue;
      }
      if (segments_touch(a, b, c, d)) throw ValidationError("outer ring self-intersects");
    }
  }
}

void check_polygon(const Polygon& poly) {
  check_ring(poly.outer, true);
  for (const auto& hole : poly.holes) check_ring(hole, false);
}

void check_line(const LineString& line) {
  check_finite(line.points);
  if (line.points.size() < 2) throw ValidationError("linestring has fewer than 2 points");
}

}  // namespace

int dimension(const Geometry& g) {
  return std::visit(Overloaded{[](const Point&) { return 0; }, [](const MultiPoint&) { return 0; },
                               [](const LineString&) { return 1; },
                               [](const MultiLineString&) { return 1; },
                               [](const Polygon&) { return 2; }, [](const MultiPolygon&) { return 2; }},
                    g);
}

BBox bbox(const Geometry& g) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  BBox box{inf, inf, -inf, -inf};
  auto add_all = [&box](const std::vector<Point>& pts) {
    for (const auto& p : pts) extend(box, p);
  };
  std::visit(Overloaded{[&](const Point& p) { extend(box, p); },
                        [&](const LineString& l) { add_all(l.points); },
                        [&](const Polygon& p) { add_all(p.outer); },
                        [&](const MultiPoint& m) { add_all(m.points); },
                        [&](const MultiLineString& m) {
                          for (const auto& l : m.lines) add_all(l.points);
                        },
                        [&](const MultiPolygon& m) {
                          for (const auto& p : m.polygons) add_all(p.outer);
                        }},
             g);
  return box;
}

void validate(const Geometry& g) {
  std::visit(Overloaded{[](const Point& p) { check_finite({p}); },
                        [](const LineString& l) { check_line(l); },
                        [](const Polygon& p) { check_polygon(p); },
                        [](const MultiPoint& m) {
                          if (m.points.empty()) throw ValidationError("empty multipoint");
                          check_finite(m.points);
                        },
                        [](const MultiLineString& m) {
                          if (m.lines.empty()) throw ValidationError("empty multilinestring");
                          for (const auto& l : m.lines) check_line(l);
                        },
                        [](const MultiPolygon& m) {
                          if (m.polygons.empty()) throw ValidationError("empty multipolygon");
                          for (const auto& p : m.polygons) check_polygon(p);
                        }},
             g);
}

}  // namespace evkg::geom
