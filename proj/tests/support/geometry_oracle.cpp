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

#include "geometry_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace evkg::testing {

namespace {

bool ring_parity(const geom::Point& p, const geom::Ring& ring) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const auto& a = ring[i];
    const auto& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

double segment_distance(const geom::Point& p, const geom::Point& a, const geom::Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 == 0.0 ? 0.0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

geom::Ring star(std::mt19937& rng, double cx, double cy, double r_lo, double r_hi) {
  const int n = std::uniform_int_distribution<int>(6, 14)(rng);
  std::uniform_real_distribution<double> radius(r_lo, r_hi);
  geom::Ring ring;
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n;
    const double r = radius(rng);
    ring.push_back({cx + r * std::cos(angle), cy + r * std::sin(angle)});
  }
  ring.push_back(ring.front());
  return ring;
}

}  // namespace

bool ray_cast_inside(const geom::Point& p, const geom::Polygon& poly) {
  bool inside = ring_parity(p, poly.outer);
  for (const auto& h : poly.holes) inside = inside != ring_parity(p, h);
  return inside;
}

double distance_to_rings(const geom::Point& p, const geom::Polygon& poly) {
  double best = INFINITY;
  auto scan = [&](const geom::Ring& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) best = std::min(best, segment_distance(p, r[i], r[i + 1]));
  };
  scan(poly.outer);
  for (const auto& h : poly.holes) scan(h);
  return best;
}

LineSample sample_line(const geom::LineString& line, const geom::Polygon& poly, int per_segment, double margin) {
  LineSample s;
  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const auto& a = line.points[i];
    const auto& b = line.points[i + 1];
    for (int k = 0; k <= per_segment; ++k) {
      const double t = static_cast<double>(k) / per_segment;
      const geom::Point p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (distance_to_rings(p, poly) < margin) continue;
      (ray_cast_inside(p, poly) ? s.some_inside : s.some_outside) = true;
    }
  }
  return s;
}

geom::Polygon random_star(std::mt19937& rng, double cx, double cy, double scale, bool hole) {
  geom::Polygon poly;
  poly.outer = star(rng, cx, cy, 0.5 * scale, scale);
  if (hole) {
    auto h = star(rng, cx, cy, 0.1 * scale, 0.3 * scale);
    std::reverse(h.begin(), h.end());
    poly.holes.push_back(std::move(h));
  }
  return poly;
}

}  // namespace evkg::testing
