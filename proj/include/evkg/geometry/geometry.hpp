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

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace evkg::geom {

/// Planar coordinate; lon/lat are treated as Cartesian x/y.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed ring: first point equals last point, at least four points.
using Ring = std::vector<Point>;

struct LineString {
  std::vector<Point> points;
  friend bool operator==(const LineString&, const LineString&) = default;
};

struct Polygon {
  Ring outer;
  std::vector<Ring> holes;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct MultiPoint {
  std::vector<Point> points;
  friend bool operator==(const MultiPoint&, const MultiPoint&) = default;
};

struct MultiLineString {
  std::vector<LineString> lines;
  friend bool operator==(const MultiLineString&, const MultiLineString&) = default;
};

struct MultiPolygon {
  std::vector<Polygon> polygons;
  friend bool operator==(const MultiPolygon&, const MultiPolygon&) = default;
};

using Geometry =
    std::variant<Point, LineString, Polygon, MultiPoint, MultiLineString, MultiPolygon>;

/// Topological dimension: 0 for points, 1 for lines, 2 for polygons.
int dimension(const Geometry& g);

struct BBox {
  double min_x;
  double min_y;
  double max_x;
  double max_y;

  bool disjoint(const BBox& other) const {
    return other.min_x > max_x || other.max_x < min_x || other.min_y > max_y ||
           other.max_y < min_y;
  }
  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Tight axis-aligned bound.
BBox bbox(const Geometry& g);

/// Geometry violating the structural invariants (unclosed ring, short ring,
/// self-intersecting outer ring, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ValidationError when `g` breaks an invariant.
void validate(const Geometry& g);

}  // namespace evkg::geom
