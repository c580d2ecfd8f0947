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

#include "evkg/geometry/geometry.hpp"

namespace evkg::geom {

/// Distance below which a point counts as lying on a boundary. Orientation
/// signs are exact; this snap applies only to on-boundary classification.
inline constexpr double kBoundaryTolerance = 1e-9;

enum class Location { Interior, Boundary, Exterior };

class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact sign of the orientation determinant of (a, b, c): +1 for a
/// counter-clockwise turn, -1 for clockwise, 0 for collinear.
int orientation(const Point& a, const Point& b, const Point& c);

double distance_to_segment(const Point& p, const Point& a, const Point& b);

/// Point location against a polygon with holes.
Location locate(const Point& p, const Polygon& polygon);

/// A point strictly inside the polygon (scanline construction).
Point interior_point(const Polygon& polygon);

/// Every point of `a` lies in the closure of `b` and the interiors meet.
bool sf_within(const Geometry& a, const Geometry& b);
bool sf_contains(const Geometry& a, const Geometry& b);

/// Defined for line/area (either order) and line/line; other pairs throw
/// UnsupportedCombination.
bool sf_crosses(const Geometry& a, const Geometry& b);

/// True when the shapes share at least one point (boundary contact counts).
bool sf_intersects(const Geometry& a, const Geometry& b);

}  // namespace evkg::geom
