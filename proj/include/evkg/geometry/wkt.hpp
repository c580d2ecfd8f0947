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

#include <cstddef>
#include <string>
#include <string_view>

#include "evkg/geometry/geometry.hpp"

namespace evkg::geom {

inline constexpr std::string_view kWktLiteral = "http://www.opengis.net/ont/geosparql#wktLiteral";

class WktError : public std::runtime_error {
 public:
  WktError(std::size_t position, const std::string& what)
      : std::runtime_error("WKT offset " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses POINT, LINESTRING, POLYGON and their MULTI variants (keywords are
/// case-insensitive) and validates the result. Throws WktError on syntax
/// errors and ValidationError on invariant violations.
Geometry parse_wkt(std::string_view text);

/// Uppercase keyword, one space, coordinates with at most 9 decimals.
std::string to_wkt(const Geometry& g);

/// Fixed 9-decimal formatting with trailing zeros removed ("-0" -> "0").
std::string format_coordinate(double v);

}  // namespace evkg::geom
