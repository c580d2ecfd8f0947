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

#include "evkg/geometry/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace evkg::geom {

namespace {

using Polyline = std::vector<Point>;

struct Segment {
  Point a;
  Point b;
};

// A geometry flattened into homogeneous component lists.
struct Parts {
  int dim = 0;
  std::vector<Point> points;
  std::vector<Polyline> lines;
  std::vector<Polygon> polygons;
};

Parts decompose(const Geometry& g) {
  Parts parts;
  parts.dim = dimension(g);
  if (const auto* p = std::get_if<Point>(&g)) parts.points.push_back(*p);
  if (const auto* m = std::get_if<MultiPoint>(&g)) parts.points = m->points;
  if (const auto* l = std::get_if<LineString>(&g)) parts.lines.push_back(l->points);
  if (const auto* m = std::get_if<MultiLineString>(&g)) {
    for (const auto& l : m->lines) parts.lines.push_back(l.points);
  }
  if (const auto* p = std::get_if<Polygon>(&g)) parts.polygons.push_back(*p);
  if (const auto* m = std::get_if<MultiPolygon>(&g)) parts.polygons = m->polygons;
  return parts;
}

std::vector<Segment> line_segments(const std::vector<Polyline>& lines) {
  std::vector<Segment> out;
  for (const auto& l : lines) {
    for (std::size_t i = 0; i + 1 < l.size(); ++i) out.push_back({l[i], l[i + 1]});
  }
  return out;
}

std::vector<Segment> area_edges(const std::vector<Polygon>& polys) {
  std::vector<Segment> out;
  auto add_ring = [&out](const Ring& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) out.push_back({r[i], r[i + 1]});
  };
  for (const auto& p : polys) {
    add_ring(p.outer);
    for (const auto& h : p.holes) add_ring(h);
  }
  return out;
}

// Rings of an area viewed as closed polylines.
std::vector<Polyline> area_rings(const std::vector<Polygon>& polys) {
  std::vector<Polyline> out;
  for (const auto& p : polys) {
    out.push_back(p.outer);
    for (const auto& h : p.holes) out.push_back(h);
  }
  return out;
}

bool within_box(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Segment& s, const Segment& t) {
  int o1 = orientation(s.a, s.b, t.a);
  int o2 = orientation(s.a, s.b, t.b);
  int o3 = orientation(t.a, t.b, s.a);
  int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && within_box(t.a, s.a, s.b)) || (o2 == 0 && within_box(t.b, s.a, s.b)) ||
         (o3 == 0 && within_box(s.a, t.a, t.b)) || (o4 == 0 && within_box(s.b, t.a, t.b));
}

double param_on(const Segment& s, const Point& p) {
  double dx = s.b.x - s.a.x;
  double dy = s.b.y - s.a.y;
  double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return 0.0;
  return ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
}

// Parameters along `s` where `t` touches or crosses it.
void cut_params(const Segment& s, const Segment& t, std::vector<double>& out) {
  int o1 = orientation(s.a, s.b, t.a);
  int o2 = orientation(s.a, s.b, t.b);
  int o3 = orientation(t.a, t.b, s.a);
  int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    double rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
    double qx = t.b.x - t.a.x, qy = t.b.y - t.a.y;
    double denom = rx * qy - ry * qx;
    if (denom != 0.0) {
      out.push_back(((t.a.x - s.a.x) * qy - (t.a.y - s.a.y) * qx) / denom);
    }
    return;
  }
  if (o1 == 0 && within_box(t.a, s.a, s.b)) out.push_back(param_on(s, t.a));
  if (o2 == 0 && within_box(t.b, s.a, s.b)) out.push_back(param_on(s, t.b));
}

// Midpoints of the pieces obtained by cutting every segment of `line` at the
// points where `cutters` meet it. Each piece lies entirely on one side of
// (or along) the cutter set.
std::vector<Point> piece_midpoints(const Polyline& line, const std::vector<Segment>& cutters) {
  std::vector<Point> out;
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    Segment s{line[i], line[i + 1]};
    std::vector<double> ts{0.0, 1.0};
    for (const auto& c : cutters) cut_params(s, c, ts);
    std::sort(ts.begin(), ts.end());
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      double t0 = std::clamp(ts[k], 0.0, 1.0);
      double t1 = std::clamp(ts[k + 1], 0.0, 1.0);
      if (t1 - t0 <= 1e-12) continue;
      double tm = 0.5 * (t0 + t1);
      out.push_back({s.a.x + tm * (s.b.x - s.a.x), s.a.y + tm * (s.b.y - s.a.y)});
    }
  }
  return out;
}

bool on_any_segment(const Point& p, const std::vector<Segment>& segs) {
  for (const auto& s : segs) {
    if (distance_to_segment(p, s.a, s.b) <= kBoundaryTolerance) return true;
  }
  return false;
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Boundary of a set of lines under the mod-2 rule.
std::vector<Point> line_boundary(const std::vector<Polyline>& lines) {
  std::vector<Point> ends;
  for (const auto& l : lines) {
    if (l.front() == l.back()) continue;
    ends.push_back(l.front());
    ends.push_back(l.back());
  }
  std::vector<Point> out;
  for (const auto& e : ends) {
    auto n = std::count(ends.begin(), ends.end(), e);
    if (n % 2 == 1 && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

bool near_any(const Point& p, const std::vector<Point>& pts) {
  for (const auto& q : pts) {
    if (distance(p, q) <= kBoundaryTolerance) return true;
  }
  return false;
}

Location locate_ring(const Point& p, const Ring& ring) {
  bool inside = false;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[i + 1];
    if (distance_to_segment(p, a, b) <= kBoundaryTolerance) return Location::Boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      int o = orientation(a, b, p);
      if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
    }
  }
  return inside ? Location::Interior : Location::Exterior;
}

Location locate_area(const Point& p, const std::vector<Polygon>& polys) {
  bool boundary = false;
  for (const auto& poly : polys) {
    Location l = locate(p, poly);
    if (l == Location::Interior) return l;
    if (l == Location::Boundary) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Exterior;
}

struct Coverage {
  bool covered = true;      // every sample lies in the closure of the target
  bool interior = false;    // some sample lies in the target's interior
  bool exterior = false;    // some sample lies outside the target
};

Coverage classify(const std::vector<Point>& samples, const std::vector<Polygon>& area) {
  Coverage c;
  for (const auto& p : samples) {
    Location l = locate_area(p, area);
    if (l == Location::Exterior) {
      c.covered = false;
      c.exterior = true;
    } else if (l == Location::Interior) {
      c.interior = true;
    }
  }
  return c;
}

// Samples of a set of lines against an area: piece midpoints plus vertices.
std::vector<Point> line_samples(const std::vector<Polyline>& lines, const std::vector<Segment>& cutters,
                                bool with_vertices) {
  std::vector<Point> out;
  for (const auto& l : lines) {
    auto mids = piece_midpoints(l, cutters);
    out.insert(out.end(), mids.begin(), mids.end());
    if (with_vertices) out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

bool within_points(const Parts& a, const Parts& b) {
  bool interior = false;
  for (const auto& p : a.points) {
    if (b.dim == 0) {
      if (!near_any(p, b.points)) return false;
      interior = true;
    } else if (b.dim == 1) {
      if (!on_any_segment(p, line_segments(b.lines))) return false;
      if (!near_any(p, line_boundary(b.lines))) interior = true;
    } else {
      Location l = locate_area(p, b.polygons);
      if (l == Location::Exterior) return false;
      if (l == Location::Interior) interior = true;
    }
  }
  return interior;
}

bool within_lines(const Parts& a, const Parts& b) {
  if (b.dim == 0) return false;
  if (b.dim == 1) {
    auto segs = line_segments(b.lines);
    auto samples = line_samples(a.lines, segs, true);
    for (const auto& p : samples) {
      if (!on_any_segment(p, segs)) return false;
    }
    return !samples.empty();
  }
  Coverage c = classify(line_samples(a.lines, area_edges(b.polygons), true), b.polygons);
  return c.covered && c.interior;
}

bool within_areas(const Parts& a, const Parts& b) {
  if (b.dim < 2) return false;
  // Boundary of a inside cl(b); boundary of b never enters the interior of a.
  Coverage own = classify(line_samples(area_rings(a.polygons), area_edges(b.polygons), true), b.polygons);
  if (!own.covered) return false;
  for (const auto& p : line_samples(area_rings(b.polygons), area_edges(a.polygons), false)) {
    if (locate_area(p, a.polygons) == Location::Interior) return false;
  }
  // Each component's interior is now entirely inside or entirely outside b.
  for (const auto& poly : a.polygons) {
    if (locate_area(interior_point(poly), b.polygons) != Location::Interior) return false;
  }
  return true;
}

bool crosses_line_area(const Parts& line, const Parts& area) {
  Coverage c = classify(line_samples(line.lines, area_edges(area.polygons), false), area.polygons);
  return c.interior && c.exterior;
}

bool crosses_line_line(const Parts& a, const Parts& b) {
  auto sa = line_segments(a.lines);
  auto sb = line_segments(b.lines);
  auto ba = line_boundary(a.lines);
  auto bb = line_boundary(b.lines);
  bool point_hit = false;
  for (const auto& s : sa) {
    for (const auto& t : sb) {
      if (!segments_intersect(s, t)) continue;
      int o1 = orientation(s.a, s.b, t.a);
      int o2 = orientation(s.a, s.b, t.b);
      if (o1 == 0 && o2 == 0) {
        // Collinear: a shared piece of positive length is a 1-dimensional
        // interior intersection, which rules out crossing.
        double t0 = param_on(s, t.a), t1 = param_on(s, t.b);
        double lo = std::max(0.0, std::min(t0, t1));
        double hi = std::min(1.0, std::max(t0, t1));
        double len = std::hypot(s.b.x - s.a.x, s.b.y - s.a.y);
        if ((hi - lo) * len > kBoundaryTolerance) return false;
      }
      std::vector<double> ts;
      cut_params(s, t, ts);
      if (ts.empty()) {
        // Touch reported from t's side (an endpoint of s lies on t).
        if (orientation(t.a, t.b, s.a) == 0 && within_box(s.a, t.a, t.b)) ts.push_back(0.0);
        if (orientation(t.a, t.b, s.b) == 0 && within_box(s.b, t.a, t.b)) ts.push_back(1.0);
      }
      for (double tp : ts) {
        Point p{s.a.x + tp * (s.b.x - s.a.x), s.a.y + tp * (s.b.y - s.a.y)};
        if (!near_any(p, ba) && !near_any(p, bb)) point_hit = true;
      }
    }
  }
  return point_hit;
}

bool intersects_parts(const Parts& a, const Parts& b) {
  if (a.dim > b.dim) return intersects_parts(b, a);
  if (a.dim == 0) {
    for (const auto& p : a.points) {
      if (b.dim == 0 && near_any(p, b.points)) return true;
      if (b.dim == 1 && on_any_segment(p, line_segments(b.lines))) return true;
      if (b.dim == 2 && locate_area(p, b.polygons) != Location::Exterior) return true;
    }
    return false;
  }
  auto sa = a.dim == 1 ? line_segments(a.lines) : area_edges(a.polygons);
  auto sb = b.dim == 1 ? line_segments(b.lines) : area_edges(b.polygons);
  for (const auto& s : sa) {
    for (const auto& t : sb) {
      if (segments_intersect(s, t)) return true;
    }
  }
  if (b.dim == 1) {
    for (const auto& s : sa) {
      if (on_any_segment(s.a, sb) || on_any_segment(s.b, sb)) return true;
    }
    return false;
  }
  // No edge contact: one shape may still sit entirely inside the other.
  for (const auto& s : sa) {
    if (locate_area(s.a, b.polygons) != Location::Exterior) return true;
  }
  if (a.dim == 2) {
    for (const auto& t : sb) {
      if (locate_area(t.a, a.polygons) != Location::Exterior) return true;
    }
  }
  return false;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  // Forward error bound of the floating-point determinant (Shewchuk's ccwerrboundA).
  const double bound = 3.3306690738754716e-16 * (std::fabs(left) + std::fabs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  using boost::multiprecision::cpp_rational;
  const cpp_rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const cpp_rational exact = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return exact > 0 ? 1 : (exact < 0 ? -1 : 0);
}

double distance_to_segment(const Point& p, const Point& a, const Point& b) {
  double dx = b.x - a.x;
  double dy = b.y - a.y;
  double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

Location locate(const Point& p, const Polygon& polygon) {
  Location outer = locate_ring(p, polygon.outer);
  if (outer != Location::Interior) return outer;
  for (const auto& hole : polygon.holes) {
    Location l = locate_ring(p, hole);
    if (l == Location::Boundary) return Location::Boundary;
    if (l == Location::Interior) return Location::Exterior;
  }
  return Location::Interior;
}

Point interior_point(const Polygon& polygon) {
  std::vector<double> ys;
  for (const auto& p : polygon.outer) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.size() < 2) return polygon.outer.front();

  // Scan along the widest band between consecutive vertex heights, so the
  // scanline passes through no vertex.
  std::size_t band = 0;
  for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
    if (ys[i + 1] - ys[i] > ys[band + 1] - ys[band]) band = i;
  }
  const double y = 0.5 * (ys[band] + ys[band + 1]);
  std::vector<double> xs;
  auto scan_ring = [&](const Ring& r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      const Point& a = r[i];
      const Point& b = r[i + 1];
      if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  };
  scan_ring(polygon.outer);
  for (const auto& h : polygon.holes) scan_ring(h);
  std::sort(xs.begin(), xs.end());
  double best_width = -1.0;
  Point best = polygon.outer.front();
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    if (xs[i + 1] - xs[i] > best_width) {
      best_width = xs[i + 1] - xs[i];
      best = {0.5 * (xs[i] + xs[i + 1]), y};
    }
  }
  return best;
}

bool sf_within(const Geometry& a, const Geometry& b) {
  if (bbox(a).disjoint(bbox(b))) return false;
  Parts pa = decompose(a);
  Parts pb = decompose(b);
  switch (pa.dim) {
    case 0: return within_points(pa, pb);
    case 1: return within_lines(pa, pb);
    default: return within_areas(pa, pb);
  }
}

bool sf_contains(const Geometry& a, const Geometry& b) { return sf_within(b, a); }

bool sf_crosses(const Geometry& a, const Geometry& b) {
  Parts pa = decompose(a);
  Parts pb = decompose(b);
  if (pa.dim == 1 && pb.dim == 2) return !bbox(a).disjoint(bbox(b)) && crosses_line_area(pa, pb);
  if (pa.dim == 2 && pb.dim == 1) return !bbox(a).disjoint(bbox(b)) && crosses_line_area(pb, pa);
  if (pa.dim == 1 && pb.dim == 1) return !bbox(a).disjoint(bbox(b)) && crosses_line_line(pa, pb);
  throw UnsupportedCombination("sfCrosses is not supported for dimensions " +
                               std::to_string(pa.dim) + " and " + std::to_string(pb.dim));
}

bool sf_intersects(const Geometry& a, const Geometry& b) {
  if (bbox(a).disjoint(bbox(b))) return false;
  return intersects_parts(decompose(a), decompose(b));
}

}  // namespace evkg::geom
