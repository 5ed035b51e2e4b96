#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "geosynth/error.hpp"

namespace geosynth {

inline constexpr double kPi = 3.14159265358979323846;

// Residual threshold for equality/incidence predicates. Constructions are
// analytic, so residuals sit at machine-epsilon scale; anything looser would
// start reporting accidental relations.
inline constexpr double kIncidenceEps = 1e-9;

struct Point {
  double x{0};
  double y{0};
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

inline bool point_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point normalized(Point p) {
  double n = norm(p);
  if (n < 1e-300) throw Error(ErrorCode::degenerate_ray, "zero-length direction");
  return {p.x / n, p.y / n};
}

inline Point perpendicular(Point p) { return {-p.y, p.x}; }

inline Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline bool points_close(Point a, Point b, double eps = kIncidenceEps) {
  return distance(a, b) < eps;
}

inline double deg_from_rad(double r) { return r * 180.0 / kPi; }
inline double rad_from_deg(double d) { return d * kPi / 180.0; }

inline Point rotated(Point p, double degrees) {
  double c = std::cos(rad_from_deg(degrees));
  double s = std::sin(rad_from_deg(degrees));
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Unsigned angle p-vertex-q in degrees, in [0, 180]. Defined by the arccos of
// the normalized direction dot product.
inline double angle_at_deg(Point vertex, Point p, Point q) {
  if (points_close(vertex, p) || points_close(vertex, q))
    throw Error(ErrorCode::degenerate_ray, "angle ray endpoint coincides with vertex");
  Point u = normalized(p - vertex);
  Point v = normalized(q - vertex);
  double d = std::clamp(dot(u, v), -1.0, 1.0);
  return deg_from_rad(std::acos(d));
}

// Signed distance of c from the (infinite) line through a, b; positive on the
// left of a->b.
inline double line_offset(Point a, Point b, Point c) {
  Point d = b - a;
  double len = norm(d);
  if (len < 1e-300) throw Error(ErrorCode::degenerate_ray, "line through coincident points");
  return cross(d, c - a) / len;
}

inline double distance_to_line(Point a, Point b, Point p) {
  return std::abs(line_offset(a, b, p));
}

// Foot of the perpendicular from p onto line(a,b) and its parameter along
// a->b (t=0 at a, t=1 at b).
struct Projection {
  Point foot;
  double t;
};

inline Projection project_onto_line(Point p, Point a, Point b) {
  Point d = b - a;
  double len2 = dot(d, d);
  if (len2 < 1e-300) throw Error(ErrorCode::degenerate_ray, "projection onto degenerate segment");
  double t = dot(p - a, d) / len2;
  return {a + t * d, t};
}

inline double polygon_signed_area(std::span<const Point> pts) {
  double s = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % pts.size()];
    s += cross(a, b);
  }
  return s / 2;
}

// Sign of the orientation of c relative to a->b with a distance-scaled epsilon
// (so the tolerance means "offset from the line in coordinate units").
inline int orient_sign(Point a, Point b, Point c, double eps = kIncidenceEps) {
  double off = line_offset(a, b, c);
  if (off > eps) return 1;
  if (off < -eps) return -1;
  return 0;
}

inline bool within_segment_bbox(Point a, Point b, Point p, double eps = kIncidenceEps) {
  return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
         p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

inline bool point_on_segment(Point a, Point b, Point p, double eps = kIncidenceEps) {
  if (points_close(a, b, 1e-300)) return points_close(a, p, eps);
  return std::abs(line_offset(a, b, p)) < eps && within_segment_bbox(a, b, p, eps);
}

// Closed-segment intersection test (touching endpoints count).
inline bool segments_intersect(Point p1, Point p2, Point p3, Point p4,
                               double eps = kIncidenceEps) {
  int d1 = orient_sign(p3, p4, p1, eps);
  int d2 = orient_sign(p3, p4, p2, eps);
  int d3 = orient_sign(p1, p2, p3, eps);
  int d4 = orient_sign(p1, p2, p4, eps);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && point_on_segment(p3, p4, p1, eps)) return true;
  if (d2 == 0 && point_on_segment(p3, p4, p2, eps)) return true;
  if (d3 == 0 && point_on_segment(p1, p2, p3, eps)) return true;
  if (d4 == 0 && point_on_segment(p1, p2, p4, eps)) return true;
  return false;
}

// Intersection point of two segments treated as infinite lines; nullopt when
// parallel.
inline std::optional<Point> line_intersection(Point a1, Point a2, Point b1, Point b2) {
  Point r = a2 - a1;
  Point s = b2 - b1;
  double denom = cross(r, s);
  if (std::abs(denom) < 1e-14) return std::nullopt;
  double t = cross(b1 - a1, s) / denom;
  return a1 + t * r;
}

// Simplicity scan: O(n^2) pairwise test; adjacent edges may only share their
// common endpoint.
inline bool polygon_is_simple(std::span<const Point> pts, double eps = kIncidenceEps) {
  std::size_t n = pts.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Point a1 = pts[i], a2 = pts[(i + 1) % n];
    if (points_close(a1, a2, eps)) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      Point b1 = pts[j], b2 = pts[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint is fine; collinear overlap beyond it is not.
        Point shared = (j == i + 1) ? a2 : a1;
        Point ai = (j == i + 1) ? a1 : a2;
        Point bj = (j == i + 1) ? b2 : b1;
        if (orient_sign(shared, ai, bj, eps) == 0 &&
            dot(ai - shared, bj - shared) > eps * eps)
          return false;
        continue;
      }
      if (segments_intersect(a1, a2, b1, b2, eps)) return false;
    }
  }
  return true;
}

inline bool points_all_collinear(std::span<const Point> pts, double eps = kIncidenceEps) {
  if (pts.size() < 3) return true;
  Point a = pts[0];
  Point b{};
  bool found = false;
  for (const Point& p : pts)
    if (!points_close(a, p, eps)) {
      b = p;
      found = true;
      break;
    }
  if (!found) return true;
  for (const Point& p : pts)
    if (std::abs(line_offset(a, b, p)) >= eps) return false;
  return true;
}

// |shoelace| / 2 with validation: >= 3 vertices, simple, non-degenerate.
inline double polygon_area(std::span<const Point> pts) {
  if (pts.size() < 3)
    throw Error(ErrorCode::degenerate_polygon, "polygon needs at least 3 vertices");
  if (!polygon_is_simple(pts)) {
    if (points_all_collinear(pts))
      throw Error(ErrorCode::degenerate_polygon, "polygon vertices are collinear");
    throw Error(ErrorCode::self_intersection, "polygon edges intersect");
  }
  double a = std::abs(polygon_signed_area(pts));
  if (a < 1e-12) throw Error(ErrorCode::degenerate_polygon, "polygon area below 1e-12");
  return a;
}

inline bool polygon_is_convex(std::span<const Point> pts, double eps = kIncidenceEps) {
  std::size_t n = pts.size();
  if (n < 3) return false;
  int ref = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int s = orient_sign(pts[i], pts[(i + 1) % n], pts[(i + 2) % n], eps);
    if (s == 0) return false;
    if (ref == 0) ref = s;
    if (s != ref) return false;
  }
  return true;
}

// Interior angle at cycle position i (prev-vertex-next), degrees. Assumes a
// convex cycle, where the interior angle equals the unsigned ray angle.
inline double interior_angle_deg(std::span<const Point> cycle, std::size_t i) {
  std::size_t n = cycle.size();
  return angle_at_deg(cycle[i], cycle[(i + n - 1) % n], cycle[(i + 1) % n]);
}

}  // namespace geosynth
