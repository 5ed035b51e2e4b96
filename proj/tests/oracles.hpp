#pragma once

// Independent oracles for checking the geometry kernel. These intentionally
// avoid the library's own code paths: areas come from fan triangulation of
// convex cycles, distances from long-double arithmetic, feet of
// perpendiculars from the explicit normal-equation formula.

#include <cmath>
#include <span>
#include <vector>

#include "geosynth/geometry.hpp"

namespace oracles {

// Cross-product triangle area, accumulated over a fan from vertex 0.
// Valid for convex cycles.
inline double fan_triangulation_area(std::span<const geosynth::Point> pts) {
  long double total = 0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    long double ax = pts[i].x - pts[0].x;
    long double ay = pts[i].y - pts[0].y;
    long double bx = pts[i + 1].x - pts[0].x;
    long double by = pts[i + 1].y - pts[0].y;
    long double t = (ax * by - ay * bx) / 2.0L;
    total += t < 0 ? -t : t;
  }
  return static_cast<double>(total);
}

inline double long_double_distance(geosynth::Point a, geosynth::Point b) {
  long double dx = static_cast<long double>(a.x) - b.x;
  long double dy = static_cast<long double>(a.y) - b.y;
  return static_cast<double>(sqrtl(dx * dx + dy * dy));
}

// Foot of perpendicular from p to line(a,b) via the normal equations.
inline geosynth::Point projection_formula(geosynth::Point p, geosynth::Point a,
                                          geosynth::Point b) {
  long double dx = b.x - a.x, dy = b.y - a.y;
  long double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
  return {static_cast<double>(a.x + t * dx), static_cast<double>(a.y + t * dy)};
}

// Sorted side-length multiset comparison for two coordinate triangles.
inline bool sss_congruent(std::span<const geosynth::Point> t1,
                          std::span<const geosynth::Point> t2, double tol) {
  std::vector<double> s1, s2;
  for (int i = 0; i < 3; ++i) {
    s1.push_back(long_double_distance(t1[static_cast<std::size_t>(i)],
                                      t1[static_cast<std::size_t>((i + 1) % 3)]));
    s2.push_back(long_double_distance(t2[static_cast<std::size_t>(i)],
                                      t2[static_cast<std::size_t>((i + 1) % 3)]));
  }
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  for (int i = 0; i < 3; ++i)
    if (std::abs(s1[static_cast<std::size_t>(i)] - s2[static_cast<std::size_t>(i)]) > tol)
      return false;
  return true;
}

}  // namespace oracles
