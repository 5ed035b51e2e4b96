#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "geosynth/catalog.hpp"
#include "geosynth/geometry.hpp"
#include "geosynth/rng.hpp"

namespace geosynth {

// A substrate laid out in local coordinates, before placement on the canvas.
// Index conventions: `cycle` is the polygon boundary; `center`/`externals`
// index into `points`; `extra_segments` are primitives beyond the boundary
// (radii, tangents, diameters). Side lengths come off 0.5-unit grids and
// angles off 5-degree grids so that given values display exactly.
struct SubstrateLayout {
  std::vector<Point> points;
  std::vector<int> verts;  // placeholder order V1.. (indices into points)
  std::vector<int> cycle;
  std::optional<int> center;
  double radius{0};
  std::vector<int> externals;
  std::vector<std::tuple<int, int, RoleTag>> extra_segments;
  bool cycle_sides_are_chords{false};
};

namespace gen_detail {

inline double param(const ordered_json& params, const char* key, double fallback) {
  if (params.is_object() && params.contains(key)) return params[key].get<double>();
  return fallback;
}

inline Point on_circle(double radius, double deg) {
  return {radius * std::cos(rad_from_deg(deg)), radius * std::sin(rad_from_deg(deg))};
}

}  // namespace gen_detail

// All recipes the engine knows; catalogs referencing anything else get a
// catalog-mismatch error at generation time.
inline SubstrateLayout generate_substrate_layout(const Substrate& sub, Rng& rng) {
  using gen_detail::on_circle;
  using gen_detail::param;
  const auto& p = sub.generator.params;
  const std::string& recipe = sub.generator.recipe;
  SubstrateLayout out;

  auto polygon_layout = [&](std::vector<Point> pts) {
    out.points = std::move(pts);
    for (int i = 0; i < static_cast<int>(out.points.size()); ++i) {
      out.verts.push_back(i);
      out.cycle.push_back(i);
    }
  };

  if (recipe == "scalene_triangle") {
    double base = rng.uniform_grid(param(p, "base_min", 10), param(p, "base_max", 22), 0.5);
    double a1, a2;
    do {
      a1 = rng.uniform_grid(param(p, "angle_min", 35), param(p, "angle_max", 75), 5);
      a2 = rng.uniform_grid(param(p, "angle_min", 35), param(p, "angle_max", 75), 5);
    } while (a1 == a2 || 180 - a1 - a2 < 30 || 180 - a1 - a2 > 120 ||
             180 - a1 - a2 == a1 || 180 - a1 - a2 == a2);
    // Apex from base angles at B(0,0) and C(base,0).
    double t1 = std::tan(rad_from_deg(a1));
    double t2 = std::tan(rad_from_deg(a2));
    double x = base * t2 / (t1 + t2);
    polygon_layout({{x, x * t1}, {0, 0}, {base, 0}});
  } else if (recipe == "isosceles_triangle") {
    double base = rng.uniform_grid(param(p, "base_min", 8), param(p, "base_max", 20), 0.5);
    double beta =
        rng.uniform_grid(param(p, "base_angle_min", 30), param(p, "base_angle_max", 75), 5);
    double h = (base / 2) * std::tan(rad_from_deg(beta));
    polygon_layout({{base / 2, h}, {0, 0}, {base, 0}});  // apex first
  } else if (recipe == "equilateral_triangle") {
    double s = rng.uniform_grid(param(p, "side_min", 8), param(p, "side_max", 18), 0.5);
    polygon_layout({{s / 2, s * std::sqrt(3.0) / 2}, {0, 0}, {s, 0}});
  } else if (recipe == "right_triangle") {
    double a = rng.uniform_grid(param(p, "leg_min", 6), param(p, "leg_max", 16), 0.5);
    double b;
    if (rng.chance(param(p, "special_angle_prob", 0.4))) {
      // One acute angle exactly 30/45/60 so trigonometric facts can fire.
      double theta = std::vector<double>{30, 45, 60}[static_cast<std::size_t>(
          rng.uniform_int(0, 2))];
      b = a * std::tan(rad_from_deg(theta));
    } else {
      do {
        b = rng.uniform_grid(param(p, "leg_min", 6), param(p, "leg_max", 16), 0.5);
      } while (b / a > 2.5 || a / b > 2.5);
    }
    polygon_layout({{0, 0}, {a, 0}, {0, b}});  // right angle first
  } else if (recipe == "right_isosceles_triangle") {
    double a = rng.uniform_grid(param(p, "leg_min", 6), param(p, "leg_max", 16), 0.5);
    polygon_layout({{0, 0}, {a, 0}, {0, a}});
  } else if (recipe == "convex_quadrilateral") {
    for (int tries = 0; tries < 64; ++tries) {
      double base = rng.uniform_grid(param(p, "base_min", 12), param(p, "base_max", 22), 0.5);
      double h1 = rng.uniform_grid(param(p, "height_min", 8), param(p, "height_max", 16), 0.5);
      double h2 = rng.uniform_grid(param(p, "height_min", 8), param(p, "height_max", 16), 0.5);
      double x3 = rng.uniform_grid(base * 0.55, base * 1.15, 0.5);
      double x4 = rng.uniform_grid(-base * 0.15, base * 0.4, 0.5);
      std::vector<Point> pts = {{0, 0}, {base, 0}, {x3, h1}, {x4, h2}};
      if (!polygon_is_convex(pts)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i)
        ok = interior_angle_deg(pts, i) > 28 && interior_angle_deg(pts, i) < 150;
      if (!ok) continue;
      polygon_layout(pts);
      break;
    }
    if (out.points.empty())
      throw Error(ErrorCode::retry_exhausted, "convex quadrilateral sampling failed");
  } else if (recipe == "parallelogram") {
    double a = rng.uniform_grid(param(p, "base_min", 10), param(p, "base_max", 20), 0.5);
    double b = rng.uniform_grid(param(p, "side_min", 7), param(p, "side_max", 14), 0.5);
    double theta;
    do {
      theta = rng.uniform_grid(param(p, "angle_min", 45), param(p, "angle_max", 135), 5);
    } while (theta == 90);
    Point d = on_circle(b, theta);
    polygon_layout({{0, 0}, {a, 0}, {a + d.x, d.y}, {d.x, d.y}});
  } else if (recipe == "rectangle") {
    double a = rng.uniform_grid(param(p, "base_min", 10), param(p, "base_max", 20), 0.5);
    double b;
    do {
      b = rng.uniform_grid(param(p, "side_min", 6), param(p, "side_max", 14), 0.5);
    } while (b == a);
    polygon_layout({{0, 0}, {a, 0}, {a, b}, {0, b}});
  } else if (recipe == "rhombus") {
    double s = rng.uniform_grid(param(p, "side_min", 8), param(p, "side_max", 16), 0.5);
    double theta;
    do {
      theta = rng.uniform_grid(param(p, "angle_min", 45), param(p, "angle_max", 135), 5);
    } while (theta == 90);
    Point d = on_circle(s, theta);
    polygon_layout({{0, 0}, {s, 0}, {s + d.x, d.y}, {d.x, d.y}});
  } else if (recipe == "square") {
    double s = rng.uniform_grid(param(p, "side_min", 8), param(p, "side_max", 16), 0.5);
    polygon_layout({{0, 0}, {s, 0}, {s, s}, {0, s}});
  } else if (recipe == "trapezoid" || recipe == "isosceles_trapezoid") {
    double a = rng.uniform_grid(param(p, "base_min", 14), param(p, "base_max", 24), 0.5);
    double c = rng.uniform_grid(param(p, "top_min", 6), param(p, "top_max", 11), 0.5);
    double h = rng.uniform_grid(param(p, "height_min", 7), param(p, "height_max", 13), 0.5);
    double offset;
    if (recipe == "isosceles_trapezoid") {
      offset = (a - c) / 2;
    } else {
      do {
        offset = rng.uniform_grid(1.0, a - c - 1.0, 0.5);
      } while (std::abs(offset - (a - c) / 2) < 0.25);
    }
    polygon_layout({{0, 0}, {a, 0}, {offset + c, h}, {offset, h}});
  } else if (recipe == "circle") {
    out.radius = rng.uniform_grid(param(p, "radius_min", 6), param(p, "radius_max", 14), 0.5);
    out.points = {{0, 0}};
    out.verts = {0};
    out.center = 0;
  } else if (recipe == "circle_central_angle") {
    out.radius = rng.uniform_grid(param(p, "radius_min", 6), param(p, "radius_max", 13), 0.5);
    double start = rng.uniform_grid(0, 355, 5);
    double arc = rng.uniform_grid(param(p, "arc_min", 40), param(p, "arc_max", 140), 5);
    out.points = {{0, 0}, on_circle(out.radius, start), on_circle(out.radius, start + arc)};
    out.verts = {0, 1, 2};
    out.center = 0;
    out.extra_segments = {{0, 1, RoleTag::radius},
                          {0, 2, RoleTag::radius},
                          {1, 2, RoleTag::chord}};
  } else if (recipe == "circle_inscribed_triangle") {
    out.radius = rng.uniform_grid(param(p, "radius_min", 7), param(p, "radius_max", 13), 0.5);
    double lo = param(p, "arc_min", 50);
    double a1, a2, a3;
    do {
      a1 = rng.uniform_grid(lo, 160, 5);
      a2 = rng.uniform_grid(lo, 160, 5);
      a3 = 360 - a1 - a2;
    } while (a3 < lo || a3 > 160);
    double start = rng.uniform_grid(0, 355, 5);
    out.points = {{0, 0},
                  on_circle(out.radius, start),
                  on_circle(out.radius, start + a1),
                  on_circle(out.radius, start + a1 + a2)};
    out.verts = {0, 1, 2, 3};
    out.cycle = {1, 2, 3};
    out.center = 0;
    out.cycle_sides_are_chords = true;
  } else if (recipe == "circle_tangent") {
    out.radius = rng.uniform_grid(param(p, "radius_min", 5), param(p, "radius_max", 10), 0.5);
    double d = out.radius +
               rng.uniform_grid(param(p, "dist_min", 4), param(p, "dist_max", 12), 0.5);
    double dir = rng.uniform_grid(0, 355, 5);
    Point v = on_circle(d, dir);
    double alpha = deg_from_rad(std::acos(out.radius / d));
    Point t = on_circle(out.radius, dir + (rng.chance(0.5) ? alpha : -alpha));
    out.points = {{0, 0}, v, t};
    out.verts = {0, 1, 2};
    out.center = 0;
    out.externals = {1};
    out.extra_segments = {{1, 2, RoleTag::tangent}, {0, 2, RoleTag::radius}};
  } else if (recipe == "cyclic_quadrilateral") {
    out.radius = rng.uniform_grid(param(p, "radius_min", 7), param(p, "radius_max", 13), 0.5);
    double lo = param(p, "arc_min", 40);
    double a1, a2, a3, a4;
    do {
      a1 = rng.uniform_grid(lo, 120, 5);
      a2 = rng.uniform_grid(lo, 120, 5);
      a3 = rng.uniform_grid(lo, 120, 5);
      a4 = 360 - a1 - a2 - a3;
    } while (a4 < lo || a4 > 160);
    double start = rng.uniform_grid(0, 355, 5);
    out.points = {{0, 0},
                  on_circle(out.radius, start),
                  on_circle(out.radius, start + a1),
                  on_circle(out.radius, start + a1 + a2),
                  on_circle(out.radius, start + a1 + a2 + a3)};
    out.verts = {0, 1, 2, 3, 4};
    out.cycle = {1, 2, 3, 4};
    out.center = 0;
    out.cycle_sides_are_chords = true;
  } else if (recipe == "semicircle") {
    out.radius = rng.uniform_grid(param(p, "radius_min", 7), param(p, "radius_max", 13), 0.5);
    double base = rng.uniform_grid(0, 355, 5);
    double apex =
        rng.uniform_grid(param(p, "apex_min", 35), param(p, "apex_max", 145), 5);
    out.points = {{0, 0},
                  on_circle(out.radius, base),
                  on_circle(out.radius, base + 180),
                  on_circle(out.radius, base + apex)};
    out.verts = {0, 1, 2, 3};
    out.cycle = {1, 3, 2};  // triangle A-C-B on the arc
    out.center = 0;
    out.cycle_sides_are_chords = true;
  } else if (recipe == "regular_polygon") {
    int n = static_cast<int>(param(p, "sides", 5));
    out.radius = rng.uniform_grid(param(p, "radius_min", 7), param(p, "radius_max", 12), 0.5);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(on_circle(out.radius, 90 + 360.0 * i / n));
    polygon_layout(pts);
    out.radius = 0;  // no circle drawn for the regular polygons
  } else {
    throw Error(ErrorCode::catalog_mismatch,
                "unknown generator recipe '" + recipe + "' for substrate " + sub.id);
  }
  return out;
}

}  // namespace geosynth
