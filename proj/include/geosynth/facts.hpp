#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "geosynth/scene.hpp"

namespace geosynth {

// Checkable metric statements. Theorem conclusions and hypotheses are both
// expressed as facts; a fact is evaluated purely from vertex coordinates, so
// it can reference points that are not joined by drawn primitives.
enum class FactKind {
  angles_equal,
  angle_value,
  angle_sum,
  lengths_equal,
  length_ratio,
  length_avg,
  ratios_equal,
  pythagorean,
  triangle_inequality,
  parallel_segs,
  perpendicular_segs,
  equidistant,
  dist_to_line_equal,
  collinear,
  points_coincide,
  congruent_sss,
  areas_equal,
  area_sum,
  area_product,
  area_base_height,
  inscribed_central,
};

inline const char* fact_kind_name(FactKind k) {
  switch (k) {
    case FactKind::angles_equal: return "angles-equal";
    case FactKind::angle_value: return "angle-value";
    case FactKind::angle_sum: return "angle-sum";
    case FactKind::lengths_equal: return "lengths-equal";
    case FactKind::length_ratio: return "length-ratio";
    case FactKind::length_avg: return "length-average";
    case FactKind::ratios_equal: return "ratios-equal";
    case FactKind::pythagorean: return "pythagorean";
    case FactKind::triangle_inequality: return "triangle-inequality";
    case FactKind::parallel_segs: return "parallel";
    case FactKind::perpendicular_segs: return "perpendicular";
    case FactKind::equidistant: return "equidistant";
    case FactKind::dist_to_line_equal: return "equidistant-from-lines";
    case FactKind::collinear: return "collinear";
    case FactKind::points_coincide: return "points-coincide";
    case FactKind::congruent_sss: return "congruent";
    case FactKind::areas_equal: return "areas-equal";
    case FactKind::area_sum: return "area-sum";
    case FactKind::area_product: return "area-product";
    case FactKind::area_base_height: return "area-base-height";
    case FactKind::inscribed_central: return "inscribed-central";
  }
  return "?";
}

inline std::optional<FactKind> parse_fact_kind(const std::string& s) {
  static const FactKind all[] = {
      FactKind::angles_equal,      FactKind::angle_value,      FactKind::angle_sum,
      FactKind::lengths_equal,     FactKind::length_ratio,     FactKind::length_avg,
      FactKind::ratios_equal,      FactKind::pythagorean,      FactKind::triangle_inequality,
      FactKind::parallel_segs,     FactKind::perpendicular_segs, FactKind::equidistant,
      FactKind::dist_to_line_equal, FactKind::collinear,        FactKind::points_coincide,
      FactKind::congruent_sss,     FactKind::areas_equal,      FactKind::area_sum,
      FactKind::area_product,      FactKind::area_base_height, FactKind::inscribed_central};
  for (FactKind k : all)
    if (s == fact_kind_name(k)) return k;
  return std::nullopt;
}

// Point expression: a vertex label or "mid(X,Y)".
inline Point resolve_point_expr(const Scene& scene, const std::string& expr) {
  if (expr.rfind("mid(", 0) == 0 && expr.back() == ')') {
    std::string inner = expr.substr(4, expr.size() - 5);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorCode::schema_violation, "bad point expression: " + expr);
    return midpoint(scene.at(inner.substr(0, comma)), scene.at(inner.substr(comma + 1)));
  }
  return scene.at(expr);
}

struct Fact {
  FactKind kind{};
  std::vector<std::vector<std::string>> groups;  // point expressions per group
  double value{0};
  std::string theorem_id;

  // Residual semantics: degrees for angle kinds, relative for length/area
  // kinds, coordinate units for coincidence kinds. A fact holds when the
  // residual is below the caller's tolerance.
  double residual(const Scene& scene) const;
  bool holds(const Scene& scene, double tol = 1e-6) const {
    return residual(scene) < tol;
  }
  std::string render() const;
  std::string canonical() const;
};

namespace fact_detail {

inline double seg_len(const Scene& s, const std::vector<std::string>& g) {
  return distance(resolve_point_expr(s, g[0]), resolve_point_expr(s, g[1]));
}

inline double angle_of(const Scene& s, const std::vector<std::string>& g) {
  return angle_at_deg(resolve_point_expr(s, g[1]), resolve_point_expr(s, g[0]),
                      resolve_point_expr(s, g[2]));
}

inline double poly_area(const Scene& s, const std::vector<std::string>& g) {
  std::vector<Point> pts;
  pts.reserve(g.size());
  for (const auto& e : g) pts.push_back(resolve_point_expr(s, e));
  return std::abs(polygon_signed_area(pts));
}

inline double rel_diff(double a, double b) {
  double m = std::max({std::abs(a), std::abs(b), 1e-12});
  return std::abs(a - b) / m;
}

inline Point seg_dir(const Scene& s, const std::vector<std::string>& g) {
  return normalized(resolve_point_expr(s, g[1]) - resolve_point_expr(s, g[0]));
}

}  // namespace fact_detail

inline double Fact::residual(const Scene& scene) const {
  using namespace fact_detail;
  switch (kind) {
    case FactKind::angles_equal:
      return std::abs(angle_of(scene, groups[0]) - angle_of(scene, groups[1]));
    case FactKind::angle_value:
      return std::abs(angle_of(scene, groups[0]) - value);
    case FactKind::angle_sum: {
      double s = 0;
      for (const auto& g : groups) s += angle_of(scene, g);
      return std::abs(s - value);
    }
    case FactKind::lengths_equal:
      return rel_diff(seg_len(scene, groups[0]), seg_len(scene, groups[1]));
    case FactKind::length_ratio:
      return rel_diff(seg_len(scene, groups[0]), value * seg_len(scene, groups[1]));
    case FactKind::length_avg:
      return rel_diff(seg_len(scene, groups[0]),
                      (seg_len(scene, groups[1]) + seg_len(scene, groups[2])) / 2);
    case FactKind::ratios_equal:
      return rel_diff(seg_len(scene, groups[0]) / seg_len(scene, groups[1]),
                      seg_len(scene, groups[2]) / seg_len(scene, groups[3]));
    case FactKind::pythagorean: {
      double a = seg_len(scene, groups[0]);
      double b = seg_len(scene, groups[1]);
      double c = seg_len(scene, groups[2]);
      return rel_diff(a * a + b * b, c * c);
    }
    case FactKind::triangle_inequality: {
      Point a = resolve_point_expr(scene, groups[0][0]);
      Point b = resolve_point_expr(scene, groups[0][1]);
      Point c = resolve_point_expr(scene, groups[0][2]);
      double ab = distance(a, b), bc = distance(b, c), ca = distance(c, a);
      double worst = std::max({ab - (bc + ca), bc - (ab + ca), ca - (ab + bc)});
      return std::max(0.0, worst / std::max({ab, bc, ca}));
    }
    case FactKind::parallel_segs:
      return std::abs(cross(seg_dir(scene, groups[0]), seg_dir(scene, groups[1])));
    case FactKind::perpendicular_segs:
      return std::abs(dot(seg_dir(scene, groups[0]), seg_dir(scene, groups[1])));
    case FactKind::equidistant: {
      Point p = resolve_point_expr(scene, groups[0][0]);
      return rel_diff(distance(p, resolve_point_expr(scene, groups[1][0])),
                      distance(p, resolve_point_expr(scene, groups[2][0])));
    }
    case FactKind::dist_to_line_equal: {
      Point p = resolve_point_expr(scene, groups[0][0]);
      double d1 = distance_to_line(resolve_point_expr(scene, groups[1][0]),
                                   resolve_point_expr(scene, groups[1][1]), p);
      double d2 = distance_to_line(resolve_point_expr(scene, groups[2][0]),
                                   resolve_point_expr(scene, groups[2][1]), p);
      return rel_diff(d1, d2);
    }
    case FactKind::collinear: {
      Point a = resolve_point_expr(scene, groups[0][0]);
      Point b = resolve_point_expr(scene, groups[0][1]);
      Point c = resolve_point_expr(scene, groups[0][2]);
      double span = std::max({distance(a, b), distance(a, c), 1e-12});
      return distance_to_line(a, b, c) / span;
    }
    case FactKind::points_coincide:
      return distance(resolve_point_expr(scene, groups[0][0]),
                      resolve_point_expr(scene, groups[1][0]));
    case FactKind::congruent_sss: {
      auto sides = [&](const std::vector<std::string>& g) {
        std::vector<double> s = {
            distance(resolve_point_expr(scene, g[0]), resolve_point_expr(scene, g[1])),
            distance(resolve_point_expr(scene, g[1]), resolve_point_expr(scene, g[2])),
            distance(resolve_point_expr(scene, g[2]), resolve_point_expr(scene, g[0]))};
        std::sort(s.begin(), s.end());
        return s;
      };
      auto s1 = sides(groups[0]);
      auto s2 = sides(groups[1]);
      double worst = 0;
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst, rel_diff(s1[static_cast<std::size_t>(i)],
                                         s2[static_cast<std::size_t>(i)]));
      return worst;
    }
    case FactKind::areas_equal:
      return rel_diff(poly_area(scene, groups[0]), poly_area(scene, groups[1]));
    case FactKind::area_sum: {
      double parts = 0;
      for (std::size_t i = 1; i < groups.size(); ++i) parts += poly_area(scene, groups[i]);
      return rel_diff(poly_area(scene, groups[0]), parts);
    }
    case FactKind::area_product:
      return rel_diff(poly_area(scene, groups[0]),
                      value * seg_len(scene, groups[1]) * seg_len(scene, groups[2]));
    case FactKind::area_base_height: {
      Point a = resolve_point_expr(scene, groups[1][0]);
      Point b = resolve_point_expr(scene, groups[1][1]);
      Point apex = resolve_point_expr(scene, groups[2][0]);
      return rel_diff(poly_area(scene, groups[0]),
                      distance(a, b) * distance_to_line(a, b, apex));
    }
    case FactKind::inscribed_central: {
      Point apex = resolve_point_expr(scene, groups[0][0]);
      Point p = resolve_point_expr(scene, groups[1][0]);
      Point q = resolve_point_expr(scene, groups[1][1]);
      Point o = resolve_point_expr(scene, groups[2][0]);
      double ap = deg_from_rad(std::atan2(p.y - o.y, p.x - o.x));
      double aq = deg_from_rad(std::atan2(q.y - o.y, q.x - o.x));
      double aa = deg_from_rad(std::atan2(apex.y - o.y, apex.x - o.x));
      auto ccw = [](double from, double to) {
        double d = std::fmod(to - from + 720.0, 360.0);
        return d;
      };
      // Arc p->q not containing the apex.
      double arc_ccw = ccw(ap, aq);
      bool apex_in_ccw = ccw(ap, aa) < arc_ccw;
      double subtended = apex_in_ccw ? 360.0 - arc_ccw : arc_ccw;
      double inscribed = angle_at_deg(apex, p, q);
      return std::abs(inscribed - subtended / 2);
    }
  }
  return 1e9;
}

namespace fact_detail {

inline std::string pexpr(const std::string& e) {
  if (e.rfind("mid(", 0) == 0) {
    std::string inner = e.substr(4, e.size() - 5);
    auto comma = inner.find(',');
    return "the midpoint of " + inner.substr(0, comma) + inner.substr(comma + 1);
  }
  return e;
}

inline std::string seg_name(const std::vector<std::string>& g) {
  return pexpr(g[0]) + pexpr(g[1]);
}

inline std::string ang_name(const std::vector<std::string>& g) {
  return "∠" + g[0] + g[1] + g[2];
}

inline std::string poly_name(const std::vector<std::string>& g) {
  std::string s;
  for (const auto& e : g) s += pexpr(e);
  return s;
}

inline std::string trim_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace fact_detail

inline std::string Fact::render() const {
  using namespace fact_detail;
  switch (kind) {
    case FactKind::angles_equal:
      return ang_name(groups[0]) + " = " + ang_name(groups[1]);
    case FactKind::angle_value:
      return ang_name(groups[0]) + " = " + trim_num(value) + "°";
    case FactKind::angle_sum: {
      std::string s;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s += " + ";
        s += ang_name(groups[i]);
      }
      return s + " = " + trim_num(value) + "°";
    }
    case FactKind::lengths_equal:
      return seg_name(groups[0]) + " = " + seg_name(groups[1]);
    case FactKind::length_ratio:
      return seg_name(groups[0]) + " = " + trim_num(value) + " × " + seg_name(groups[1]);
    case FactKind::length_avg:
      return seg_name(groups[0]) + " = (" + seg_name(groups[1]) + " + " +
             seg_name(groups[2]) + ") / 2";
    case FactKind::ratios_equal:
      return seg_name(groups[0]) + " / " + seg_name(groups[1]) + " = " +
             seg_name(groups[2]) + " / " + seg_name(groups[3]);
    case FactKind::pythagorean:
      return seg_name(groups[0]) + "² + " + seg_name(groups[1]) + "² = " +
             seg_name(groups[2]) + "²";
    case FactKind::triangle_inequality:
      return "each side of triangle " + poly_name(groups[0]) +
             " is shorter than the other two combined";
    case FactKind::parallel_segs:
      return seg_name(groups[0]) + " ∥ " + seg_name(groups[1]);
    case FactKind::perpendicular_segs:
      return seg_name(groups[0]) + " ⊥ " + seg_name(groups[1]);
    case FactKind::equidistant:
      return pexpr(groups[0][0]) + " is equidistant from " + pexpr(groups[1][0]) +
             " and " + pexpr(groups[2][0]);
    case FactKind::dist_to_line_equal:
      return pexpr(groups[0][0]) + " is equidistant from lines " + seg_name(groups[1]) +
             " and " + seg_name(groups[2]);
    case FactKind::collinear:
      return groups[0][0] + ", " + groups[0][1] + ", " + groups[0][2] + " are collinear";
    case FactKind::points_coincide:
      return pexpr(groups[0][0]) + " coincides with " + pexpr(groups[1][0]);
    case FactKind::congruent_sss:
      return "△" + poly_name(groups[0]) + " ≅ △" + poly_name(groups[1]);
    case FactKind::areas_equal:
      return "area(" + poly_name(groups[0]) + ") = area(" + poly_name(groups[1]) + ")";
    case FactKind::area_sum: {
      std::string s = "area(" + poly_name(groups[0]) + ") = ";
      for (std::size_t i = 1; i < groups.size(); ++i) {
        if (i > 1) s += " + ";
        s += "area(" + poly_name(groups[i]) + ")";
      }
      return s;
    }
    case FactKind::area_product:
      return "area(" + poly_name(groups[0]) + ") = " + trim_num(value) + " × " +
             seg_name(groups[1]) + " × " + seg_name(groups[2]);
    case FactKind::area_base_height:
      return "area(" + poly_name(groups[0]) + ") = " + seg_name(groups[1]) +
             " × height from " + pexpr(groups[2][0]);
    case FactKind::inscribed_central:
      return ang_name({groups[1][0], groups[0][0], groups[1][1]}) +
             " is half the central angle over arc " + groups[1][0] + groups[1][1];
  }
  return "?";
}

inline std::string Fact::canonical() const {
  std::string s = fact_kind_name(kind);
  for (const auto& g : groups) {
    s += "|";
    for (const auto& e : g) {
      s += e;
      s += ",";
    }
  }
  s += "=" + fact_detail::trim_num(value);
  return s;
}

// Group arity validation per kind; returns an empty string when valid.
inline std::string fact_arity_error(FactKind kind,
                                    const std::vector<std::vector<std::string>>& groups) {
  auto sized = [&](std::size_t n_groups, std::vector<std::size_t> sizes) -> std::string {
    if (groups.size() != n_groups) return "wrong group count";
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if (sizes[i] != 0 && groups[i].size() != sizes[i]) return "wrong group arity";
    return "";
  };
  switch (kind) {
    case FactKind::angles_equal: return sized(2, {3, 3});
    case FactKind::angle_value: return sized(1, {3});
    case FactKind::angle_sum:
      if (groups.size() < 2) return "wrong group count";
      for (const auto& g : groups)
        if (g.size() != 3) return "wrong group arity";
      return "";
    case FactKind::lengths_equal: return sized(2, {2, 2});
    case FactKind::length_ratio: return sized(2, {2, 2});
    case FactKind::length_avg: return sized(3, {2, 2, 2});
    case FactKind::ratios_equal: return sized(4, {2, 2, 2, 2});
    case FactKind::pythagorean: return sized(3, {2, 2, 2});
    case FactKind::triangle_inequality: return sized(1, {3});
    case FactKind::parallel_segs: return sized(2, {2, 2});
    case FactKind::perpendicular_segs: return sized(2, {2, 2});
    case FactKind::equidistant: return sized(3, {1, 1, 1});
    case FactKind::dist_to_line_equal: return sized(3, {1, 2, 2});
    case FactKind::collinear: return sized(1, {3});
    case FactKind::points_coincide: return sized(2, {1, 1});
    case FactKind::congruent_sss: return sized(2, {3, 3});
    case FactKind::areas_equal:
    case FactKind::area_sum:
      if (groups.size() < 2) return "wrong group count";
      for (const auto& g : groups)
        if (g.size() < 3) return "polygon group needs >= 3 points";
      return "";
    case FactKind::area_product:
      if (groups.size() != 3 || groups[0].size() < 3 || groups[1].size() != 2 ||
          groups[2].size() != 2)
        return "wrong group shape";
      return "";
    case FactKind::area_base_height:
      if (groups.size() != 3 || groups[0].size() < 3 || groups[1].size() != 2 ||
          groups[2].size() != 1)
        return "wrong group shape";
      return "";
    case FactKind::inscribed_central: return sized(3, {1, 2, 1});
  }
  return "unknown kind";
}

}  // namespace geosynth
