#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "geosynth/scene.hpp"

namespace geosynth {

enum class RelationKind {
  parallel,
  perpendicular,
  equal_length,
  congruent_triangles,
  tangent,
  point_on_circle,
  midpoint_of,
};

inline const char* relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::parallel: return "parallel";
    case RelationKind::perpendicular: return "perpendicular";
    case RelationKind::equal_length: return "equal-length";
    case RelationKind::congruent_triangles: return "congruent";
    case RelationKind::tangent: return "tangent";
    case RelationKind::point_on_circle: return "point-on-circle";
    case RelationKind::midpoint_of: return "midpoint-of";
  }
  return "?";
}

struct Relation {
  RelationKind kind{};
  std::vector<std::string> elements;  // segment ids / vertex labels / circle ids
  double residual{0};
};

namespace detail {

struct SegView {
  std::string id;
  std::string a, b;
  Point pa, pb;
  double len;
};

inline std::vector<SegView> segment_views(const Scene& scene) {
  std::vector<SegView> out;
  for (const Primitive& p : scene.primitives()) {
    if (p.kind != PrimitiveKind::segment) continue;
    SegView v;
    v.id = p.id();
    v.a = p.a;
    v.b = p.b;
    v.pa = scene.at(p.a);
    v.pb = scene.at(p.b);
    v.len = distance(v.pa, v.pb);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

// All pairwise relations among the scene's segments, circles and vertices,
// each with the numeric residual that decided it.
inline std::vector<Relation> relation_tests(const Scene& scene) {
  std::vector<Relation> out;
  auto segs = detail::segment_views(scene);

  auto shares_endpoint = [](const detail::SegView& s, const detail::SegView& t) {
    return s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
  };

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      Point u = normalized(s.pb - s.pa);
      Point v = normalized(t.pb - t.pa);
      double cr = std::abs(cross(u, v));
      double dt = std::abs(dot(u, v));
      if (cr < kIncidenceEps && !shares_endpoint(s, t))
        out.push_back({RelationKind::parallel, {s.id, t.id}, cr});
      if (dt < kIncidenceEps)
        out.push_back({RelationKind::perpendicular, {s.id, t.id}, dt});
      double rel = std::abs(s.len - t.len) / std::max(s.len, t.len);
      if (rel < kIncidenceEps)
        out.push_back({RelationKind::equal_length, {s.id, t.id}, rel});
    }
  }

  // Congruent triangles: triples of vertices pairwise joined by segments,
  // compared as sorted side-length triples (SSS).
  {
    auto seg_between = [&](const std::string& a, const std::string& b) {
      return scene.has_segment(a, b);
    };
    std::vector<std::array<std::string, 3>> tris;
    const auto& verts = scene.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        for (std::size_t k = j + 1; k < verts.size(); ++k) {
          const auto& a = verts[i].first;
          const auto& b = verts[j].first;
          const auto& c = verts[k].first;
          if (seg_between(a, b) && seg_between(b, c) && seg_between(a, c))
            tris.push_back({a, b, c});
        }
    auto sides = [&](const std::array<std::string, 3>& t) {
      std::array<double, 3> s = {distance(scene.at(t[0]), scene.at(t[1])),
                                 distance(scene.at(t[1]), scene.at(t[2])),
                                 distance(scene.at(t[0]), scene.at(t[2]))};
      std::sort(s.begin(), s.end());
      return s;
    };
    for (std::size_t i = 0; i < tris.size(); ++i)
      for (std::size_t j = i + 1; j < tris.size(); ++j) {
        auto si = sides(tris[i]);
        auto sj = sides(tris[j]);
        double res = 0;
        for (int k = 0; k < 3; ++k)
          res = std::max(res, std::abs(si[k] - sj[k]) / std::max(si[k], sj[k]));
        if (res < kIncidenceEps) {
          std::string ti = tris[i][0] + tris[i][1] + tris[i][2];
          std::string tj = tris[j][0] + tris[j][1] + tris[j][2];
          out.push_back({RelationKind::congruent_triangles, {ti, tj}, res});
        }
      }
  }

  // Circle relations.
  for (const Primitive& c : scene.primitives()) {
    if (c.kind != PrimitiveKind::circle) continue;
    Point o = scene.at(c.center);
    for (const auto& s : segs) {
      double d = distance_to_line(s.pa, s.pb, o);
      double res = std::abs(d - c.radius);
      if (res < kIncidenceEps) {
        auto proj = project_onto_line(o, s.pa, s.pb);
        if (proj.t > -kIncidenceEps && proj.t < 1 + kIncidenceEps)
          out.push_back({RelationKind::tangent, {c.id(), s.id}, res});
      }
    }
    for (const auto& [label, p] : scene.vertices()) {
      if (label == c.center) continue;
      double res = std::abs(distance(p, o) - c.radius);
      if (res < kIncidenceEps)
        out.push_back({RelationKind::point_on_circle, {label, c.id()}, res});
    }
  }

  // Midpoints: vertex strictly inside a segment, equidistant from its ends.
  for (const auto& s : segs) {
    for (const auto& [label, p] : scene.vertices()) {
      if (label == s.a || label == s.b) continue;
      if (std::abs(line_offset(s.pa, s.pb, p)) >= kIncidenceEps) continue;
      auto proj = project_onto_line(p, s.pa, s.pb);
      if (proj.t <= kIncidenceEps || proj.t >= 1 - kIncidenceEps) continue;
      double res = std::abs(distance(p, s.pa) - distance(p, s.pb)) / s.len;
      if (res < kIncidenceEps)
        out.push_back({RelationKind::midpoint_of, {label, s.id}, res});
    }
  }

  return out;
}

inline bool has_relation(const std::vector<Relation>& rels, RelationKind kind) {
  for (const auto& r : rels)
    if (r.kind == kind) return true;
  return false;
}

// A corner formed by two segments meeting at a vertex. Straight-through
// incidences (180° within 1e-9) are collinear pass-throughs, not corners,
// and are excluded.
struct JunctionAngle {
  std::string p, vertex, q;
  double degrees;
};

inline std::vector<JunctionAngle> junction_angles(const Scene& scene) {
  std::vector<JunctionAngle> out;
  const auto& prims = scene.primitives();
  for (const auto& [label, pos] : scene.vertices()) {
    std::vector<std::string> arms;
    for (const Primitive& p : prims) {
      if (p.kind != PrimitiveKind::segment) continue;
      if (p.a == label) arms.push_back(p.b);
      else if (p.b == label) arms.push_back(p.a);
    }
    std::sort(arms.begin(), arms.end());
    arms.erase(std::unique(arms.begin(), arms.end()), arms.end());
    for (std::size_t i = 0; i < arms.size(); ++i)
      for (std::size_t j = i + 1; j < arms.size(); ++j) {
        double deg = angle_at_deg(pos, scene.at(arms[i]), scene.at(arms[j]));
        if (deg > 180.0 - 1e-9) continue;
        out.push_back({arms[i], label, arms[j], deg});
      }
  }
  return out;
}

}  // namespace geosynth
