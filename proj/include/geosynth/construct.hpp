#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "geosynth/scene.hpp"

namespace geosynth {

// Anchor for construct_special_line: role-specific vertex labels plus an
// optional host primitive. `param1`/`param2` carry pre-sampled free
// parameters (e.g. angles on a circle) so the construction itself stays
// deterministic.
struct Anchor {
  std::vector<std::string> verts;
  std::optional<std::size_t> primitive;
  double param1{0};
  double param2{0};
};

namespace detail {

struct RayHit {
  Point p;
  double t;
};

// Nearest forward intersection of the ray origin + t*dir with the scene's
// segments and circles.
inline std::optional<RayHit> cast_ray(const Scene& scene, Point origin, Point dir) {
  std::optional<RayHit> best;
  auto consider = [&](Point p, double t) {
    if (t < 1e-6) return;
    if (!best || t < best->t) best = RayHit{p, t};
  };
  for (const Primitive& prim : scene.primitives()) {
    if (prim.kind == PrimitiveKind::segment) {
      Point a = scene.at(prim.a);
      Point b = scene.at(prim.b);
      Point s = b - a;
      double denom = cross(dir, s);
      if (std::abs(denom) < 1e-12) continue;
      double t = cross(a - origin, s) / denom;
      double u = cross(a - origin, dir) / denom;
      if (u < -kIncidenceEps || u > 1 + kIncidenceEps) continue;
      consider(origin + t * dir, t);
    } else if (prim.kind == PrimitiveKind::circle) {
      Point o = scene.at(prim.center);
      Point f = origin - o;
      double b2 = dot(f, dir);
      double c = dot(f, f) - prim.radius * prim.radius;
      double disc = b2 * b2 - c;
      if (disc < 0) continue;
      double sq = std::sqrt(disc);
      consider(origin + (-b2 - sq) * dir, -b2 - sq);
      consider(origin + (-b2 + sq) * dir, -b2 + sq);
    }
  }
  return best;
}

// Register p unless an existing vertex already sits there.
inline std::string reuse_or_add(Scene& scene, Point p, std::vector<std::string>* fresh) {
  if (auto existing = scene.vertex_near(p)) return *existing;
  std::string label = scene.add_vertex(p);
  if (fresh) fresh->push_back(label);
  return label;
}

inline void require_distinct(const Scene& scene, const std::string& a, const std::string& b) {
  if (a == b || points_close(scene.at(a), scene.at(b)))
    throw Error(ErrorCode::degenerate_anchor, "anchor points coincide: " + a + "," + b);
}

inline std::size_t add_injected_segment(Scene& scene, const std::string& a,
                                        const std::string& b, RoleTag role) {
  if (scene.has_segment(a, b))
    throw Error(ErrorCode::construction_impossible, "segment " + a + b + " already exists");
  return scene.add_segment(a, b, {role});
}

}  // namespace detail

// Builds one theorem-motivated line element analytically. Endpoints always
// land on existing vertices or existing primitives; any fresh endpoint gets
// registered with the next free label.
//
// Anchor conventions (context order is what theorem bindings rely on):
//   median / altitude / angle-bisector: verts = {from, opp1, opp2}
//   midline (triangle):   verts = {apex, b, c}       -> joins mid(apex,b), mid(apex,c)
//   midline (trapezoid):  verts = {v1, v2, v3, v4}   -> joins mid(v1,v4), mid(v2,v3)
//   perpendicular-bisector: primitive = host segment
//   diagonal: verts = {p, q}
//   parallel-auxiliary: verts = {through}, primitive = reference segment
//   radius: primitive = circle, param1 = angle (degrees)
//   chord:  primitive = circle, param1/param2 = angles (degrees)
//   tangent: primitive = circle, verts = {external point}, param1 < 0.5 picks the branch
inline InjectedElement construct_special_line(Scene& scene, RoleTag kind,
                                              const Anchor& anchor) {
  InjectedElement el;
  el.role = kind;

  auto need_verts = [&](std::size_t n) {
    if (anchor.verts.size() < n)
      throw Error(ErrorCode::degenerate_anchor, "anchor needs more vertices");
    for (const auto& v : anchor.verts)
      if (!scene.has_vertex(v))
        throw Error(ErrorCode::degenerate_anchor, "anchor vertex missing: " + v);
  };
  auto need_primitive = [&](PrimitiveKind pk) -> const Primitive& {
    if (!anchor.primitive || *anchor.primitive >= scene.primitives().size())
      throw Error(ErrorCode::degenerate_anchor, "anchor primitive missing");
    const Primitive& p = scene.primitives()[*anchor.primitive];
    if (p.kind != pk)
      throw Error(ErrorCode::degenerate_anchor, "anchor primitive has wrong kind");
    return p;
  };

  switch (kind) {
    case RoleTag::median: {
      need_verts(3);
      const auto& from = anchor.verts[0];
      const auto& b = anchor.verts[1];
      const auto& c = anchor.verts[2];
      detail::require_distinct(scene, b, c);
      Point m = midpoint(scene.at(b), scene.at(c));
      std::string ml = detail::reuse_or_add(scene, m, &el.new_vertices);
      if (ml == from) throw Error(ErrorCode::degenerate_anchor, "median collapses");
      el.seg_a = from;
      el.seg_b = ml;
      el.context = {from, b, c};
      break;
    }
    case RoleTag::altitude: {
      need_verts(3);
      const auto& from = anchor.verts[0];
      const auto& b = anchor.verts[1];
      const auto& c = anchor.verts[2];
      detail::require_distinct(scene, b, c);
      auto proj = project_onto_line(scene.at(from), scene.at(b), scene.at(c));
      // Foot must land on the opposite side, away from its endpoints.
      if (proj.t < 1e-6 || proj.t > 1 - 1e-6)
        throw Error(ErrorCode::construction_impossible, "altitude foot falls outside " + b + c);
      std::string f = detail::reuse_or_add(scene, proj.foot, &el.new_vertices);
      if (f == from) throw Error(ErrorCode::degenerate_anchor, "altitude collapses");
      el.seg_a = from;
      el.seg_b = f;
      el.context = {from, b, c};
      break;
    }
    case RoleTag::angle_bisector: {
      need_verts(3);
      const auto& corner = anchor.verts[0];
      const auto& nb = anchor.verts[1];
      const auto& nc = anchor.verts[2];
      Point pc = scene.at(corner);
      Point u = normalized(scene.at(nb) - pc);
      Point v = normalized(scene.at(nc) - pc);
      Point dir = u + v;
      if (norm(dir) < 1e-9)
        throw Error(ErrorCode::degenerate_anchor, "straight angle has no bisector ray");
      dir = normalized(dir);
      Point target;
      if (scene.has_segment(nb, nc)) {
        // Exact split of the opposite side: |nb D| / |D nc| = |corner nb| / |corner nc|.
        double lb = distance(pc, scene.at(nb));
        double lc = distance(pc, scene.at(nc));
        target = (lc / (lb + lc)) * scene.at(nb) + (lb / (lb + lc)) * scene.at(nc);
      } else {
        auto hit = detail::cast_ray(scene, pc, dir);
        if (!hit)
          throw Error(ErrorCode::construction_impossible, "bisector ray leaves the figure");
        target = hit->p;
      }
      std::string d = detail::reuse_or_add(scene, target, &el.new_vertices);
      if (d == corner) throw Error(ErrorCode::degenerate_anchor, "bisector collapses");
      el.seg_a = corner;
      el.seg_b = d;
      el.context = {corner, nb, nc};
      break;
    }
    case RoleTag::midline: {
      if (anchor.verts.size() == 4) {
        need_verts(4);
        const auto& v1 = anchor.verts[0];
        const auto& v2 = anchor.verts[1];
        const auto& v3 = anchor.verts[2];
        const auto& v4 = anchor.verts[3];
        std::string m1 = detail::reuse_or_add(
            scene, midpoint(scene.at(v1), scene.at(v4)), &el.new_vertices);
        std::string m2 = detail::reuse_or_add(
            scene, midpoint(scene.at(v2), scene.at(v3)), &el.new_vertices);
        detail::require_distinct(scene, m1, m2);
        el.seg_a = m1;
        el.seg_b = m2;
        el.context = {v1, v2, v3, v4};
      } else {
        need_verts(3);
        const auto& apex = anchor.verts[0];
        const auto& b = anchor.verts[1];
        const auto& c = anchor.verts[2];
        std::string m1 = detail::reuse_or_add(
            scene, midpoint(scene.at(apex), scene.at(b)), &el.new_vertices);
        std::string m2 = detail::reuse_or_add(
            scene, midpoint(scene.at(apex), scene.at(c)), &el.new_vertices);
        detail::require_distinct(scene, m1, m2);
        el.seg_a = m1;
        el.seg_b = m2;
        el.context = {apex, b, c};
      }
      break;
    }
    case RoleTag::perpendicular_bisector: {
      const Primitive& host = need_primitive(PrimitiveKind::segment);
      Point a = scene.at(host.a);
      Point b = scene.at(host.b);
      Point m = midpoint(a, b);
      std::string ml = detail::reuse_or_add(scene, m, &el.new_vertices);
      // Chord of a circle: the bisector runs through the center.
      std::optional<std::string> center;
      for (const Primitive& p : scene.primitives()) {
        if (p.kind != PrimitiveKind::circle) continue;
        Point o = scene.at(p.center);
        if (std::abs(distance(o, a) - p.radius) < kIncidenceEps &&
            std::abs(distance(o, b) - p.radius) < kIncidenceEps) {
          center = p.center;
          break;
        }
      }
      std::string other;
      if (center && !points_close(scene.at(*center), m)) {
        other = *center;
      } else {
        Point dir = normalized(perpendicular(b - a));
        auto h1 = detail::cast_ray(scene, m, dir);
        auto h2 = detail::cast_ray(scene, m, {-dir.x, -dir.y});
        std::optional<Point> target;
        if (h1 && (!h2 || h1->t <= h2->t)) target = h1->p;
        else if (h2) target = h2->p;
        if (!target)
          throw Error(ErrorCode::construction_impossible,
                      "perpendicular bisector does not meet the figure");
        other = detail::reuse_or_add(scene, *target, &el.new_vertices);
      }
      detail::require_distinct(scene, ml, other);
      el.seg_a = ml;
      el.seg_b = other;
      el.context = {host.a, host.b};
      break;
    }
    case RoleTag::radius: {
      const Primitive& host = need_primitive(PrimitiveKind::circle);
      Point o = scene.at(host.center);
      double t = rad_from_deg(anchor.param1);
      Point p = o + Point{host.radius * std::cos(t), host.radius * std::sin(t)};
      std::string pl = detail::reuse_or_add(scene, p, &el.new_vertices);
      el.seg_a = host.center;
      el.seg_b = pl;
      el.context = {host.center};
      break;
    }
    case RoleTag::chord: {
      const Primitive& host = need_primitive(PrimitiveKind::circle);
      Point o = scene.at(host.center);
      double t1 = rad_from_deg(anchor.param1);
      double t2 = rad_from_deg(anchor.param2);
      Point p = o + Point{host.radius * std::cos(t1), host.radius * std::sin(t1)};
      Point q = o + Point{host.radius * std::cos(t2), host.radius * std::sin(t2)};
      if (points_close(p, q, 1e-6))
        throw Error(ErrorCode::degenerate_anchor, "chord endpoints coincide");
      std::string pl = detail::reuse_or_add(scene, p, &el.new_vertices);
      std::string ql = detail::reuse_or_add(scene, q, &el.new_vertices);
      el.seg_a = pl;
      el.seg_b = ql;
      el.context = {host.center};
      break;
    }
    case RoleTag::tangent: {
      const Primitive& host = need_primitive(PrimitiveKind::circle);
      need_verts(1);
      const auto& external = anchor.verts[0];
      Point o = scene.at(host.center);
      Point v = scene.at(external);
      double d = distance(v, o);
      if (d <= host.radius + kIncidenceEps)
        throw Error(ErrorCode::construction_impossible,
                    "no tangent from a point on or inside the circle");
      double alpha = deg_from_rad(std::acos(host.radius / d));
      Point toward = normalized(v - o);
      Point touch = o + host.radius * rotated(toward, anchor.param1 < 0.5 ? alpha : -alpha);
      std::string tl = detail::reuse_or_add(scene, touch, &el.new_vertices);
      el.seg_a = external;
      el.seg_b = tl;
      el.context = {host.center, external};
      break;
    }
    case RoleTag::diagonal: {
      need_verts(2);
      const auto& p = anchor.verts[0];
      const auto& q = anchor.verts[1];
      detail::require_distinct(scene, p, q);
      el.seg_a = p;
      el.seg_b = q;
      el.context = anchor.verts;
      break;
    }
    case RoleTag::parallel_auxiliary: {
      need_verts(1);
      const Primitive& ref = need_primitive(PrimitiveKind::segment);
      const auto& through = anchor.verts[0];
      if (through == ref.a || through == ref.b)
        throw Error(ErrorCode::degenerate_anchor, "parallel through its own reference segment");
      Point v = scene.at(through);
      if (distance_to_line(scene.at(ref.a), scene.at(ref.b), v) < kIncidenceEps)
        throw Error(ErrorCode::degenerate_anchor, "point lies on the reference line");
      Point dir = normalized(scene.at(ref.b) - scene.at(ref.a));
      auto h1 = detail::cast_ray(scene, v, dir);
      auto h2 = detail::cast_ray(scene, v, {-dir.x, -dir.y});
      std::optional<Point> target;
      if (h1 && (!h2 || h1->t <= h2->t)) target = h1->p;
      else if (h2) target = h2->p;
      if (!target)
        throw Error(ErrorCode::construction_impossible, "parallel line misses the figure");
      std::string hl = detail::reuse_or_add(scene, *target, &el.new_vertices);
      detail::require_distinct(scene, through, hl);
      el.seg_a = through;
      el.seg_b = hl;
      el.context = {through, ref.a, ref.b};
      break;
    }
    case RoleTag::side:
      throw Error(ErrorCode::degenerate_anchor, "side is not an injectable role");
  }

  el.primitive_index = detail::add_injected_segment(scene, el.seg_a, el.seg_b, kind);
  scene.injected().push_back(el);
  return scene.injected().back();
}

}  // namespace geosynth
