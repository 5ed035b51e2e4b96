#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geosynth/error.hpp"
#include "geosynth/geometry.hpp"

namespace geosynth {

enum class PrimitiveKind { segment, circle, arc };

// Closed construction-role vocabulary.
enum class RoleTag {
  side,
  midline,
  angle_bisector,
  altitude,
  median,
  perpendicular_bisector,
  radius,
  chord,
  tangent,
  diagonal,
  parallel_auxiliary,
};

inline const char* role_name(RoleTag r) {
  switch (r) {
    case RoleTag::side: return "side";
    case RoleTag::midline: return "midline";
    case RoleTag::angle_bisector: return "angle-bisector";
    case RoleTag::altitude: return "altitude";
    case RoleTag::median: return "median";
    case RoleTag::perpendicular_bisector: return "perpendicular-bisector";
    case RoleTag::radius: return "radius";
    case RoleTag::chord: return "chord";
    case RoleTag::tangent: return "tangent";
    case RoleTag::diagonal: return "diagonal";
    case RoleTag::parallel_auxiliary: return "parallel-auxiliary";
  }
  return "?";
}

inline std::optional<RoleTag> parse_role(const std::string& s) {
  static const std::vector<RoleTag> all = {
      RoleTag::side,          RoleTag::midline,  RoleTag::angle_bisector,
      RoleTag::altitude,      RoleTag::median,   RoleTag::perpendicular_bisector,
      RoleTag::radius,        RoleTag::chord,    RoleTag::tangent,
      RoleTag::diagonal,      RoleTag::parallel_auxiliary};
  for (RoleTag r : all)
    if (s == role_name(r)) return r;
  return std::nullopt;
}

struct Primitive {
  PrimitiveKind kind{PrimitiveKind::segment};
  std::string a, b;     // segment endpoints / arc endpoints
  std::string center;   // circle / arc
  double radius{0};
  std::vector<RoleTag> roles;

  bool has_role(RoleTag r) const {
    return std::find(roles.begin(), roles.end(), r) != roles.end();
  }

  std::string id() const {
    switch (kind) {
      case PrimitiveKind::segment: return a + b;
      case PrimitiveKind::circle: return "circle:" + center;
      case PrimitiveKind::arc: return "arc:" + center + ":" + a + b;
    }
    return "?";
  }
};

// Ledger / claim element keys. Labels can be multi-character ("A1"), so keys
// are comma-joined and canonicalized.
inline std::string length_key(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return a + "," + b;
}

inline std::string angle_key(std::string p, const std::string& v, std::string q) {
  if (q < p) std::swap(p, q);
  return p + "," + v + "," + q;
}

inline std::string area_key(std::vector<std::string> cycle) {
  // Lexicographically smallest rotation over both orientations.
  auto best = cycle;
  auto consider = [&](const std::vector<std::string>& c) {
    if (c < best) best = c;
  };
  std::vector<std::string> cur = cycle;
  for (std::size_t rep = 0; rep < 2; ++rep) {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      consider(cur);
    }
    std::reverse(cur.begin(), cur.end());
  }
  std::string out;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) out += ",";
    out += best[i];
  }
  return out;
}

struct Annotation {
  std::string target_id;  // length/angle/area key or circle id
  std::string text;       // displayed value, e.g. "7.5" or "60°"
};

// One substrate instance as laid down by a generator. `verts` fixes the
// placeholder order theorems bind against (conventions documented in the
// catalog file); `cycle` is the polygon boundary when there is one.
struct SubstrateInstance {
  std::string kind;
  std::vector<std::string> verts;
  std::vector<std::string> cycle;
  std::optional<std::string> circle_center;
  double circle_radius{0};
  std::vector<std::string> external_points;
};

// One injected line element: endpoints plus the anchor context labels the
// construction was derived from (role-specific conventions).
struct InjectedElement {
  RoleTag role{RoleTag::median};
  std::string seg_a, seg_b;
  std::vector<std::string> context;
  std::size_t primitive_index{0};
  std::vector<std::string> new_vertices;
};

struct ConstructionStep {
  enum class Kind { substrate, line_element, annotation };
  Kind kind{Kind::substrate};
  std::size_t ref{0};  // index into substrates() / injected(); unused for annotation
  std::vector<std::string> theorem_ids;
};

class Scene {
 public:
  // --- vertices ---
  const std::vector<std::pair<std::string, Point>>& vertices() const { return vertices_; }

  bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

  const Point& at(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw Error(ErrorCode::degenerate_anchor, "unknown vertex " + label);
    return vertices_[it->second].second;
  }

  static std::string label_for(std::size_t i) {
    std::string s(1, static_cast<char>('A' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
  }

  std::string add_vertex(Point p) {
    std::string label = label_for(next_label_++);
    while (index_.count(label)) label = label_for(next_label_++);
    add_vertex_labeled(label, p);
    return label;
  }

  void add_vertex_labeled(const std::string& label, Point p) {
    if (!point_finite(p))
      throw Error(ErrorCode::schema_violation, "non-finite coordinates for vertex " + label);
    if (index_.count(label))
      throw Error(ErrorCode::schema_violation, "duplicate vertex label " + label);
    index_[label] = vertices_.size();
    vertices_.emplace_back(label, p);
  }

  // Existing vertex within eps of p, if any.
  std::optional<std::string> vertex_near(Point p, double eps = kIncidenceEps) const {
    for (const auto& [label, q] : vertices_)
      if (points_close(p, q, eps)) return label;
    return std::nullopt;
  }

  // --- primitives ---
  const std::vector<Primitive>& primitives() const { return primitives_; }

  std::size_t add_segment(const std::string& a, const std::string& b,
                          std::vector<RoleTag> roles) {
    if (!has_vertex(a) || !has_vertex(b))
      throw Error(ErrorCode::degenerate_anchor, "segment endpoint not registered");
    if (a == b || points_close(at(a), at(b)))
      throw Error(ErrorCode::degenerate_anchor, "segment endpoints coincide: " + a + b);
    Primitive p;
    p.kind = PrimitiveKind::segment;
    p.a = a;
    p.b = b;
    p.roles = std::move(roles);
    primitives_.push_back(std::move(p));
    return primitives_.size() - 1;
  }

  std::size_t add_circle(const std::string& center, double radius,
                         std::vector<RoleTag> roles = {}) {
    if (!has_vertex(center))
      throw Error(ErrorCode::degenerate_anchor, "circle center not registered");
    if (!(radius > 0))
      throw Error(ErrorCode::schema_violation, "circle radius must be positive");
    Primitive p;
    p.kind = PrimitiveKind::circle;
    p.center = center;
    p.radius = radius;
    p.roles = std::move(roles);
    primitives_.push_back(std::move(p));
    return primitives_.size() - 1;
  }

  bool has_segment(const std::string& a, const std::string& b) const {
    return find_segment(a, b).has_value();
  }

  std::optional<std::size_t> find_segment(const std::string& a, const std::string& b) const {
    for (std::size_t i = 0; i < primitives_.size(); ++i) {
      const Primitive& p = primitives_[i];
      if (p.kind != PrimitiveKind::segment) continue;
      if ((p.a == a && p.b == b) || (p.a == b && p.b == a)) return i;
    }
    return std::nullopt;
  }

  // --- construction record ---
  std::vector<SubstrateInstance>& substrates() { return substrates_; }
  const std::vector<SubstrateInstance>& substrates() const { return substrates_; }
  std::vector<InjectedElement>& injected() { return injected_; }
  const std::vector<InjectedElement>& injected() const { return injected_; }
  std::vector<ConstructionStep>& construction_log() { return log_; }
  const std::vector<ConstructionStep>& construction_log() const { return log_; }
  std::vector<Annotation>& annotations() { return annotations_; }
  const std::vector<Annotation>& annotations() const { return annotations_; }

  Point centroid() const {
    Point c{0, 0};
    if (vertices_.empty()) return c;
    for (const auto& [_, p] : vertices_) c = c + p;
    return {c.x / static_cast<double>(vertices_.size()),
            c.y / static_cast<double>(vertices_.size())};
  }

 private:
  std::vector<std::pair<std::string, Point>> vertices_;
  std::map<std::string, std::size_t> index_;
  std::vector<Primitive> primitives_;
  std::vector<SubstrateInstance> substrates_;
  std::vector<InjectedElement> injected_;
  std::vector<ConstructionStep> log_;
  std::vector<Annotation> annotations_;
  std::size_t next_label_{0};
};

}  // namespace geosynth
