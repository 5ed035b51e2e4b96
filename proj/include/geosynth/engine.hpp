#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geosynth/catalog.hpp"
#include "geosynth/construct.hpp"
#include "geosynth/generators.hpp"
#include "geosynth/relations.hpp"
#include "geosynth/rng.hpp"

namespace geosynth {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct FidelityConfig {
  double max_min_distance_ratio{20.0};
  double min_angle_deg{15.0};
  double max_angle_deg{160.0};
};

struct GenerationConfig {
  int n{1};                        // substrate rounds
  int k{0};                        // line rounds; 0 = sample 1..3 per figure
  int theorems_per_category{0};    // 0 = sample 1..3 per figure
  std::map<std::string, double> substrate_distribution;  // class or kind -> weight
  FidelityConfig fidelity;
  std::uint64_t seed{0};
  double canvas_min{0};
  double canvas_max{100};
  int retry_budget{64};
  bool allow_multi_substrate{false};

  static std::map<std::string, double> distribution_preset(const std::string& name) {
    if (name == "group1")
      return {{"triangle", 29}, {"quadrilateral", 46}, {"circle", 17},
              {"pentagon", 5}, {"hexagon", 3}};
    if (name == "group2")
      return {{"triangle", 32}, {"quadrilateral", 40}, {"circle", 14},
              {"pentagon", 8}, {"hexagon", 6}};
    if (name == "group3")
      return {{"triangle", 25}, {"quadrilateral", 33}, {"circle", 21},
              {"pentagon", 12}, {"hexagon", 8}};
    throw Error(ErrorCode::invalid_config, "unknown distribution preset '" + name + "'");
  }

  ordered_json to_json() const {
    ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["theorems_per_category"] = theorems_per_category;
    ordered_json dist = ordered_json::object();
    for (const auto& [k2, v] : substrate_distribution) dist[k2] = v;
    j["substrate_distribution"] = dist;
    j["fidelity"] = {{"max_min_distance_ratio", fidelity.max_min_distance_ratio},
                     {"min_angle_deg", fidelity.min_angle_deg},
                     {"max_angle_deg", fidelity.max_angle_deg}};
    j["seed"] = seed;
    j["canvas"] = {canvas_min, canvas_max};
    j["retry_budget"] = retry_budget;
    j["allow_multi_substrate"] = allow_multi_substrate;
    return j;
  }
};

// ---------------------------------------------------------------------------
// Display rounding: lengths to one decimal (trailing .0 dropped), angles to
// the nearest degree. The ledger always keeps exact values.
// ---------------------------------------------------------------------------

inline std::string format_length(double v) {
  double r = std::floor(v * 10.0 + 0.5) / 10.0;
  char buf[32];
  if (std::abs(r - std::floor(r)) < 1e-12)
    std::snprintf(buf, sizeof(buf), "%.0f", r);
  else
    std::snprintf(buf, sizeof(buf), "%.1f", r);
  return buf;
}

inline std::string format_angle(double deg) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%d°", static_cast<int>(std::floor(deg + 0.5)));
  return buf;
}

// ---------------------------------------------------------------------------
// Ledger, description, bundle
// ---------------------------------------------------------------------------

struct PropertyLedger {
  std::map<std::string, double> lengths;  // "A,B" -> exact; "circle:O" -> radius
  std::map<std::string, double> angles;   // "P,V,Q" -> exact degrees
  std::map<std::string, double> areas;    // canonical cycle -> exact
  std::vector<Relation> relations;
  std::map<std::string, std::string> displayed;  // annotated element -> display string

  std::optional<double> lookup_length(const std::string& a, const std::string& b) const {
    auto it = lengths.find(length_key(a, b));
    if (it == lengths.end()) return std::nullopt;
    return it->second;
  }
  std::optional<double> lookup_angle(const std::string& x, const std::string& v,
                                     const std::string& y) const {
    auto it = angles.find(angle_key(x, v, y));
    if (it == angles.end()) return std::nullopt;
    return it->second;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["lengths"] = ordered_json::object();
    for (const auto& [k, v] : lengths) j["lengths"][k] = v;
    j["angles"] = ordered_json::object();
    for (const auto& [k, v] : angles) j["angles"][k] = v;
    j["areas"] = ordered_json::object();
    for (const auto& [k, v] : areas) j["areas"][k] = v;
    ordered_json rels = ordered_json::array();
    for (const auto& r : relations) {
      ordered_json rj;
      rj["kind"] = relation_name(r.kind);
      rj["elements"] = r.elements;
      rj["residual"] = r.residual;
      rels.push_back(rj);
    }
    j["relations"] = rels;
    j["displayed"] = ordered_json::object();
    for (const auto& [k, v] : displayed) j["displayed"][k] = v;
    return j;
  }
};

struct DescriptionPatch {
  std::string text;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> theorem_ids;
  // Every numeric value mentioned in the text, keyed by the ledger element it
  // displays. Kept so the ledger/description consistency invariant is
  // mechanically checkable.
  std::vector<std::pair<std::string, std::string>> mentions;
};

struct Description {
  std::vector<DescriptionPatch> patches;
  std::string joined() const {
    std::string out;
    for (const auto& p : patches) {
      if (!out.empty()) out += " ";
      out += p.text;
    }
    return out;
  }
};

struct FigureBundle {
  std::uint64_t figure_index{0};
  Scene scene;
  Description description;
  PropertyLedger ledger;
  std::vector<std::string> theorem_ids;     // sampled guiding set
  std::vector<std::string> substrate_kinds;
  std::string pattern_key;
};

struct FidelityRejection {
  std::string reason;   // "extreme-angle" | "distance-ratio"
  std::string element;  // offending element description
  double measured{0};
};

// ---------------------------------------------------------------------------
// Fidelity check
// ---------------------------------------------------------------------------

inline std::optional<FidelityRejection> fidelity_check(const Scene& scene,
                                                       const FidelityConfig& cfg) {
  // Corner angles between segment pairs at shared vertices.
  for (const auto& ja : junction_angles(scene)) {
    if (ja.degrees < cfg.min_angle_deg || ja.degrees > cfg.max_angle_deg)
      return FidelityRejection{"extreme-angle",
                               "∠" + ja.p + ja.vertex + ja.q, ja.degrees};
  }
  // Crossing angle where an injected endpoint lands inside a host segment.
  for (const auto& el : scene.injected()) {
    const Primitive& seg = scene.primitives()[el.primitive_index];
    Point a = scene.at(seg.a);
    Point b = scene.at(seg.b);
    for (const std::string& end : {seg.a, seg.b}) {
      Point pe = scene.at(end);
      for (const Primitive& host : scene.primitives()) {
        if (host.kind != PrimitiveKind::segment) continue;
        if (host.a == end || host.b == end) continue;
        Point ha = scene.at(host.a);
        Point hb = scene.at(host.b);
        if (!point_on_segment(ha, hb, pe)) continue;
        double theta = deg_from_rad(std::acos(std::clamp(
            std::abs(dot(normalized(b - a), normalized(hb - ha))), 0.0, 1.0)));
        double sharp = std::min(theta, 180.0 - theta);
        if (sharp > 1e-9 && sharp < cfg.min_angle_deg)
          return FidelityRejection{"extreme-angle",
                                   seg.id() + " meets " + host.id(), sharp};
      }
    }
  }
  // Vertex spacing ratio.
  const auto& verts = scene.vertices();
  double dmin = 1e300, dmax = 0;
  std::string emin, emax;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      double d = distance(verts[i].second, verts[j].second);
      if (d < dmin) {
        dmin = d;
        emin = verts[i].first + verts[j].first;
      }
      if (d > dmax) {
        dmax = d;
        emax = verts[i].first + verts[j].first;
      }
    }
  if (verts.size() >= 2 && dmax / dmin > cfg.max_min_distance_ratio)
    return FidelityRejection{"distance-ratio", emax + " vs " + emin, dmax / dmin};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ledger computation and value assignment
// ---------------------------------------------------------------------------

inline PropertyLedger compute_ledger(const Scene& scene) {
  PropertyLedger ledger;
  for (const Primitive& p : scene.primitives()) {
    if (p.kind == PrimitiveKind::segment)
      ledger.lengths[length_key(p.a, p.b)] = distance(scene.at(p.a), scene.at(p.b));
    else if (p.kind == PrimitiveKind::circle)
      ledger.lengths[p.id()] = p.radius;
  }
  for (const auto& ja : junction_angles(scene))
    ledger.angles[angle_key(ja.p, ja.vertex, ja.q)] = ja.degrees;
  for (const auto& inst : scene.substrates()) {
    if (inst.cycle.size() < 3) continue;
    std::vector<Point> pts;
    for (const auto& l : inst.cycle) pts.push_back(scene.at(l));
    ledger.areas[area_key(inst.cycle)] = std::abs(polygon_signed_area(pts));
  }
  ledger.relations = relation_tests(scene);
  return ledger;
}

// Chooses the displayed annotations: all segment lengths, circle radii, and
// the substrate corner angles. Returns the annotation set and fills
// ledger.displayed.
inline std::vector<Annotation> assign_values(Scene& scene, PropertyLedger& ledger) {
  std::vector<Annotation> out;
  auto annotate = [&](const std::string& key, const std::string& text) {
    if (ledger.displayed.count(key)) return;
    ledger.displayed[key] = text;
    out.push_back({key, text});
  };
  for (const Primitive& p : scene.primitives()) {
    if (p.kind == PrimitiveKind::segment) {
      std::string key = length_key(p.a, p.b);
      annotate(key, format_length(ledger.lengths.at(key)));
    } else if (p.kind == PrimitiveKind::circle) {
      annotate(p.id(), format_length(p.radius));
    }
  }
  for (const auto& inst : scene.substrates()) {
    std::size_t n = inst.cycle.size();
    if (n >= 3) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& prev = inst.cycle[(i + n - 1) % n];
        const std::string& v = inst.cycle[i];
        const std::string& next = inst.cycle[(i + 1) % n];
        std::string key = angle_key(prev, v, next);
        auto it = ledger.angles.find(key);
        if (it != ledger.angles.end()) annotate(key, format_angle(it->second));
      }
    } else if (inst.kind == "circle-with-central-angle" && inst.verts.size() == 3) {
      std::string key = angle_key(inst.verts[1], inst.verts[0], inst.verts[2]);
      auto it = ledger.angles.find(key);
      if (it != ledger.angles.end()) annotate(key, format_angle(it->second));
    }
  }
  scene.annotations() = out;
  return out;
}

// ---------------------------------------------------------------------------
// Description assembly
// ---------------------------------------------------------------------------

namespace engine_detail {

// Expands a catalog description template against a substrate instance and the
// ledger's displayed values. Placeholders: {V1}, {len:V1,V2}, {ang:V1,V2,V3},
// {rad}.
inline DescriptionPatch expand_template(const std::string& tmpl,
                                        const SubstrateInstance& inst,
                                        const PropertyLedger& ledger) {
  DescriptionPatch patch;
  auto vert = [&](const std::string& ph) -> std::string {
    if (ph.size() >= 2 && ph[0] == 'V') {
      std::size_t idx = static_cast<std::size_t>(std::stoul(ph.substr(1))) - 1;
      if (idx < inst.verts.size()) return inst.verts[idx];
    }
    throw Error(ErrorCode::schema_violation, "bad template placeholder {" + ph + "}");
  };
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    auto close = tmpl.find('}', i);
    if (close == std::string::npos)
      throw Error(ErrorCode::schema_violation, "unterminated placeholder in template");
    std::string ph = tmpl.substr(i + 1, close - i - 1);
    i = close + 1;
    if (ph.rfind("len:", 0) == 0) {
      auto comma = ph.find(',', 4);
      std::string a = vert(ph.substr(4, comma - 4));
      std::string b = vert(ph.substr(comma + 1));
      std::string key = length_key(a, b);
      const std::string& disp = ledger.displayed.at(key);
      patch.mentions.emplace_back(key, disp);
      out += disp;
    } else if (ph.rfind("ang:", 0) == 0) {
      auto c1 = ph.find(',', 4);
      auto c2 = ph.find(',', c1 + 1);
      std::string a = vert(ph.substr(4, c1 - 4));
      std::string v = vert(ph.substr(c1 + 1, c2 - c1 - 1));
      std::string b = vert(ph.substr(c2 + 1));
      std::string key = angle_key(a, v, b);
      const std::string& disp = ledger.displayed.at(key);
      patch.mentions.emplace_back(key, disp);
      out += disp;
    } else if (ph == "rad") {
      if (!inst.circle_center)
        throw Error(ErrorCode::schema_violation, "{rad} used for a substrate with no circle");
      std::string key = "circle:" + *inst.circle_center;
      const std::string& disp = ledger.displayed.at(key);
      patch.mentions.emplace_back(key, disp);
      out += disp;
    } else {
      out += vert(ph);
    }
  }
  patch.text = out;
  patch.vertex_labels = inst.verts;
  return patch;
}

inline DescriptionPatch injected_patch(const InjectedElement& el,
                                       const PropertyLedger& ledger) {
  DescriptionPatch patch;
  const std::string& e1 = el.seg_a;
  const std::string& e2 = el.seg_b;
  std::string key = length_key(e1, e2);
  std::string len = ledger.displayed.at(key);
  const auto& ctx = el.context;
  std::string text;
  switch (el.role) {
    case RoleTag::median:
      text = "Median " + e1 + e2 + " is drawn from " + e1 + " to the midpoint " + e2 +
             " of " + ctx[1] + ctx[2] + "; " + e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::altitude:
      text = "Altitude " + e1 + e2 + " is drawn from " + e1 + " perpendicular to " +
             ctx[1] + ctx[2] + "; " + e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::angle_bisector:
      text = "Segment " + e1 + e2 + " bisects ∠" + ctx[1] + e1 + ctx[2] + ", meeting the"
             " figure at " + e2 + "; " + e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::midline:
      if (ctx.size() == 4)
        text = "Midsegment " + e1 + e2 + " joins the midpoints of the legs " + ctx[0] +
               ctx[3] + " and " + ctx[1] + ctx[2] + "; " + e1 + e2 + " = " + len + ".";
      else
        text = "Midline " + e1 + e2 + " joins the midpoint " + e1 + " of " + ctx[0] +
               ctx[1] + " and the midpoint " + e2 + " of " + ctx[0] + ctx[2] + "; " +
               e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::perpendicular_bisector:
      text = "Segment " + e1 + e2 + " is the perpendicular bisector of " + ctx[0] +
             ctx[1] + ", drawn from its midpoint " + e1 + "; " + e1 + e2 + " = " + len +
             ".";
      break;
    case RoleTag::radius:
      text = "Radius " + e1 + e2 + " joins the center " + e1 + " to " + e2 +
             " on the circle; " + e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::chord:
      text = "Chord " + e1 + e2 + " joins points " + e1 + " and " + e2 +
             " on the circle; " + e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::tangent:
      text = "From " + e1 + ", tangent " + e1 + e2 + " touches the circle at " + e2 +
             "; " + e1 + e2 + " = " + len + ".";
      break;
    case RoleTag::diagonal:
      text = "Diagonal " + e1 + e2 + " connects " + e1 + " and " + e2 + "; " + e1 + e2 +
             " = " + len + ".";
      break;
    case RoleTag::parallel_auxiliary:
      text = "Through " + e1 + ", segment " + e1 + e2 + " is drawn parallel to " +
             ctx[1] + ctx[2] + ", meeting the figure at " + e2 + "; " + e1 + e2 + " = " +
             len + ".";
      break;
    case RoleTag::side:
      break;
  }
  patch.text = text;
  patch.mentions.emplace_back(key, len);
  patch.vertex_labels = {e1, e2};
  return patch;
}

inline DescriptionPatch angle_summary_patch(const Scene& scene,
                                            const PropertyLedger& ledger) {
  DescriptionPatch patch;
  std::string text = "In the completed figure";
  bool first = true;
  for (const auto& ann : scene.annotations()) {
    // Angle keys have two commas.
    if (std::count(ann.target_id.begin(), ann.target_id.end(), ',') != 2) continue;
    auto c1 = ann.target_id.find(',');
    auto c2 = ann.target_id.find(',', c1 + 1);
    std::string a = ann.target_id.substr(0, c1);
    std::string v = ann.target_id.substr(c1 + 1, c2 - c1 - 1);
    std::string b = ann.target_id.substr(c2 + 1);
    text += first ? ", " : ", ";
    first = false;
    text += "∠" + a + v + b + " = " + ann.text;
    patch.mentions.emplace_back(ann.target_id, ann.text);
    for (const auto& l : {a, v, b})
      if (std::find(patch.vertex_labels.begin(), patch.vertex_labels.end(), l) ==
          patch.vertex_labels.end())
        patch.vertex_labels.push_back(l);
  }
  if (first) text += " no angle is marked";
  text += ".";
  patch.text = text;
  return patch;
}

}  // namespace engine_detail

// ---------------------------------------------------------------------------
// Pattern identity: substrate kind multiset + injected role multiset.
// ---------------------------------------------------------------------------

inline std::string pattern_key(const Scene& scene) {
  std::vector<std::string> kinds;
  for (const auto& s : scene.substrates()) kinds.push_back(s.kind);
  std::sort(kinds.begin(), kinds.end());
  std::vector<std::string> roles;
  for (const auto& e : scene.injected()) roles.push_back(role_name(e.role));
  std::sort(roles.begin(), roles.end());
  std::string out;
  for (std::size_t i = 0; i < kinds.size(); ++i) out += (i ? "+" : "") + kinds[i];
  out += "|";
  for (std::size_t i = 0; i < roles.size(); ++i) out += (i ? "+" : "") + roles[i];
  return out;
}

}  // namespace geosynth
