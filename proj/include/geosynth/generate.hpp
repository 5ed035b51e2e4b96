#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geosynth/engine.hpp"

namespace geosynth {

namespace generate_detail {

// --- placement -------------------------------------------------------------

// Rigid placement of a local layout onto the canvas: 5-degree grid rotation,
// then a translation that keeps everything inside with a margin.
inline void place_layout(SubstrateLayout& layout, Rng& rng, double canvas_min,
                         double canvas_max) {
  double rot = rng.uniform_grid(0, 355, 5);
  for (auto& pt : layout.points) pt = rotated(pt, rot);
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  auto grow = [&](Point q, double r) {
    lo_x = std::min(lo_x, q.x - r);
    hi_x = std::max(hi_x, q.x + r);
    lo_y = std::min(lo_y, q.y - r);
    hi_y = std::max(hi_y, q.y + r);
  };
  for (std::size_t i = 0; i < layout.points.size(); ++i) {
    double r = (layout.center && static_cast<int>(i) == *layout.center) ? layout.radius : 0;
    grow(layout.points[i], r);
  }
  double margin = 4.0;
  double slack_x = (canvas_max - canvas_min) - 2 * margin - (hi_x - lo_x);
  double slack_y = (canvas_max - canvas_min) - 2 * margin - (hi_y - lo_y);
  double off_x = canvas_min + margin - lo_x + (slack_x > 0 ? rng.uniform(0, slack_x) : slack_x / 2);
  double off_y = canvas_min + margin - lo_y + (slack_y > 0 ? rng.uniform(0, slack_y) : slack_y / 2);
  for (auto& pt : layout.points) pt = pt + Point{off_x, off_y};
}

// Registers a placed layout into the scene: labels, side segments, circle,
// embedded line elements. Returns the instance (already appended).
inline SubstrateInstance& realize_layout(Scene& scene, const Substrate& sub,
                                         const SubstrateLayout& layout,
                                         const std::vector<std::string>& preset_labels = {}) {
  std::vector<std::string> labels(layout.points.size());
  for (std::size_t i = 0; i < layout.points.size(); ++i) {
    if (i < preset_labels.size() && !preset_labels[i].empty()) {
      labels[i] = preset_labels[i];
    } else if (auto existing = scene.vertex_near(layout.points[i])) {
      labels[i] = *existing;
    } else {
      labels[i] = scene.add_vertex(layout.points[i]);
    }
  }
  SubstrateInstance inst;
  inst.kind = sub.kind;
  for (int vi : layout.verts) inst.verts.push_back(labels[static_cast<std::size_t>(vi)]);
  for (int ci : layout.cycle) inst.cycle.push_back(labels[static_cast<std::size_t>(ci)]);
  if (layout.center) {
    inst.circle_center = labels[static_cast<std::size_t>(*layout.center)];
    inst.circle_radius = layout.radius;
    scene.add_circle(*inst.circle_center, layout.radius);
  }
  for (int ei : layout.externals)
    inst.external_points.push_back(labels[static_cast<std::size_t>(ei)]);

  std::size_t n = inst.cycle.size();
  for (std::size_t i = 0; n >= 3 && i < n; ++i) {
    const std::string& a = inst.cycle[i];
    const std::string& b = inst.cycle[(i + 1) % n];
    if (scene.has_segment(a, b)) continue;
    std::vector<RoleTag> roles = {RoleTag::side};
    if (layout.cycle_sides_are_chords) roles.push_back(RoleTag::chord);
    scene.add_segment(a, b, roles);
  }
  // Embedded line elements (radii, tangents, chords) are recorded as injected
  // elements so role-based theorem bindings can see them.
  for (const auto& [ia, ib, role] : layout.extra_segments) {
    const std::string& a = labels[static_cast<std::size_t>(ia)];
    const std::string& b = labels[static_cast<std::size_t>(ib)];
    if (scene.has_segment(a, b)) continue;
    std::size_t prim = scene.add_segment(a, b, {role});
    InjectedElement el;
    el.role = role;
    el.seg_a = a;
    el.seg_b = b;
    el.primitive_index = prim;
    if (role == RoleTag::tangent && inst.circle_center)
      el.context = {*inst.circle_center, a};
    else if (inst.circle_center)
      el.context = {*inst.circle_center};
    scene.injected().push_back(el);
  }
  scene.substrates().push_back(std::move(inst));
  return scene.substrates().back();
}

// --- injection candidates ----------------------------------------------------

struct InjectionCandidate {
  RoleTag role{};
  Anchor anchor;
};

inline double angle_around(Point center, Point p) {
  return deg_from_rad(std::atan2(p.y - center.y, p.x - center.x));
}

inline std::vector<InjectionCandidate> enumerate_injections(const Scene& scene, Rng& rng) {
  std::vector<InjectionCandidate> out;
  for (const auto& inst : scene.substrates()) {
    std::size_t n = inst.cycle.size();
    if (n == 3) {
      for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::string> tri = {inst.cycle[i], inst.cycle[(i + 1) % 3],
                                        inst.cycle[(i + 2) % 3]};
        out.push_back({RoleTag::median, {tri, {}}});
        out.push_back({RoleTag::altitude, {tri, {}}});
        out.push_back({RoleTag::angle_bisector, {tri, {}}});
        out.push_back({RoleTag::midline, {tri, {}}});
      }
    }
    if (n >= 4) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
          if (i == 0 && j == n - 1) continue;
          out.push_back({RoleTag::diagonal, {{inst.cycle[i], inst.cycle[j]}, {}}});
        }
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> corner = {inst.cycle[i], inst.cycle[(i + n - 1) % n],
                                           inst.cycle[(i + 1) % n]};
        out.push_back({RoleTag::angle_bisector, {corner, {}}});
      }
      // Auxiliary parallels through a vertex, parallel to a non-incident side.
      for (std::size_t vi = 0; vi < n; ++vi) {
        for (std::size_t si = 0; si < n; ++si) {
          const std::string& a = inst.cycle[si];
          const std::string& b = inst.cycle[(si + 1) % n];
          const std::string& v = inst.cycle[vi];
          if (v == a || v == b) continue;
          if (auto seg = scene.find_segment(a, b)) {
            Anchor anchor;
            anchor.verts = {v};
            anchor.primitive = seg;
            out.push_back({RoleTag::parallel_auxiliary, anchor});
          }
        }
      }
    }
    if (n == 4 &&
        (substrate_is_a(inst.kind, "trapezoid") || substrate_is_a(inst.kind, "parallelogram"))) {
      out.push_back({RoleTag::midline, {inst.cycle, {}}});
    }
    // Perpendicular bisectors of the substrate's sides.
    for (std::size_t i = 0; n >= 3 && i < n; ++i) {
      if (auto seg = scene.find_segment(inst.cycle[i], inst.cycle[(i + 1) % n])) {
        Anchor anchor;
        anchor.primitive = seg;
        out.push_back({RoleTag::perpendicular_bisector, anchor});
      }
    }
    if (inst.circle_center) {
      std::optional<std::size_t> circle;
      for (std::size_t pi = 0; pi < scene.primitives().size(); ++pi) {
        const Primitive& p = scene.primitives()[pi];
        if (p.kind == PrimitiveKind::circle && p.center == *inst.circle_center) circle = pi;
      }
      if (circle) {
        Point o = scene.at(*inst.circle_center);
        double r = inst.circle_radius;
        // Existing on-circle vertices make natural anchors for new chords.
        std::vector<double> on_circle_angles;
        for (const auto& [label, pos] : scene.vertices())
          if (std::abs(distance(pos, o) - r) < kIncidenceEps)
            on_circle_angles.push_back(angle_around(o, pos));

        Anchor radius_anchor;
        radius_anchor.primitive = circle;
        radius_anchor.param1 = rng.uniform_grid(0, 355, 5);
        out.push_back({RoleTag::radius, radius_anchor});

        Anchor chord_anchor;
        chord_anchor.primitive = circle;
        if (!on_circle_angles.empty() && rng.chance(0.5))
          chord_anchor.param1 = rng.pick(on_circle_angles);
        else
          chord_anchor.param1 = rng.uniform_grid(0, 355, 5);
        chord_anchor.param2 = chord_anchor.param1 + rng.uniform_grid(45, 180, 5);
        out.push_back({RoleTag::chord, chord_anchor});

        for (const auto& [label, pos] : scene.vertices()) {
          if (label == *inst.circle_center) continue;
          if (distance(pos, o) > r + 1.0) {
            Anchor t;
            t.primitive = circle;
            t.verts = {label};
            t.param1 = rng.uniform();
            out.push_back({RoleTag::tangent, t});
          }
        }
      }
    }
  }
  return out;
}

// --- theorem-guided selection -------------------------------------------------

inline std::vector<const Theorem*> line_theorems_for_role(
    const std::vector<const Theorem*>& sampled, RoleTag role) {
  std::vector<const Theorem*> out;
  for (const auto* t : sampled)
    if (t->category == TheoremCategory::line_element_related && t->role_hint &&
        *t->role_hint == role)
      out.push_back(t);
  return out;
}

}  // namespace generate_detail

// ---------------------------------------------------------------------------
// Figure generation (stage 1): sample theorems, lay substrates, inject line
// elements, annotate, compute the ledger, run the fidelity gate. A failed
// fidelity check resamples the whole figure; the retry budget bounds that.
// ---------------------------------------------------------------------------

inline FigureBundle generate_figure(const GenerationConfig& config, const Catalog& catalog,
                                    std::uint64_t figure_index) {
  using namespace generate_detail;
  Rng rng = Rng::for_stream(config.seed, figure_index);

  // Distribution entries: each weighted choice is either a pinned kind or a
  // class with its member kinds. The choice is drawn once per figure, before
  // the retry loop, so fidelity resampling cannot skew the class frequencies.
  std::map<std::string, double> dist = config.substrate_distribution;
  if (dist.empty()) dist = GenerationConfig::distribution_preset("group1");
  std::map<std::string, std::vector<const Substrate*>> by_class;
  for (const auto& s : catalog.substrates) by_class[s.shape_class].push_back(&s);
  std::vector<std::vector<const Substrate*>> choices;  // kinds eligible per choice
  std::vector<double> choice_weights;
  for (const auto& [key, weight] : dist) {
    if (weight < 0)
      throw Error(ErrorCode::invalid_config, "negative distribution weight for " + key);
    if (weight == 0) continue;
    std::string cls = key == "quad" ? "quadrilateral" : key;
    auto it = by_class.find(cls);
    if (it != by_class.end()) {
      choices.push_back(it->second);
      choice_weights.push_back(weight);
      continue;
    }
    const Substrate* s = catalog.substrate_by_kind(key);
    if (!s)
      throw Error(ErrorCode::catalog_mismatch,
                  "distribution names '" + key + "' but the catalog has no such class or kind");
    choices.push_back({s});
    choice_weights.push_back(weight);
  }
  if (choices.empty())
    throw Error(ErrorCode::invalid_config, "substrate distribution is empty");
  const auto& figure_kinds = choices[rng.pick_weighted(choice_weights)];
  std::vector<const Substrate*> all_kinds;
  for (const auto& group : choices)
    for (const auto* s : group) all_kinds.push_back(s);

  std::string last_reject;
  for (int attempt = 0; attempt < std::max(1, config.retry_budget); ++attempt) {
    int per_cat = config.theorems_per_category ? config.theorems_per_category
                                               : rng.uniform_int(1, 3);
    auto sampled = sample_theorems(catalog, rng, per_cat);
    int k_rounds = config.k ? config.k : rng.uniform_int(1, 3);
    int n_rounds = std::max(1, config.n);
    if (!config.allow_multi_substrate) n_rounds = 1;

    try {
      Scene scene;
      std::vector<int> template_choice;
      for (int i = 0; i < n_rounds; ++i) {
        const Substrate* sub = nullptr;
        if (i == 0) {
          // Uniform within the figure's pinned choice, preferring kinds
          // associated with a sampled substrate theorem when any match.
          sub = rng.pick(figure_kinds);
          std::vector<const Substrate*> preferred;
          for (const auto* cand : figure_kinds) {
            bool associated = false;
            for (const auto* th : sampled)
              if (th->category == TheoremCategory::substrate_related &&
                  std::find(cand->associated_theorem_ids.begin(),
                            cand->associated_theorem_ids.end(),
                            th->id) != cand->associated_theorem_ids.end())
                associated = true;
            if (associated) preferred.push_back(cand);
          }
          if (!preferred.empty() && rng.chance(0.5)) sub = rng.pick(preferred);
        } else {
          // Merged substrates: polygons only, glued on an existing side.
          std::vector<const Substrate*> polys;
          for (const auto* cand : all_kinds)
            if (cand->shape_class != "circle") polys.push_back(cand);
          if (polys.empty()) break;
          sub = rng.pick(polys);
        }

        SubstrateLayout layout = generate_substrate_layout(*sub, rng);
        if (i == 0) {
          place_layout(layout, rng, config.canvas_min, config.canvas_max);
          realize_layout(scene, *sub, layout);
        } else {
          if (layout.cycle.size() < 3 || layout.center) continue;
          // Glue: map the layout's first cycle edge onto a host side.
          std::vector<std::size_t> sides;
          for (std::size_t pi = 0; pi < scene.primitives().size(); ++pi)
            if (scene.primitives()[pi].kind == PrimitiveKind::segment &&
                scene.primitives()[pi].has_role(RoleTag::side))
              sides.push_back(pi);
          if (sides.empty()) continue;
          const Primitive& host = scene.primitives()[rng.pick(sides)];
          Point ha = scene.at(host.a);
          Point hb = scene.at(host.b);
          Point la = layout.points[static_cast<std::size_t>(layout.cycle[0])];
          Point lb = layout.points[static_cast<std::size_t>(layout.cycle[1])];
          double scale = distance(ha, hb) / distance(la, lb);
          double rot = deg_from_rad(std::atan2(ha.y - hb.y, ha.x - hb.x) -
                                    std::atan2(lb.y - la.y, lb.x - la.x));
          for (auto& pt : layout.points) pt = rotated(scale * (pt - la), rot) + hb;
          // Keep the new polygon on the far side of the host edge.
          Point centroid{0, 0};
          for (const auto& pt : layout.points) centroid = centroid + pt;
          centroid = (1.0 / static_cast<double>(layout.points.size())) * centroid;
          Point scene_c = scene.centroid();
          if (line_offset(hb, ha, centroid) * line_offset(hb, ha, scene_c) > 0) {
            for (auto& pt : layout.points) {
              auto proj = project_onto_line(pt, hb, ha);
              pt = proj.foot + (proj.foot - pt);
            }
          }
          std::vector<std::string> preset(layout.points.size());
          preset[static_cast<std::size_t>(layout.cycle[0])] = host.b;
          preset[static_cast<std::size_t>(layout.cycle[1])] = host.a;
          realize_layout(scene, *sub, layout, preset);
        }
        template_choice.push_back(rng.uniform_int(
            0, static_cast<int>(sub->description_templates.size()) - 1));
        ConstructionStep step;
        step.kind = ConstructionStep::Kind::substrate;
        step.ref = scene.substrates().size() - 1;
        for (const auto* th : sampled)
          if (th->category == TheoremCategory::substrate_related &&
              std::find(sub->associated_theorem_ids.begin(),
                        sub->associated_theorem_ids.end(),
                        th->id) != sub->associated_theorem_ids.end())
            step.theorem_ids.push_back(th->id);
        if (step.theorem_ids.empty() && !sub->associated_theorem_ids.empty())
          step.theorem_ids.push_back(sub->associated_theorem_ids.front());
        scene.construction_log().push_back(step);
      }

      for (int j = 0; j < k_rounds; ++j) {
        auto candidates = enumerate_injections(scene, rng);
        // Restrict to roles hinted by the sampled line theorems when possible.
        std::set<RoleTag> hinted;
        for (const auto* th : sampled)
          if (th->category == TheoremCategory::line_element_related && th->role_hint)
            hinted.insert(*th->role_hint);
        std::vector<InjectionCandidate> filtered;
        for (const auto& c : candidates)
          if (hinted.count(c.role)) filtered.push_back(c);
        auto& pool = filtered.empty() ? candidates : filtered;
        bool built = false;
        for (int pick_try = 0; pick_try < 8 && !pool.empty(); ++pick_try) {
          std::size_t ci = static_cast<std::size_t>(rng.next_u64() % pool.size());
          try {
            const InjectionCandidate& cand = pool[ci];
            construct_special_line(scene, cand.role, cand.anchor);
            ConstructionStep step;
            step.kind = ConstructionStep::Kind::line_element;
            step.ref = scene.injected().size() - 1;
            for (const auto* th : line_theorems_for_role(sampled, cand.role))
              step.theorem_ids.push_back(th->id);
            if (step.theorem_ids.empty())
              if (const Theorem* dt = catalog.default_theorem_for_role(cand.role))
                step.theorem_ids.push_back(dt->id);
            scene.construction_log().push_back(step);
            built = true;
            break;
          } catch (const Error&) {
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(ci));
          }
        }
        if (!built) throw Error(ErrorCode::construction_impossible, "no legal injection");
      }

      PropertyLedger ledger = compute_ledger(scene);
      assign_values(scene, ledger);
      {
        ConstructionStep step;
        step.kind = ConstructionStep::Kind::annotation;
        std::set<std::string> used;
        for (const auto& s : scene.construction_log())
          for (const auto& id : s.theorem_ids) used.insert(id);
        for (const auto* th : sampled)
          if (!used.count(th->id)) step.theorem_ids.push_back(th->id);
        scene.construction_log().push_back(step);
      }

      if (auto rejection = fidelity_check(scene, config.fidelity)) {
        last_reject = rejection->reason + " at " + rejection->element;
        continue;
      }

      // Description patches, one per construction step.
      FigureBundle bundle;
      bundle.figure_index = figure_index;
      Description desc;
      std::size_t substrate_i = 0;
      for (const auto& step : scene.construction_log()) {
        DescriptionPatch patch;
        if (step.kind == ConstructionStep::Kind::substrate) {
          const auto& inst = scene.substrates()[step.ref];
          const Substrate* sub = catalog.substrate_by_kind(inst.kind);
          const std::string& tmpl = sub->description_templates[static_cast<std::size_t>(
              template_choice[substrate_i] %
              static_cast<int>(sub->description_templates.size()))];
          patch = engine_detail::expand_template(tmpl, inst, ledger);
          ++substrate_i;
        } else if (step.kind == ConstructionStep::Kind::line_element) {
          patch = engine_detail::injected_patch(scene.injected()[step.ref], ledger);
        } else {
          patch = engine_detail::angle_summary_patch(scene, ledger);
        }
        patch.theorem_ids = step.theorem_ids;
        desc.patches.push_back(std::move(patch));
      }

      bundle.scene = std::move(scene);
      bundle.description = std::move(desc);
      bundle.ledger = std::move(ledger);
      for (const auto* th : sampled) bundle.theorem_ids.push_back(th->id);
      for (const auto& inst : bundle.scene.substrates())
        bundle.substrate_kinds.push_back(inst.kind);
      bundle.pattern_key = pattern_key(bundle.scene);
      return bundle;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::catalog_mismatch || e.code() == ErrorCode::invalid_config)
        throw;
      last_reject = e.what();
      continue;
    }
  }
  throw Error(ErrorCode::retry_exhausted,
              "figure " + std::to_string(figure_index) + " failed fidelity after " +
                  std::to_string(config.retry_budget) + " attempts (last: " + last_reject +
                  ")");
}

}  // namespace geosynth
