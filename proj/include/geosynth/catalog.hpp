#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geosynth/facts.hpp"
#include "geosynth/relations.hpp"
#include "geosynth/rng.hpp"
#include "geosynth/scene.hpp"

namespace geosynth {

using ordered_json = nlohmann::ordered_json;

enum class TheoremCategory { substrate_related, line_element_related };

inline const char* category_name(TheoremCategory c) {
  return c == TheoremCategory::substrate_related ? "substrate-related"
                                                 : "line-element-related";
}

// Closed scene-predicate vocabulary (schema-versioned; adding a predicate is
// a version bump).
struct Predicate {
  enum class Kind { has_substrate, has_role, relation, angle_equals };
  Kind kind{};
  std::string arg;
  double value{0};
};

inline const char* predicate_name(Predicate::Kind k) {
  switch (k) {
    case Predicate::Kind::has_substrate: return "has-substrate";
    case Predicate::Kind::has_role: return "has-role";
    case Predicate::Kind::relation: return "relation";
    case Predicate::Kind::angle_equals: return "angle-equals";
  }
  return "?";
}

struct FactTemplate {
  FactKind kind{};
  std::vector<std::vector<std::string>> groups;  // placeholder expressions
  double value{0};
};

struct Theorem {
  std::string id;
  TheoremCategory category{};
  std::string family;
  std::string statement;
  std::vector<Predicate> preconditions;
  // Join constraints between binding placeholders: plain "A1"=="V1" label
  // equality, or "pair:E"=="V1,V3" matching the E segment's endpoints as an
  // unordered pair.
  std::vector<std::pair<std::string, std::string>> binds;
  std::vector<FactTemplate> hypotheses;   // numeric guards a binding must satisfy
  std::vector<FactTemplate> conclusions;  // asserted facts (may be empty)
  std::optional<RoleTag> role_hint;       // line-element theorems: which role realizes it
};

struct GeneratorSpec {
  std::string recipe;
  ordered_json params;
};

struct Substrate {
  std::string id;
  std::string kind;
  std::string shape_class;  // triangle | quadrilateral | circle | pentagon | hexagon
  GeneratorSpec generator;
  std::vector<std::string> description_templates;
  std::vector<std::string> associated_theorem_ids;
};

// Shape-kind taxonomy: is_a(kind, class) for has-substrate matching.
inline bool substrate_is_a(const std::string& kind, const std::string& cls) {
  if (kind == cls) return true;
  static const std::map<std::string, std::vector<std::string>> parents = {
      {"scalene-triangle", {"triangle"}},
      {"isosceles-triangle", {"triangle"}},
      {"equilateral-triangle", {"triangle", "isosceles-triangle"}},
      {"right-triangle", {"triangle"}},
      {"right-isosceles-triangle", {"triangle", "right-triangle", "isosceles-triangle"}},
      {"quadrilateral", {}},
      {"parallelogram", {"quadrilateral"}},
      {"rectangle", {"quadrilateral", "parallelogram"}},
      {"rhombus", {"quadrilateral", "parallelogram"}},
      {"square", {"quadrilateral", "parallelogram", "rectangle", "rhombus"}},
      {"trapezoid", {"quadrilateral"}},
      {"isosceles-trapezoid", {"quadrilateral", "trapezoid"}},
      {"circle", {}},
      {"circle-with-central-angle", {"circle"}},
      {"circle-with-inscribed-triangle", {"circle"}},
      {"circle-with-tangent", {"circle"}},
      {"cyclic-quadrilateral", {"circle"}},
      {"semicircle", {"circle"}},
      {"regular-pentagon", {"pentagon", "polygon"}},
      {"regular-hexagon", {"hexagon", "polygon"}},
  };
  auto it = parents.find(kind);
  if (it == parents.end()) return false;
  for (const auto& p : it->second)
    if (p == cls) return true;
  return false;
}

struct Catalog {
  int schema_version{1};
  bool complete{false};  // bundled catalogs assert the full 110/20 contract
  std::vector<Theorem> theorems;
  std::vector<Substrate> substrates;

  const Theorem* theorem_by_id(const std::string& id) const {
    for (const auto& t : theorems)
      if (t.id == id) return &t;
    return nullptr;
  }
  const Substrate* substrate_by_kind(const std::string& kind) const {
    for (const auto& s : substrates)
      if (s.kind == kind) return &s;
    return nullptr;
  }
  std::vector<const Theorem*> by_category(TheoremCategory c) const {
    std::vector<const Theorem*> out;
    for (const auto& t : theorems)
      if (t.category == c) out.push_back(&t);
    return out;
  }
  // First line-element theorem realizing a role; used to tag injections when
  // the sampled theorems did not force the role.
  const Theorem* default_theorem_for_role(RoleTag role) const {
    for (const auto& t : theorems)
      if (t.role_hint && *t.role_hint == role) return &t;
    return nullptr;
  }

  ordered_json to_json() const;
  std::string canonical_text() const { return to_json().dump(2) + "\n"; }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace catalog_detail {

inline Error schema_error(const std::string& path, const std::string& message) {
  return Error(ErrorCode::schema_violation, path + ": " + message);
}

inline const ordered_json& field(const ordered_json& obj, const std::string& key,
                                 const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw schema_error(path, "missing field '" + key + "'");
  return *it;
}

inline std::vector<std::vector<std::string>> parse_groups(const ordered_json& j,
                                                          const std::string& path) {
  if (!j.is_array()) throw schema_error(path, "groups must be an array");
  std::vector<std::vector<std::string>> out;
  for (const auto& g : j) {
    if (!g.is_array()) throw schema_error(path, "each group must be an array");
    std::vector<std::string> grp;
    for (const auto& e : g) {
      if (!e.is_string()) throw schema_error(path, "group entries must be strings");
      grp.push_back(e.get<std::string>());
    }
    out.push_back(std::move(grp));
  }
  return out;
}

inline FactTemplate parse_fact_template(const ordered_json& j, const std::string& path) {
  FactTemplate t;
  auto kind_str = field(j, "kind", path).get<std::string>();
  auto kind = parse_fact_kind(kind_str);
  if (!kind) throw schema_error(path, "unknown fact kind '" + kind_str + "'");
  t.kind = *kind;
  t.groups = parse_groups(field(j, "groups", path), path);
  if (j.contains("value")) t.value = j["value"].get<double>();
  std::string arity = fact_arity_error(t.kind, t.groups);
  if (!arity.empty()) throw schema_error(path, kind_str + ": " + arity);
  return t;
}

inline Predicate parse_predicate(const ordered_json& j, const std::string& path) {
  Predicate p;
  auto pred = field(j, "pred", path).get<std::string>();
  if (pred == "has-substrate") {
    p.kind = Predicate::Kind::has_substrate;
    p.arg = field(j, "arg", path).get<std::string>();
  } else if (pred == "has-role") {
    p.kind = Predicate::Kind::has_role;
    p.arg = field(j, "arg", path).get<std::string>();
    if (!parse_role(p.arg)) throw schema_error(path, "unknown role '" + p.arg + "'");
  } else if (pred == "relation") {
    p.kind = Predicate::Kind::relation;
    p.arg = field(j, "arg", path).get<std::string>();
  } else if (pred == "angle-equals") {
    p.kind = Predicate::Kind::angle_equals;
    p.value = field(j, "value", path).get<double>();
  } else {
    throw schema_error(path, "unknown predicate '" + pred + "'");
  }
  return p;
}

}  // namespace catalog_detail

inline Catalog parse_catalog(const std::string& text, const std::string& origin = "catalog") {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, origin + ": " + e.what());
  }
  using namespace catalog_detail;
  Catalog cat;
  cat.schema_version = field(root, "schema_version", origin).get<int>();
  if (cat.schema_version != 1)
    throw schema_error(origin, "unsupported schema_version");
  if (root.contains("complete")) cat.complete = root["complete"].get<bool>();

  std::set<std::string> theorem_ids;
  const auto& theorems = field(root, "theorems", origin);
  for (std::size_t i = 0; i < theorems.size(); ++i) {
    std::string path = origin + ".theorems[" + std::to_string(i) + "]";
    const auto& j = theorems[i];
    Theorem t;
    t.id = field(j, "id", path).get<std::string>();
    path += "(" + t.id + ")";
    if (!theorem_ids.insert(t.id).second)
      throw schema_error(path, "duplicate theorem id");
    auto cat_str = field(j, "category", path).get<std::string>();
    if (cat_str == "substrate-related")
      t.category = TheoremCategory::substrate_related;
    else if (cat_str == "line-element-related")
      t.category = TheoremCategory::line_element_related;
    else
      throw schema_error(path, "unknown category '" + cat_str + "'");
    t.family = field(j, "family", path).get<std::string>();
    t.statement = field(j, "statement", path).get<std::string>();
    for (const auto& pj : field(j, "preconditions", path))
      t.preconditions.push_back(parse_predicate(pj, path + ".preconditions"));
    if (j.contains("binds"))
      for (const auto& [k, v] : j["binds"].items())
        t.binds.emplace_back(k, v.get<std::string>());
    if (j.contains("hypotheses"))
      for (const auto& fj : j["hypotheses"])
        t.hypotheses.push_back(parse_fact_template(fj, path + ".hypotheses"));
    if (j.contains("conclusions"))
      for (const auto& fj : j["conclusions"])
        t.conclusions.push_back(parse_fact_template(fj, path + ".conclusions"));
    if (j.contains("role_hint")) {
      auto role = parse_role(j["role_hint"].get<std::string>());
      if (!role) throw schema_error(path, "unknown role_hint");
      t.role_hint = role;
    }
    cat.theorems.push_back(std::move(t));
  }

  std::set<std::string> substrate_ids;
  const auto& substrates = field(root, "substrates", origin);
  for (std::size_t i = 0; i < substrates.size(); ++i) {
    std::string path = origin + ".substrates[" + std::to_string(i) + "]";
    const auto& j = substrates[i];
    Substrate s;
    s.id = field(j, "id", path).get<std::string>();
    path += "(" + s.id + ")";
    if (!substrate_ids.insert(s.id).second)
      throw schema_error(path, "duplicate substrate id");
    s.kind = field(j, "kind", path).get<std::string>();
    s.shape_class = field(j, "shape_class", path).get<std::string>();
    const auto& gen = field(j, "generator", path);
    s.generator.recipe = field(gen, "recipe", path + ".generator").get<std::string>();
    if (gen.contains("params")) s.generator.params = gen["params"];
    for (const auto& d : field(j, "description_templates", path)) {
      s.description_templates.push_back(d.get<std::string>());
    }
    if (s.description_templates.empty())
      throw schema_error(path, "substrate needs at least one description template");
    for (const auto& a : field(j, "associated_theorem_ids", path)) {
      std::string id = a.get<std::string>();
      if (!theorem_ids.count(id))
        throw schema_error(path, "associated theorem id '" + id + "' does not exist");
      s.associated_theorem_ids.push_back(id);
    }
    cat.substrates.push_back(std::move(s));
  }

  if (cat.complete) {
    if (cat.theorems.size() != 110)
      throw schema_error(origin, "complete catalog must hold exactly 110 theorems, got " +
                                     std::to_string(cat.theorems.size()));
    if (cat.substrates.size() != 20)
      throw schema_error(origin, "complete catalog must hold exactly 20 substrates, got " +
                                     std::to_string(cat.substrates.size()));
  }
  return cat;
}

inline Catalog load_catalogs(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open catalog file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Serialization (canonical form)
// ---------------------------------------------------------------------------

inline ordered_json Catalog::to_json() const {
  ordered_json root;
  root["schema_version"] = schema_version;
  root["complete"] = complete;
  ordered_json th = ordered_json::array();
  for (const auto& t : theorems) {
    ordered_json j;
    j["id"] = t.id;
    j["category"] = category_name(t.category);
    j["family"] = t.family;
    j["statement"] = t.statement;
    ordered_json pre = ordered_json::array();
    for (const auto& p : t.preconditions) {
      ordered_json pj;
      pj["pred"] = predicate_name(p.kind);
      if (p.kind == Predicate::Kind::angle_equals)
        pj["value"] = p.value;
      else
        pj["arg"] = p.arg;
      pre.push_back(pj);
    }
    j["preconditions"] = pre;
    if (!t.binds.empty()) {
      ordered_json b;
      for (const auto& [k, v] : t.binds) b[k] = v;
      j["binds"] = b;
    }
    auto dump_facts = [](const std::vector<FactTemplate>& fs) {
      ordered_json arr = ordered_json::array();
      for (const auto& f : fs) {
        ordered_json fj;
        fj["kind"] = fact_kind_name(f.kind);
        fj["groups"] = f.groups;
        if (f.value != 0) fj["value"] = f.value;
        arr.push_back(fj);
      }
      return arr;
    };
    if (!t.hypotheses.empty()) j["hypotheses"] = dump_facts(t.hypotheses);
    j["conclusions"] = dump_facts(t.conclusions);
    if (t.role_hint) j["role_hint"] = role_name(*t.role_hint);
    th.push_back(j);
  }
  root["theorems"] = th;
  ordered_json su = ordered_json::array();
  for (const auto& s : substrates) {
    ordered_json j;
    j["id"] = s.id;
    j["kind"] = s.kind;
    j["shape_class"] = s.shape_class;
    ordered_json gj;
    gj["recipe"] = s.generator.recipe;
    if (!s.generator.params.is_null()) gj["params"] = s.generator.params;
    j["generator"] = gj;
    j["description_templates"] = s.description_templates;
    j["associated_theorem_ids"] = s.associated_theorem_ids;
    su.push_back(j);
  }
  root["substrates"] = su;
  return root;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

// 1..3 theorems from each category, without replacement, uniform.
inline std::vector<const Theorem*> sample_theorems(const Catalog& catalog, Rng& rng,
                                                   int per_category_count) {
  if (per_category_count < 1 || per_category_count > 3)
    throw Error(ErrorCode::invalid_config, "per-category count must be in [1,3]");
  std::vector<const Theorem*> out;
  for (TheoremCategory c :
       {TheoremCategory::substrate_related, TheoremCategory::line_element_related}) {
    auto pool = catalog.by_category(c);
    if (pool.empty())
      throw Error(ErrorCode::catalog_mismatch,
                  std::string("catalog has no ") + category_name(c) + " theorems");
    auto idx = rng.sample_indices(pool.size(),
                                  static_cast<std::size_t>(per_category_count));
    for (auto i : idx) out.push_back(pool[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binding + conclusion instantiation
// ---------------------------------------------------------------------------

namespace catalog_detail {

using BindingVars = std::map<std::string, std::string>;

inline std::vector<std::vector<std::string>> dihedral_orders(
    const std::vector<std::string>& cycle) {
  std::vector<std::vector<std::string>> out;
  std::size_t n = cycle.size();
  std::vector<std::string> cur = cycle;
  for (int rep = 0; rep < 2; ++rep) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(cur);
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    }
    std::reverse(cur.begin(), cur.end());
  }
  return out;
}

// Candidate placeholder orders per substrate instance. Polygons expose their
// full dihedral symmetry so hypothesis guards can pin the orientation; circle
// substrates keep the center pinned in slot 1 and expose only points that
// actually lie on the circle (external points stay out of V-placeholders).
inline std::vector<std::vector<std::string>> placeholder_orders(
    const SubstrateInstance& inst, const Scene& scene) {
  std::vector<std::vector<std::string>> out;
  if (!inst.circle_center) {
    if (inst.cycle.size() >= 3) return dihedral_orders(inst.cycle);
    out.push_back(inst.verts);
    return out;
  }
  Point center = scene.at(*inst.circle_center);
  std::vector<std::string> rest;
  for (std::size_t i = 1; i < inst.verts.size(); ++i)
    if (std::abs(distance(scene.at(inst.verts[i]), center) - inst.circle_radius) <
        kIncidenceEps)
      rest.push_back(inst.verts[i]);
  if (inst.cycle.size() >= 3) {
    for (auto& order : dihedral_orders(inst.cycle)) {
      std::vector<std::string> v = {inst.verts[0]};
      v.insert(v.end(), order.begin(), order.end());
      out.push_back(std::move(v));
    }
  } else if (rest.size() == 2) {
    out.push_back({inst.verts[0], rest[0], rest[1]});
    out.push_back({inst.verts[0], rest[1], rest[0]});
  } else {
    std::vector<std::string> v = {inst.verts[0]};
    v.insert(v.end(), rest.begin(), rest.end());
    out.push_back(std::move(v));
  }
  return out;
}

inline std::string resolve_placeholder(const BindingVars& vars, const std::string& ph) {
  auto it = vars.find(ph);
  return it == vars.end() ? ph : it->second;
}

// Resolve a point expression's placeholders ("mid(V1,V3)" -> "mid(A,C)").
inline std::string resolve_expr(const BindingVars& vars, const std::string& expr) {
  if (expr.rfind("mid(", 0) == 0 && expr.back() == ')') {
    std::string inner = expr.substr(4, expr.size() - 5);
    auto comma = inner.find(',');
    return "mid(" + resolve_placeholder(vars, inner.substr(0, comma)) + "," +
           resolve_placeholder(vars, inner.substr(comma + 1)) + ")";
  }
  return resolve_placeholder(vars, expr);
}

inline Fact instantiate(const FactTemplate& t, const BindingVars& vars,
                        const std::string& theorem_id) {
  Fact f;
  f.kind = t.kind;
  f.value = t.value;
  f.theorem_id = theorem_id;
  for (const auto& g : t.groups) {
    std::vector<std::string> rg;
    for (const auto& e : g) rg.push_back(resolve_expr(vars, e));
    f.groups.push_back(std::move(rg));
  }
  return f;
}

// All placeholder bindings satisfying the theorem's preconditions and join
// constraints (hypotheses not yet applied).
inline std::vector<BindingVars> enumerate_bindings(const Theorem& theorem,
                                                   const Scene& scene,
                                                   const std::vector<Relation>* rels) {
  std::vector<BindingVars> bindings = {{}};
  int substrate_no = 0;
  int role_no = 0;
  std::vector<Relation> local_rels;
  auto relations = [&]() -> const std::vector<Relation>& {
    if (rels) return *rels;
    if (local_rels.empty()) local_rels = relation_tests(scene);
    return local_rels;
  };

  for (const auto& pre : theorem.preconditions) {
    if (bindings.empty()) return {};
    switch (pre.kind) {
      case Predicate::Kind::has_substrate: {
        std::string prefix = substrate_no == 0 ? "V" : "W";
        std::string marker = "_inst" + prefix;
        ++substrate_no;
        std::vector<BindingVars> next;
        for (std::size_t si = 0; si < scene.substrates().size(); ++si) {
          const auto& inst = scene.substrates()[si];
          if (!substrate_is_a(inst.kind, pre.arg)) continue;
          for (const auto& order : placeholder_orders(inst, scene)) {
            for (const auto& b : bindings) {
              if (substrate_no == 2) {
                auto it = b.find("_instV");
                if (it != b.end() && it->second == std::to_string(si)) continue;
              }
              BindingVars nb = b;
              for (std::size_t vi = 0; vi < order.size(); ++vi)
                nb[prefix + std::to_string(vi + 1)] = order[vi];
              nb[marker] = std::to_string(si);
              next.push_back(std::move(nb));
            }
          }
        }
        bindings = std::move(next);
        break;
      }
      case Predicate::Kind::has_role: {
        auto role = parse_role(pre.arg);
        std::string ep = role_no == 0 ? "E" : "F";
        std::string ap = role_no == 0 ? "A" : "B";
        std::string marker = "_el" + ep;
        ++role_no;
        std::vector<BindingVars> next;
        for (std::size_t ei = 0; ei < scene.injected().size(); ++ei) {
          const auto& el = scene.injected()[ei];
          if (el.role != *role) continue;
          for (const auto& b : bindings) {
            if (role_no == 2) {
              auto it = b.find("_elE");
              if (it != b.end() && it->second == std::to_string(ei)) continue;
            }
            BindingVars nb = b;
            nb[ep + "1"] = el.seg_a;
            nb[ep + "2"] = el.seg_b;
            for (std::size_t ci = 0; ci < el.context.size(); ++ci)
              nb[ap + std::to_string(ci + 1)] = el.context[ci];
            nb[marker] = std::to_string(ei);
            next.push_back(std::move(nb));
          }
        }
        bindings = std::move(next);
        break;
      }
      case Predicate::Kind::relation: {
        bool found = false;
        for (const auto& r : relations())
          if (relation_name(r.kind) == pre.arg) {
            found = true;
            break;
          }
        if (!found) return {};
        break;
      }
      case Predicate::Kind::angle_equals: {
        bool found = false;
        for (const auto& ja : junction_angles(scene))
          if (std::abs(ja.degrees - pre.value) < 1e-6) {
            found = true;
            break;
          }
        if (!found) return {};
        break;
      }
    }
  }

  // Join constraints.
  std::vector<BindingVars> joined;
  for (const auto& b : bindings) {
    bool ok = true;
    for (const auto& [lhs, rhs] : theorem.binds) {
      if (lhs.rfind("pair:", 0) == 0) {
        std::string seg = lhs.substr(5);
        auto comma = rhs.find(',');
        std::string r1 = resolve_placeholder(b, rhs.substr(0, comma));
        std::string r2 = resolve_placeholder(b, rhs.substr(comma + 1));
        std::string e1 = resolve_placeholder(b, seg + "1");
        std::string e2 = resolve_placeholder(b, seg + "2");
        if (!((e1 == r1 && e2 == r2) || (e1 == r2 && e2 == r1))) ok = false;
      } else {
        if (resolve_placeholder(b, lhs) != resolve_placeholder(b, rhs)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) joined.push_back(b);
  }
  return joined;
}

}  // namespace catalog_detail

namespace catalog_detail {

// A hypothesis that cannot even be evaluated (placeholder with no binding,
// degenerate configuration) fails the binding rather than propagating.
inline bool hypothesis_holds(const FactTemplate& h, const BindingVars& b,
                             const Theorem& theorem, const Scene& scene) {
  try {
    return instantiate(h, b, theorem.id).holds(scene);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace catalog_detail

// True when some binding satisfies the theorem's preconditions, joins and
// hypotheses. This is the deterministic applicability test behind claim
// validation.
inline bool theorem_applicable(const Theorem& theorem, const Scene& scene,
                               const std::vector<Relation>* rels = nullptr) {
  auto bindings = catalog_detail::enumerate_bindings(theorem, scene, rels);
  if (theorem.hypotheses.empty()) return !bindings.empty();
  for (const auto& b : bindings) {
    bool ok = true;
    for (const auto& h : theorem.hypotheses) {
      if (!catalog_detail::hypothesis_holds(h, b, theorem, scene)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// The theorem's conclusion templates instantiated against every binding of
// scene elements satisfying all preconditions and hypotheses; empty when no
// binding exists.
inline std::vector<Fact> applicable_conclusions(const Theorem& theorem, const Scene& scene,
                                                const std::vector<Relation>* rels = nullptr) {
  std::vector<Fact> out;
  std::set<std::string> seen;
  for (const auto& b : catalog_detail::enumerate_bindings(theorem, scene, rels)) {
    bool ok = true;
    for (const auto& h : theorem.hypotheses) {
      if (!catalog_detail::hypothesis_holds(h, b, theorem, scene)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Fact> binding_facts;
    try {
      for (const auto& c : theorem.conclusions) {
        Fact f = catalog_detail::instantiate(c, b, theorem.id);
        f.residual(scene);  // probe: unresolved placeholders invalidate the binding
        binding_facts.push_back(std::move(f));
      }
    } catch (const Error&) {
      continue;
    }
    for (auto& f : binding_facts)
      if (seen.insert(f.canonical()).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace geosynth
