#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "geosynth/catalog.hpp"
#include "geosynth/catalog_default.hpp"

using namespace geosynth;

namespace {

Catalog default_catalog() { return parse_catalog(default_catalog_json(), "bundled"); }

// Isosceles triangle scene: apex A(0,4), base B(-3,0), C(3,0); AB = AC = 5.
Scene isosceles_scene() {
  Scene s;
  s.add_vertex_labeled("A", {0, 4});
  s.add_vertex_labeled("B", {-3, 0});
  s.add_vertex_labeled("C", {3, 0});
  s.add_segment("A", "B", {RoleTag::side});
  s.add_segment("B", "C", {RoleTag::side});
  s.add_segment("C", "A", {RoleTag::side});
  SubstrateInstance inst;
  inst.kind = "isosceles-triangle";
  inst.verts = {"A", "B", "C"};
  inst.cycle = {"A", "B", "C"};
  s.substrates().push_back(inst);
  return s;
}

// 30-60-90 right triangle: right angle at A, 30 degrees at B.
Scene thirty_sixty_scene() {
  Scene s;
  double leg = 9.0;
  s.add_vertex_labeled("A", {0, 0});
  s.add_vertex_labeled("B", {leg, 0});
  s.add_vertex_labeled("C", {0, leg * std::tan(rad_from_deg(30))});
  s.add_segment("A", "B", {RoleTag::side});
  s.add_segment("B", "C", {RoleTag::side});
  s.add_segment("C", "A", {RoleTag::side});
  SubstrateInstance inst;
  inst.kind = "right-triangle";
  inst.verts = {"A", "B", "C"};
  inst.cycle = {"A", "B", "C"};
  s.substrates().push_back(inst);
  return s;
}

}  // namespace

TEST_CASE("bundled catalog loads with the documented counts") {
  Catalog cat = default_catalog();
  CHECK(cat.theorems.size() == 110);
  CHECK(cat.substrates.size() == 20);
  CHECK(cat.complete);
  int substrate_related = 0, line_related = 0;
  for (const auto& t : cat.theorems)
    (t.category == TheoremCategory::substrate_related ? substrate_related : line_related)++;
  CHECK(substrate_related >= 3);
  CHECK(line_related >= 3);
  // Referential integrity of substrate associations.
  for (const auto& s : cat.substrates)
    for (const auto& id : s.associated_theorem_ids) CHECK(cat.theorem_by_id(id) != nullptr);
}

TEST_CASE("bundled header matches the editable asset file") {
  std::ifstream in(std::string(GEOSYNTH_REPO_DIR) + "/assets/catalog.json", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(default_catalog_json()));
}

TEST_CASE("catalog error paths") {
  SECTION("empty file is a parse error") {
    CHECK_THROWS_MATCHES(parse_catalog("", "t"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::parse_error;
                         }));
  }
  SECTION("dangling theorem id names the offender") {
    std::string text = R"({
      "schema_version": 1,
      "theorems": [{"id": "a.b", "category": "substrate-related", "family": "F",
                    "statement": "s", "preconditions": [], "conclusions": []}],
      "substrates": [{"id": "s.x", "kind": "square", "shape_class": "quadrilateral",
                      "generator": {"recipe": "square"},
                      "description_templates": ["Square {V1}{V2}{V3}{V4}."],
                      "associated_theorem_ids": ["missing.id"]}]
    })";
    try {
      parse_catalog(text, "t");
      FAIL("expected schema violation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::schema_violation);
      CHECK(std::string(e.what()).find("missing.id") != std::string::npos);
    }
  }
  SECTION("duplicate theorem ids are rejected") {
    std::string text = R"({
      "schema_version": 1,
      "theorems": [
        {"id": "a.b", "category": "substrate-related", "family": "F", "statement": "s",
         "preconditions": [], "conclusions": []},
        {"id": "a.b", "category": "substrate-related", "family": "F", "statement": "s",
         "preconditions": [], "conclusions": []}],
      "substrates": []
    })";
    CHECK_THROWS_AS(parse_catalog(text, "t"), Error);
  }
  SECTION("unknown predicate, category, fact kind, arity") {
    auto wrap = [](const std::string& th) {
      return R"({"schema_version": 1, "theorems": [)" + th + R"(], "substrates": []})";
    };
    CHECK_THROWS_AS(parse_catalog(wrap(
        R"({"id":"x","category":"nope","family":"F","statement":"s","preconditions":[],"conclusions":[]})"), "t"), Error);
    CHECK_THROWS_AS(parse_catalog(wrap(
        R"({"id":"x","category":"substrate-related","family":"F","statement":"s","preconditions":[{"pred":"bogus","arg":"y"}],"conclusions":[]})"), "t"), Error);
    CHECK_THROWS_AS(parse_catalog(wrap(
        R"({"id":"x","category":"substrate-related","family":"F","statement":"s","preconditions":[],"conclusions":[{"kind":"bogus","groups":[]}]})"), "t"), Error);
    CHECK_THROWS_AS(parse_catalog(wrap(
        R"({"id":"x","category":"substrate-related","family":"F","statement":"s","preconditions":[],"conclusions":[{"kind":"angles-equal","groups":[["A","B"]]}]})"), "t"), Error);
  }
  SECTION("incomplete catalog claiming completeness is rejected") {
    std::string text = R"({"schema_version": 1, "complete": true,
                           "theorems": [], "substrates": []})";
    CHECK_THROWS_AS(parse_catalog(text, "t"), Error);
  }
}

TEST_CASE("catalog canonical serialization round-trips") {
  Catalog cat = default_catalog();
  std::string canon = cat.canonical_text();
  Catalog reparsed = parse_catalog(canon, "canon");
  CHECK(reparsed.canonical_text() == canon);
  CHECK(reparsed.theorems.size() == cat.theorems.size());
}

TEST_CASE("sample_theorems bounds and determinism") {
  Catalog cat = default_catalog();
  SECTION("count=1 per category gives one of each") {
    Rng rng(1);
    auto picked = sample_theorems(cat, rng, 1);
    REQUIRE(picked.size() == 2);
    CHECK(picked[0]->category == TheoremCategory::substrate_related);
    CHECK(picked[1]->category == TheoremCategory::line_element_related);
  }
  SECTION("count=3 gives six distinct theorems") {
    Rng rng(2);
    auto picked = sample_theorems(cat, rng, 3);
    REQUIRE(picked.size() == 6);
    std::set<std::string> ids;
    for (auto* t : picked) ids.insert(t->id);
    CHECK(ids.size() == 6);
  }
  SECTION("fixed seed is reproducible") {
    Rng a(42), b(42);
    auto pa = sample_theorems(cat, a, 2);
    auto pb = sample_theorems(cat, b, 2);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i]->id == pb[i]->id);
  }
  SECTION("output size always within [2,6]") {
    for (int c = 1; c <= 3; ++c) {
      Rng rng(static_cast<std::uint64_t>(c));
      auto picked = sample_theorems(cat, rng, c);
      CHECK(picked.size() >= 2);
      CHECK(picked.size() <= 6);
    }
  }
  SECTION("invalid count is rejected") {
    Rng rng(3);
    CHECK_THROWS_AS(sample_theorems(cat, rng, 0), Error);
    CHECK_THROWS_AS(sample_theorems(cat, rng, 4), Error);
  }
}

TEST_CASE("applicable_conclusions: isosceles base angles") {
  Catalog cat = default_catalog();
  Scene s = isosceles_scene();
  const Theorem* th = cat.theorem_by_id("isos.base_angles");
  REQUIRE(th != nullptr);
  auto facts = applicable_conclusions(*th, s);
  REQUIRE_FALSE(facts.empty());
  bool found = false;
  for (const auto& f : facts) {
    CHECK(f.holds(s, 1e-6));
    std::string text = f.render();
    if (text.find("B") != std::string::npos && text.find("C") != std::string::npos)
      found = true;
  }
  CHECK(found);
}

TEST_CASE("applicable_conclusions: 30-degree side is half the hypotenuse") {
  Catalog cat = default_catalog();
  Scene s = thirty_sixty_scene();
  const Theorem* th = cat.theorem_by_id("right.thirty_half_hypotenuse");
  REQUIRE(th != nullptr);
  auto facts = applicable_conclusions(*th, s);
  REQUIRE_FALSE(facts.empty());
  for (const auto& f : facts) {
    CHECK(f.kind == FactKind::length_ratio);
    CHECK(f.value == Catch::Approx(0.5));
    CHECK(f.holds(s, 1e-9));
  }
}

TEST_CASE("applicable_conclusions: empty scene yields nothing") {
  Catalog cat = default_catalog();
  Scene s;
  for (const auto& t : cat.theorems) CHECK(applicable_conclusions(t, s).empty());
}

TEST_CASE("all catalog conclusions hold on a hand-built scene") {
  Catalog cat = default_catalog();
  Scene s = thirty_sixty_scene();
  auto rels = relation_tests(s);
  for (const auto& t : cat.theorems) {
    for (const auto& f : applicable_conclusions(t, s, &rels)) {
      INFO(t.id << ": " << f.render());
      CHECK(f.holds(s, 1e-6));
    }
  }
}

TEST_CASE("theorem_applicable gates on preconditions") {
  Catalog cat = default_catalog();
  Scene s = thirty_sixty_scene();  // no circle anywhere
  const Theorem* inscribed = cat.theorem_by_id("inscribed.half_central");
  REQUIRE(inscribed != nullptr);
  CHECK_FALSE(theorem_applicable(*inscribed, s));
  const Theorem* pyth = cat.theorem_by_id("right.pythagorean");
  REQUIRE(pyth != nullptr);
  CHECK(theorem_applicable(*pyth, s));
}
