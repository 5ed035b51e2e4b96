#include <catch2/catch_amalgamated.hpp>

#include "geosynth/construct.hpp"
#include "geosynth/geometry.hpp"
#include "geosynth/relations.hpp"
#include "geosynth/rng.hpp"
#include "geosynth/scene.hpp"
#include "oracles.hpp"

using namespace geosynth;

TEST_CASE("distance basics") {
  CHECK(distance({0, 0}, {3, 4}) == Catch::Approx(5.0).margin(1e-12));
  CHECK(distance({1, 1}, {1, 1}) == 0.0);
  // 12-digit agreement with the long-double oracle.
  double d = distance({0, 0}, {1, 1});
  CHECK(d == Catch::Approx(oracles::long_double_distance({0, 0}, {1, 1})).epsilon(1e-12));
  CHECK(d == Catch::Approx(1.414213562373).margin(5e-13));
}

TEST_CASE("distance is a metric") {
  Rng rng(20240915);
  for (int i = 0; i < 1000; ++i) {
    Point a{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    Point b{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    Point c{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    CHECK(distance(a, b) == Catch::Approx(distance(b, a)).margin(0));
    CHECK(distance(a, a) == 0.0);
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
    CHECK(distance(a, b) >= 0.0);
  }
}

TEST_CASE("angle_at basics") {
  CHECK(angle_at_deg({0, 0}, {1, 0}, {0, 1}) == Catch::Approx(90.0).margin(1e-9));
  CHECK(angle_at_deg({0, 0}, {1, 0}, {-1, 0}) == Catch::Approx(180.0).margin(1e-9));
  // Right triangle with legs 1 and sqrt(3): the angle opposite the unit leg
  // is 30 degrees (tan 30 = sqrt(3)/3).
  double s3 = std::sqrt(3.0);
  Point c{0, 0}, a{s3, 0}, b{0, 1};
  CHECK(angle_at_deg(a, c, b) == Catch::Approx(30.0).margin(1e-9));
  CHECK_THROWS_AS(angle_at_deg({0, 0}, {0, 0}, {1, 1}), Error);
}

TEST_CASE("angle_at is invariant under rotation and scaling") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Point v{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    Point p{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    Point q{rng.uniform(-10, 10), rng.uniform(-10, 10)};
    if (points_close(v, p, 1e-3) || points_close(v, q, 1e-3)) continue;
    double base = angle_at_deg(v, p, q);
    double theta = rng.uniform(0, 360);
    double scale = rng.uniform(0.2, 5.0);
    auto xf = [&](Point pt) { return scale * rotated(pt, theta); };
    CHECK(angle_at_deg(xf(v), xf(p), xf(q)) == Catch::Approx(base).margin(1e-9));
  }
}

TEST_CASE("polygon_area basics") {
  std::vector<Point> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(square) == Catch::Approx(1.0).margin(1e-12));
  std::vector<Point> tri = {{0, 0}, {4, 0}, {0, 3}};
  CHECK(polygon_area(tri) == Catch::Approx(6.0).margin(1e-12));
  CHECK(polygon_area(square) ==
        Catch::Approx(polygon_area(std::vector<Point>{{0, 1}, {1, 1}, {1, 0}, {0, 0}}))
            .margin(1e-12));
}

TEST_CASE("polygon_area equals fan triangulation on random convex hexagons") {
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    // Convex hexagon: six angularly sorted points on a randomized radius.
    std::vector<Point> pts;
    double base = rng.uniform(0, 60);
    for (int i = 0; i < 6; ++i) {
      double ang = base + 60.0 * i + rng.uniform(5, 55);
      double r = rng.uniform(5, 20);
      pts.push_back({r * std::cos(rad_from_deg(ang)), r * std::sin(rad_from_deg(ang))});
    }
    if (!polygon_is_convex(pts)) continue;
    CHECK(polygon_area(pts) ==
          Catch::Approx(oracles::fan_triangulation_area(pts)).margin(1e-9));
  }
}

TEST_CASE("polygon_area error paths") {
  std::vector<Point> bowtie = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_THROWS_MATCHES(polygon_area(bowtie), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::self_intersection;
                       }));
  std::vector<Point> collinear = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_MATCHES(polygon_area(collinear), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::degenerate_polygon;
                       }));
  std::vector<Point> two = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(polygon_area(two), Error);
}

TEST_CASE("interior angles of generated convex polygons sum to (n-2)*180") {
  Rng rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.uniform_int(3, 8);
    std::vector<Point> pts;
    double step = 360.0 / n;
    for (int i = 0; i < n; ++i) {
      double ang = step * i + rng.uniform(0.1, step - 0.1);
      double r = rng.uniform(6, 18);
      pts.push_back({r * std::cos(rad_from_deg(ang)), r * std::sin(rad_from_deg(ang))});
    }
    if (!polygon_is_convex(pts)) continue;
    double sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) sum += interior_angle_deg(pts, i);
    CHECK(sum == Catch::Approx((n - 2) * 180.0).margin(1e-6));
  }
}

TEST_CASE("relation_tests finds parallel, tangent, congruent") {
  SECTION("two horizontal segments") {
    Scene s;
    s.add_vertex_labeled("A", {0, 0});
    s.add_vertex_labeled("B", {4, 0});
    s.add_vertex_labeled("C", {0, 1});
    s.add_vertex_labeled("D", {4, 1});
    s.add_segment("A", "B", {RoleTag::side});
    s.add_segment("C", "D", {RoleTag::side});
    auto rels = relation_tests(s);
    CHECK(has_relation(rels, RelationKind::parallel));
  }
  SECTION("segment tangent to circle") {
    Scene s;
    s.add_vertex_labeled("A", {0, 0});
    s.add_vertex_labeled("B", {0, 2});
    s.add_vertex_labeled("O", {1, 1});
    s.add_segment("A", "B", {RoleTag::side});
    s.add_circle("O", 1.0);
    auto rels = relation_tests(s);
    REQUIRE(has_relation(rels, RelationKind::tangent));
    for (const auto& r : rels)
      if (r.kind == RelationKind::tangent) CHECK(r.residual < 1e-9);
  }
  SECTION("congruent triangles by SSS") {
    Scene s;
    s.add_vertex_labeled("A", {0, 0});
    s.add_vertex_labeled("B", {3, 0});
    s.add_vertex_labeled("C", {0, 4});
    s.add_vertex_labeled("D", {10, 0});
    s.add_vertex_labeled("E", {13, 0});
    s.add_vertex_labeled("F", {10, 4});
    for (auto [a, b] : {std::pair{"A", "B"}, {"B", "C"}, {"A", "C"},
                        {"D", "E"}, {"E", "F"}, {"D", "F"}})
      s.add_segment(a, b, {RoleTag::side});
    auto rels = relation_tests(s);
    REQUIRE(has_relation(rels, RelationKind::congruent_triangles));
    // Agreement with the brute-force multiset oracle.
    std::vector<Point> t1 = {{0, 0}, {3, 0}, {0, 4}};
    std::vector<Point> t2 = {{10, 0}, {13, 0}, {10, 4}};
    CHECK(oracles::sss_congruent(t1, t2, 1e-9));
  }
}

TEST_CASE("construct median, altitude, bisector") {
  auto make_triangle = [] {
    Scene s;
    s.add_vertex_labeled("A", {0, 0});
    s.add_vertex_labeled("B", {4, 0});
    s.add_vertex_labeled("C", {0, 4});
    s.add_segment("A", "B", {RoleTag::side});
    s.add_segment("B", "C", {RoleTag::side});
    s.add_segment("A", "C", {RoleTag::side});
    return s;
  };

  SECTION("median from A lands on the midpoint of BC") {
    Scene s = make_triangle();
    auto el = construct_special_line(s, RoleTag::median, {{"A", "B", "C"}, {}});
    Point m = s.at(el.seg_b);
    CHECK(m.x == Catch::Approx(2.0).margin(1e-9));
    CHECK(m.y == Catch::Approx(2.0).margin(1e-9));
    CHECK(distance(m, s.at("B")) == Catch::Approx(distance(m, s.at("C"))).margin(1e-9));
  }
  SECTION("altitude from the right angle matches the projection oracle") {
    Scene s = make_triangle();
    auto el = construct_special_line(s, RoleTag::altitude, {{"A", "B", "C"}, {}});
    Point foot = s.at(el.seg_b);
    Point expect = oracles::projection_formula({0, 0}, {4, 0}, {0, 4});
    CHECK(distance(foot, expect) < 1e-9);
    CHECK(foot.x == Catch::Approx(2.0).margin(1e-9));
  }
  SECTION("bisector from A hits BC at (2,2) by symmetry") {
    Scene s = make_triangle();
    auto el = construct_special_line(s, RoleTag::angle_bisector, {{"A", "B", "C"}, {}});
    Point d = s.at(el.seg_b);
    CHECK(d.x == Catch::Approx(2.0).margin(1e-9));
    CHECK(d.y == Catch::Approx(2.0).margin(1e-9));
  }
  SECTION("midline endpoints are exact side midpoints") {
    Scene s = make_triangle();
    auto el = construct_special_line(s, RoleTag::midline, {{"A", "B", "C"}, {}});
    CHECK(distance(s.at(el.seg_a), {2, 0}) < 1e-9);
    CHECK(distance(s.at(el.seg_b), {0, 2}) < 1e-9);
    // Midline parallel to BC at half its length.
    double len = distance(s.at(el.seg_a), s.at(el.seg_b));
    CHECK(len == Catch::Approx(distance(s.at("B"), s.at("C")) / 2).margin(1e-9));
  }
  SECTION("altitude outside the opposite side is impossible") {
    Scene s;
    // Obtuse at B: the foot from C onto AB extended lies outside AB.
    s.add_vertex_labeled("A", {0, 0});
    s.add_vertex_labeled("B", {2, 0});
    s.add_vertex_labeled("C", {5, 3});
    s.add_segment("A", "B", {RoleTag::side});
    s.add_segment("B", "C", {RoleTag::side});
    s.add_segment("A", "C", {RoleTag::side});
    CHECK_THROWS_MATCHES(
        construct_special_line(s, RoleTag::altitude, {{"C", "A", "B"}, {}}), Error,
        Catch::Matchers::Predicate<Error>([](const Error& e) {
          return e.code() == ErrorCode::construction_impossible;
        }));
  }
}

TEST_CASE("construct circle elements") {
  Scene s;
  s.add_vertex_labeled("O", {0, 0});
  std::size_t circ = s.add_circle("O", 5.0);

  SECTION("radius endpoint lies on the circle") {
    Anchor a;
    a.primitive = circ;
    a.param1 = 37;
    auto el = construct_special_line(s, RoleTag::radius, a);
    CHECK(std::abs(distance(s.at(el.seg_b), s.at("O")) - 5.0) < 1e-9);
    CHECK(el.seg_a == "O");
  }
  SECTION("tangent from an external point") {
    s.add_vertex_labeled("V", {13, 0});
    Anchor a;
    a.primitive = circ;
    a.verts = {"V"};
    a.param1 = 0.2;
    auto el = construct_special_line(s, RoleTag::tangent, a);
    Point t = s.at(el.seg_b);
    CHECK(std::abs(distance(t, s.at("O")) - 5.0) < 1e-9);
    // Tangent is perpendicular to the radius at the touch point.
    CHECK(std::abs(dot(normalized(t - s.at("O")), normalized(s.at("V") - t))) < 1e-9);
    // |VT|^2 + r^2 = |VO|^2.
    double vt = distance(s.at("V"), t);
    CHECK(vt * vt + 25.0 == Catch::Approx(169.0).margin(1e-6));
  }
  SECTION("tangent from an interior point is impossible") {
    s.add_vertex_labeled("P", {1, 1});
    Anchor a;
    a.primitive = circ;
    a.verts = {"P"};
    CHECK_THROWS_MATCHES(construct_special_line(s, RoleTag::tangent, a), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::construction_impossible;
                         }));
  }
  SECTION("chord endpoints both on the circle") {
    Anchor a;
    a.primitive = circ;
    a.param1 = 10;
    a.param2 = 130;
    auto el = construct_special_line(s, RoleTag::chord, a);
    CHECK(std::abs(distance(s.at(el.seg_a), s.at("O")) - 5.0) < 1e-9);
    CHECK(std::abs(distance(s.at(el.seg_b), s.at("O")) - 5.0) < 1e-9);
  }
}

TEST_CASE("perpendicular bisector of a chord passes through the center") {
  Scene s;
  s.add_vertex_labeled("O", {0, 0});
  s.add_circle("O", 5.0);
  s.add_vertex_labeled("P", {5 * std::cos(rad_from_deg(20)), 5 * std::sin(rad_from_deg(20))});
  s.add_vertex_labeled("Q", {5 * std::cos(rad_from_deg(120)), 5 * std::sin(rad_from_deg(120))});
  std::size_t chord = s.add_segment("P", "Q", {RoleTag::chord});
  Anchor a;
  a.primitive = chord;
  auto el = construct_special_line(s, RoleTag::perpendicular_bisector, a);
  CHECK(el.seg_b == "O");
  CHECK(std::abs(dot(normalized(s.at(el.seg_b) - s.at(el.seg_a)),
                     normalized(s.at("Q") - s.at("P")))) < 1e-9);
}

TEST_CASE("pythagoras holds for right triangles detected via relations") {
  Rng rng(5150);
  for (int i = 0; i < 200; ++i) {
    double a = rng.uniform(2, 15);
    double b = rng.uniform(2, 15);
    double rot = rng.uniform(0, 360);
    Point A = rotated({0, 0}, rot), B = rotated({a, 0}, rot), C = rotated({0, b}, rot);
    double leg1 = distance(A, B), leg2 = distance(A, C), hyp = distance(B, C);
    CHECK(leg1 * leg1 + leg2 * leg2 == Catch::Approx(hyp * hyp).margin(1e-9 * hyp * hyp));
  }
}
