#include <cmath>
#include <random>

#include "arcunion/geom.hpp"
#include "doctest.h"

using namespace arcunion;

namespace {

// Dense angular sampling: reference distance from a point to an arc.
double sampled_arc_distance(const UnitArc& e, Point x, int samples = 10000) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double t =
        e.theta_start + (e.theta_end - e.theta_start) * i / samples;
    best = std::min(best, dist(e.point_at(t), x));
  }
  return best;
}

UnitArc random_lower_arc(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(-3.0, 3.0);
  std::uniform_real_distribution<double> ang(0.0, 1.0);
  const double a = kPi + ang(rng) * (kPi - 1e-3);
  const double b = std::min(kTwoPi, a + 1e-3 + ang(rng) * (kTwoPi - a - 1e-3));
  return make_unit_arc({pos(rng), pos(rng)}, a, b, 1);
}

}  // namespace

TEST_CASE("disc_contains basics") {
  CHECK(disc_contains({0, 0}, {0, 0}, 1.0));
  CHECK_FALSE(disc_contains({2, 0}, {0, 0}, 1.0));
  CHECK(disc_contains({0.6, 0.8}, {0, 0}, 1.0));  // boundary point
}

TEST_CASE("circle_circle_intersections basics") {
  SUBCASE("external tangency yields one point") {
    auto pts = circle_circle_intersections({0, 0}, {2, 0}, 1.0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == doctest::Approx(1.0));
    CHECK(pts[0].y == doctest::Approx(0.0));
  }
  SUBCASE("equilateral construction") {
    auto pts = circle_circle_intersections({0, 0}, {1, 0}, 1.0);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == doctest::Approx(0.5));
    CHECK(pts[0].y == doctest::Approx(-std::sqrt(3.0) / 2));
    CHECK(pts[1].y == doctest::Approx(std::sqrt(3.0) / 2));
  }
  SUBCASE("too far apart") {
    CHECK(circle_circle_intersections({0, 0}, {3, 0}, 1.0).empty());
  }
  SUBCASE("coincident centers") {
    CHECK_THROWS_AS(circle_circle_intersections({0, 0}, {0, 0}, 1.0),
                    std::invalid_argument);
  }
  SUBCASE("points lie on both circles") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
      Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
      if (dist(a, b) < 1e-3) continue;
      for (const Point& p : circle_circle_intersections(a, b, 1.0)) {
        CHECK(std::fabs(dist(p, a) - 1.0) < 1e-9);
        CHECK(std::fabs(dist(p, b) - 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("unit arc construction") {
  CHECK_THROWS_AS(make_unit_arc({0, 0}, 1.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(
      make_unit_arc({0, 0}, std::numeric_limits<double>::quiet_NaN(), 1.0, 0),
      std::invalid_argument);
  UnitArc e = make_unit_arc({0, 0}, 3 * kPi, 3.5 * kPi, 0);
  CHECK(e.theta_start == doctest::Approx(kPi));
  CHECK(e.theta_end == doctest::Approx(1.5 * kPi));
}

TEST_CASE("arc_intersects_disc against sampling oracle") {
  SUBCASE("spec cases") {
    UnitArc e = make_unit_arc({0, 2}, kPi, kTwoPi, 0);
    CHECK(arc_intersects_disc(e, {0, 0.5}));
    CHECK(arc_intersects_disc(e, e.center));  // all arc points at distance 1
    CHECK_FALSE(arc_intersects_disc(e, {0, 4.1}));
  }
  SUBCASE("random agreement") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    int checked = 0;
    for (int i = 0; i < 600; ++i) {
      UnitArc e = random_lower_arc(rng);
      Point x{u(rng), u(rng)};
      const double ref = sampled_arc_distance(e, x, 4000);
      if (std::fabs(ref - 1.0) < 1e-3) continue;  // skip borderline
      CHECK(arc_intersects_disc(e, x) == (ref <= 1.0));
      CHECK(std::fabs(arc_point_distance(e, x) - ref) < 1e-5);
      ++checked;
    }
    CHECK(checked > 400);
  }
}

TEST_CASE("minkowski curves") {
  SUBCASE("full lower semicircle gives a radius-2 lower arc") {
    UnitArc e = make_unit_arc({0, 0}, kPi, kTwoPi, 0);
    auto mc = minkowski_curves(e);
    REQUIRE(mc.gamma_minus.pieces.size() == 1);
    const CurvePiece& p = mc.gamma_minus.pieces[0];
    CHECK(p.radius == doctest::Approx(2.0));
    CHECK(p.center.x == doctest::Approx(0.0));
    CHECK(p.sign == -1);
    CHECK(p.x_lo == doctest::Approx(-2.0));
    CHECK(p.x_hi == doctest::Approx(2.0));
  }
  SUBCASE("degenerate point arc gives the two semicircles of D(p)") {
    auto mc = minkowski_curves(Point{0.5, -0.25});
    REQUIRE(mc.gamma_plus.pieces.size() == 1);
    REQUIRE(mc.gamma_minus.pieces.size() == 1);
    CHECK(mc.gamma_plus.pieces[0].sign == 1);
    CHECK(mc.gamma_plus.pieces[0].radius == doctest::Approx(1.0));
    CHECK(mc.gamma_minus.y_at(0.5) == doctest::Approx(-1.25));
    CHECK(mc.gamma_plus.y_at(0.5) == doctest::Approx(0.75));
  }
  SUBCASE("arc not on a lower semicircle is rejected") {
    UnitArc e = make_unit_arc({0, 0}, 0.2, 1.0, 0);
    CHECK_THROWS_AS(minkowski_curves(e), std::invalid_argument);
  }
  SUBCASE("200..340 degree arc matches the sampled distance field") {
    UnitArc e = make_unit_arc({0, 2}, 200.0 * kPi / 180.0,
                              340.0 * kPi / 180.0, 0);
    auto mc = minkowski_curves(e);
    for (int i = 0; i <= 1000; ++i) {
      const double x =
          mc.gamma_minus.x_lo() +
          (mc.gamma_minus.x_hi() - mc.gamma_minus.x_lo()) * i / 1000.0;
      // reference: scan y for points at distance exactly 1 from the arc
      const double ylo = mc.gamma_minus.y_at(x);
      const double yhi = mc.gamma_plus.y_at(x);
      CHECK(std::fabs(sampled_arc_distance(e, {x, ylo}, 4000) - 1.0) < 1e-6);
      if (x >= mc.gamma_plus.x_lo() && x <= mc.gamma_plus.x_hi())
        CHECK(std::fabs(sampled_arc_distance(e, {x, yhi}, 4000) - 1.0) < 1e-6);
      CHECK(ylo <= yhi + 1e-12);
    }
  }
  SUBCASE("gamma_minus stays below gamma_plus") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      UnitArc e = random_lower_arc(rng);
      auto mc = minkowski_curves(e);
      for (int t = 0; t <= 50; ++t) {
        const double x = mc.gamma_minus.x_lo() +
                         (mc.gamma_minus.x_hi() - mc.gamma_minus.x_lo()) * t / 50.0;
        if (!mc.gamma_plus.covers(x)) continue;
        CHECK(mc.gamma_minus.y_at(x) <= mc.gamma_plus.y_at(x) + 1e-9);
      }
    }
  }
}

TEST_CASE("tangent line region") {
  SUBCASE("half circle: the line passes through the center") {
    UnitArc e = make_unit_arc({1.5, -2.0}, kPi, kTwoPi, 0);
    auto region = tangent_line_region(e);
    CHECK(std::fabs(signed_line_offset(region, e.center)) < 1e-9);
    CHECK(region_contains(region, e.center));
  }
  SUBCASE("chord at height sqrt(3)/2: the line passes through q") {
    // endpoints (+-0.5, sqrt(3)/2) around c correspond to angles 120 and 60
    const Point c{0.25, -1.0};
    UnitArc e = make_unit_arc(c, 60.0 * kPi / 180.0, 120.0 * kPi / 180.0, 0);
    auto region = tangent_line_region(e);
    const Point q{c.x, c.y + std::sqrt(3.0)};
    CHECK(std::fabs(signed_line_offset(region, q)) < 1e-9);
  }
  SUBCASE("construction is reflection equivariant") {
    const Point c{0, 0};
    UnitArc e = make_unit_arc(c, 1.1 * kPi, 1.4 * kPi, 0);
    UnitArc m = make_unit_arc(c, kPi + (kTwoPi - e.theta_end),
                              kPi + (kTwoPi - e.theta_start), 1);
    auto ra = tangent_line_region(e);
    auto rb = tangent_line_region(m);
    // mirror of t1 equals t2 of the reflected arc
    CHECK(ra.t1.x == doctest::Approx(-rb.t2.x));
    CHECK(ra.t1.y == doctest::Approx(rb.t2.y));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int i = 0; i < 500; ++i) {
      Point x{u(rng), u(rng)};
      Point xr{-x.x, x.y};
      if (std::fabs(signed_line_offset(ra, x)) < 1e-6) continue;
      CHECK(region_contains(ra, x) == region_contains(rb, xr));
    }
  }
  SUBCASE("degenerate arc is rejected") {
    UnitArc e = make_unit_arc({0, 0}, kPi, kPi + 1e-12, 0);
    CHECK_THROWS_AS(tangent_line_region(e), std::invalid_argument);
  }
}

TEST_CASE("region_contains basics and the zone identity") {
  UnitArc e = make_unit_arc({0, 0}, kPi, kTwoPi, 0);
  auto region = tangent_line_region(e);
  CHECK(region_contains(region, {0, 0}));       // c lies on l for a half circle
  CHECK_FALSE(region_contains(region, {2.5, 0}));

  // Outside z = D(p1) u D(p2), membership in the Minkowski sum equals
  // membership in L(e): rejection sampling against the distance field.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  int tested = 0;
  for (int i = 0; i < 20000 && tested < 10000; ++i) {
    Point x{u(rng), u(rng)};
    const Point p1 = e.first_endpoint();
    const Point p2 = e.second_endpoint();
    if (dist(x, p1) <= 1.0 + 1e-6 || dist(x, p2) <= 1.0 + 1e-6) continue;
    const double d = arc_point_distance(e, x);
    if (std::fabs(d - 1.0) < 1e-6) continue;
    if (std::fabs(dist(x, e.center) - 2.0) < 1e-6) continue;
    if (std::fabs(signed_line_offset(region, x)) < 1e-6) continue;
    CHECK(region_contains(region, x) == (d <= 1.0));
    ++tested;
  }
  CHECK(tested > 5000);
}

TEST_CASE("corollary-style criteria identity on random pairs") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-4.5, 4.5);
  int mismatches = 0, borderline = 0, total = 0;
  for (int i = 0; i < 10000; ++i) {
    UnitArc e = random_lower_arc(rng);
    Point x{u(rng), u(rng)};
    auto region = tangent_line_region(e);
    const bool direct = arc_intersects_disc(e, x);
    const bool via_zones = disc_contains(x, e.first_endpoint(), 1.0) ||
                           disc_contains(x, e.second_endpoint(), 1.0) ||
                           region_contains(region, x);
    ++total;
    if (direct != via_zones) {
      const double d = arc_point_distance(e, x);
      if (std::fabs(d - 1.0) < 1e-6 ||
          std::fabs(signed_line_offset(region, x)) < 1e-6)
        ++borderline;
      else
        ++mismatches;
    }
  }
  CHECK(mismatches == 0);
  CHECK(borderline <= total / 1000);
}
