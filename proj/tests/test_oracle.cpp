#include <cmath>
#include <random>

#include "arcunion/generators.hpp"
#include "arcunion/oracle.hpp"
#include "doctest.h"

using namespace arcunion;
using namespace arcunion::oracle;

TEST_CASE("naive_envelope basics") {
  envelope::Curve a = envelope::Curve::line(1.0, 0.0, 0);
  envelope::Curve b = envelope::Curve::line(-1.0, 0.0, 1);
  std::vector<const envelope::Curve*> set = {&a};
  auto r = naive_envelope(set, {-5.0, 5.0});
  CHECK(r[0].curve_id == 0);
  CHECK(r[0].y == doctest::Approx(-5.0));
  set.push_back(&b);
  r = naive_envelope(set, {-1.0, 1.0});
  CHECK(r[0].curve_id == 0);  // argmin flips at 0
  CHECK(r[1].curve_id == 1);
}

TEST_CASE("naive_boundary") {
  SUBCASE("single disc is a full circle") {
    auto b = naive_boundary({{0, 0}});
    REQUIRE(b.size() == 1);
    REQUIRE(b[0].size() == 1);
    CHECK(b[0][0].first == doctest::Approx(0.0));
    CHECK(b[0][0].second == doctest::Approx(kTwoPi));
  }
  SUBCASE("two overlapping discs leave one arc each") {
    auto b = naive_boundary({{0, 0}, {1, 0}});
    REQUIRE(b.size() == 2);
    REQUIRE(b[0].size() == 1);
    REQUIRE(b[1].size() == 1);
    // endpoints at the two circle intersections (0.5, +-sqrt(3)/2):
    // on disc 0 they sit at angles +-pi/3
    const double span0 = b[0][0].second - b[0][0].first;
    CHECK(span0 == doctest::Approx(kTwoPi - 2 * std::acos(0.5)));
    const double area = union_area_from_boundary({{0, 0}, {1, 0}}, b);
    CHECK(area == doctest::Approx(two_disc_union_area(1.0)).epsilon(1e-12));
  }
  SUBCASE("duplicate centers: one copy owns the circle") {
    auto b = naive_boundary({{0, 0}, {0, 0}});
    CHECK(b[0].size() == 1);
    CHECK(b[1].empty());
    CHECK(union_area_from_boundary({{0, 0}, {0, 0}}, b) ==
          doctest::Approx(kPi));
  }
  SUBCASE("contained-in-union disc contributes nothing") {
    // a tight ring of six discs plus the center: the center discic covered
    std::vector<Point> centers;
    for (int k = 0; k < 6; ++k)
      centers.push_back(
          {1.0 * std::cos(k * kPi / 3), 1.0 * std::sin(k * kPi / 3)});
    centers.push_back({0, 0});
    auto b = naive_boundary(centers);
    CHECK(b[6].empty());
  }
}

TEST_CASE("union area from boundary matches monte carlo") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  std::vector<Point> centers;
  for (int i = 0; i < 25; ++i) centers.push_back({u(rng), u(rng)});
  const double exact = naive_union_area(centers);
  auto mc = mc_area(centers, 2000000, 99);
  CHECK(std::fabs(exact - mc.estimate) < 4 * mc.std_error);
}

TEST_CASE("mc_area basics") {
  CHECK(mc_area({}, 1000, 1).estimate == doctest::Approx(0.0));
  auto one = mc_area({{0, 0}}, 2000000, 7);
  CHECK(std::fabs(one.estimate - kPi) < 4 * one.std_error);
  auto two = mc_area({{0, 0}, {1, 0}}, 2000000, 8);
  CHECK(std::fabs(two.estimate - two_disc_union_area(1.0)) < 4 * two.std_error);
}

TEST_CASE("analytic lens and two-disc values") {
  CHECK(lens_area(1.0) ==
        doctest::Approx(2 * kPi / 3 - std::sqrt(3.0) / 2).epsilon(1e-14));
  // 2*pi - 2*acos(1/2) + sqrt(3)/2 = 5.0548156...
  CHECK(two_disc_union_area(1.0) ==
        doctest::Approx(2 * kPi - 2 * std::acos(0.5) + std::sqrt(3.0) / 2)
            .epsilon(1e-14));
  CHECK(two_disc_union_area(1.0) == doctest::Approx(5.054816).epsilon(1e-6));
  CHECK(lens_area(2.0) == doctest::Approx(0.0));
  CHECK(lens_area(0.0) == doctest::Approx(kPi));
}

TEST_CASE("triple intersection area against monte carlo") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.6);
  for (int i = 0; i < 40; ++i) {
    Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const double t = triple_intersection_area(a, b, c);
    // sample within the bounding box of the three discs
    std::uniform_real_distribution<double> sx(-1.0, 2.6), sy(-1.0, 2.6);
    int hits = 0;
    const int n = 200000;
    for (int s = 0; s < n; ++s) {
      Point p{sx(rng), sy(rng)};
      if (dist(p, a) <= 1 && dist(p, b) <= 1 && dist(p, c) <= 1) ++hits;
    }
    const double box = 3.6 * 3.6;
    const double est = box * hits / n;
    const double se = box * std::sqrt(std::max(1e-12, (est / box) * (1 - est / box) / n));
    CHECK(std::fabs(t - est) < std::max(5 * se, 2e-3));
  }
}

TEST_CASE("three disc union via inclusion-exclusion") {
  // far apart: 3 pi
  CHECK(three_disc_union_area({0, 0}, {10, 0}, {0, 10}) ==
        doctest::Approx(3 * kPi));
  // coincident: pi
  CHECK(three_disc_union_area({0, 0}, {0, 0}, {0, 0}) == doctest::Approx(kPi));
  // generic cluster cross-checked against the boundary construction
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.8);
  for (int i = 0; i < 200; ++i) {
    Point a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    const double ie = three_disc_union_area(a, b, c);
    const double green = naive_union_area({a, b, c});
    CHECK(ie == doctest::Approx(green).epsilon(1e-9));
  }
}

TEST_CASE("naive_arc_query") {
  CHECK(naive_arc_query({}, {0, 0}).empty());
  UnitArc e = make_unit_arc({0, 2}, kPi, kTwoPi, 5);
  auto got = naive_arc_query({e}, {0, 0.5});
  REQUIRE(got.size() == 1);
  CHECK(got[0] == 5);
}

TEST_CASE("quadratic worst-case regression baseline") {
  // frozen from the reference construction at n = 64
  const auto pts = arcunion::gen::figure_one_stream(64);
  REQUIRE(pts.size() == 64);
  const auto nb = naive_boundary(pts);
  std::size_t arcs = 0;
  for (const auto& d : nb) arcs += d.size();
  CHECK(arcs == 156);
  const double area = union_area_from_boundary(pts, nb);
  CHECK(area == doctest::Approx(28.079732588).epsilon(1e-9));
}
