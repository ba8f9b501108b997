#include <doctest.h>

#include <cmath>

#include "gamma3/bound.hpp"

using namespace gamma3;
using namespace gamma3::bound;

TEST_CASE("phi and psi at the named points") {
  CHECK(phi({0.0, 0.0}) == 0.0);
  CHECK(phi({1.0, 0.0}) == 0.0);
  const double a_star = std::sqrt(13.0) / 5.0;
  CHECK(phi({a_star, -6.0 / 25.0}) == doctest::Approx(36.0 / 25.0).epsilon(1e-14));
  CHECK(psi({0.0, 0.0}) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(psi({1.0, 0.0}) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(psi({a_star, -6.0 / 25.0}) ==
        doctest::Approx(133.0 / 225.0).epsilon(1e-14));
}

TEST_CASE("region_bounds") {
  const auto [lo0, hi0] = region_bounds(0.0);
  CHECK(lo0 == -0.5);
  CHECK(hi0 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  const auto [lo1, hi1] = region_bounds(1.0);
  CHECK(lo1 == 0.0);
  CHECK(hi1 == 0.0);
  const auto [lo, hi] = region_bounds(std::sqrt(13.0) / 5.0);
  CHECK(lo == doctest::Approx(-6.0 / 25.0).epsilon(1e-14));
  CHECK(lo <= hi);
  CHECK_THROWS_AS(region_bounds(1.5), OutOfRange);
  CHECK_THROWS_AS(region_bounds(-0.1), OutOfRange);

  for (int i = 0; i <= 1000; ++i) {
    const auto [t_min, t_max] = region_bounds(i / 1000.0);
    CHECK(t_min <= t_max);
  }
}

TEST_CASE("stationary points") {
  const auto pts = stationary_points();
  REQUIRE(pts.size() == 1);
  const auto [ga, gt] = phi_gradient(pts[0]);
  CHECK(ga == 0.0);
  CHECK(gt == 0.0);

  // the boundary maximizer is not interior-stationary
  const auto [ga2, gt2] = phi_gradient({std::sqrt(13.0) / 5.0, -6.0 / 25.0});
  CHECK(gt2 == doctest::Approx(-40.0 / 25.0).epsilon(1e-13));

  // substituting t = -2a^2 reduces the first component to 8a
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    const auto [g1, g2] = phi_gradient({a, -2.0 * a * a});
    CHECK(std::abs(g1 - 8.0 * a) < 1e-13);
    CHECK(g2 == 0.0);
  }
}

TEST_CASE("edge profiles") {
  CHECK(edge_profile(Edge::t_lower, std::sqrt(13.0) / 5.0) ==
        doctest::Approx(36.0 / 25.0).epsilon(1e-14));
  CHECK(edge_profile(Edge::t_lower, 0.0) == doctest::Approx(-0.25));
  CHECK(edge_profile(Edge::a0, 0.0) == 0.0);
  CHECK(edge_profile(Edge::a0, 0.25) == doctest::Approx(-0.0625));
  CHECK(edge_profile(Edge::a1, 0.0) == 0.0);
  CHECK_THROWS_AS(edge_profile(Edge::t_lower, 1.5), OutOfRange);
  CHECK_THROWS_AS(edge_profile(Edge::a0, 0.6), OutOfRange);
  CHECK_THROWS_AS(edge_profile(Edge::a1, 0.1), OutOfRange);
}

TEST_CASE("exact lower-edge identity") {
  const EdgeIdentity id = exact_lower_edge_identity();
  CHECK(id.poly.c2 == rat(-25, 4));
  CHECK(id.poly.c1 == rat(13, 2));
  CHECK(id.poly.c0 == rat(-1, 4));
  CHECK(id.argmax_u == rat(13, 25));
  CHECK(id.max_value == rat(36, 25));
  CHECK_FALSE(id.printed_factor_matches);  // the printed -1/4 is a typo
}

TEST_CASE("exact upper-edge vertex") {
  const EdgeIdentity id = exact_upper_edge_identity();
  CHECK(id.poly.c2 == Rational(-4));
  CHECK(id.poly.c1 == rat(13, 3));
  CHECK(id.poly.c0 == rat(-1, 3));
  CHECK(id.argmax_u == rat(13, 24));
  CHECK(id.max_value == rat(121, 144));
  CHECK(id.max_value < rat(36, 25));

  // the polynomial dominates the true upper edge pointwise
  for (int i = 0; i <= 10000; ++i) {
    const double a = i / 10000.0;
    const double u = a * a;
    const double poly = (-12.0 * u * u + 13.0 * u - 1.0) / 3.0;
    CHECK(edge_profile(Edge::t_upper, a) <= poly + 1e-12);
  }
}

TEST_CASE("maximize_psi reproduces the bound") {
  const OptimizationResult r = maximize_psi(2001, 1e-12);
  CHECK(std::abs(r.max_value - 133.0 / 225.0) < 1e-9);
  CHECK(std::abs(r.argmax.a - std::sqrt(13.0) / 5.0) < 1e-6);
  CHECK(std::abs(r.argmax.t + 0.24) < 1e-6);
  CHECK(r.edge_attained == Edge::t_lower);
}

TEST_CASE("serial and parallel scans are bit-identical") {
  for (int grid : {101, 500}) {
    const OptimizationResult s = maximize_psi_serial(grid, 1e-12);
    const OptimizationResult p = maximize_psi(grid, 1e-12, true);
    CHECK(s.max_value == p.max_value);
    CHECK(s.argmax.a == p.argmax.a);
    CHECK(s.argmax.t == p.argmax.t);
    CHECK(s.edge_attained == p.edge_attained);
  }
}

TEST_CASE("coarse grids never exceed the true maximum") {
  double prev = 0.0;
  for (int grid : {2, 3, 5, 9, 17}) {
    const OptimizationResult r = maximize_psi(grid, 1e-10);
    CHECK(r.max_value <= 133.0 / 225.0 + 1e-9);
    CHECK(r.max_value >= prev - 1e-12);  // nested-grid monotonicity
    prev = r.max_value;
  }
  CHECK_THROWS_AS(maximize_psi(1, 1e-10), OutOfRange);
  CHECK_THROWS_AS(maximize_psi(10, 0.0), OutOfRange);
}

TEST_CASE("bound constant") {
  CHECK(bound_constant() == doctest::Approx(std::sqrt(133.0) / 15.0).epsilon(1e-16));
  CHECK(bound_constant() * bound_constant() ==
        doctest::Approx(133.0 / 225.0).epsilon(1e-15));
  CHECK(bound_constant() > 1.0 / 3.0);
}

TEST_CASE("psi never exceeds 133/225 on the region") {
  for (long long k = 0; k < 100000; ++k)
    CHECK(psi(quasi_random_point(k)) <= 133.0 / 225.0 + 1e-12);
}
