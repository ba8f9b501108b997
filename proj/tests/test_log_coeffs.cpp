#include <doctest.h>

#include <random>

#include "gamma3/catalog.hpp"
#include "gamma3/log_coeffs.hpp"

using namespace gamma3;

TEST_CASE("log_coefficients on the standard maps") {
  const NormalizedFunction koebe = catalog_function("koebe", 21).series;
  const LogCoefficientVector g = log_coefficients(koebe, 20);
  for (int n = 1; n <= 20; ++n)
    CHECK(std::abs(g.gamma(n) - Complex(1.0 / n)) < 1e-13);

  const NormalizedFunction id = catalog_function("identity", 11).series;
  const LogCoefficientVector gz = log_coefficients(id, 10);
  for (int n = 1; n <= 10; ++n) CHECK(std::abs(gz.gamma(n)) == 0.0);

  const NormalizedFunction r = catalog_function("right_half_line", 11).series;
  const LogCoefficientVector gr = log_coefficients(r, 10);
  for (int n = 1; n <= 10; ++n)
    CHECK(std::abs(gr.gamma(n) - Complex(0.5 / n)) < 1e-14);

  CHECK_THROWS_AS(log_coefficients(koebe, 21), InsufficientTruncation);
}

TEST_CASE("gamma_closed_form printed formulas") {
  const GammaTriple koebe = gamma_closed_form(2.0, 3.0, 4.0);
  CHECK(std::abs(koebe.gamma1 - Complex(1.0)) < 1e-15);
  CHECK(std::abs(koebe.gamma2 - Complex(0.5)) < 1e-15);
  CHECK(std::abs(koebe.gamma3 - Complex(1.0 / 3.0)) < 1e-15);

  const GammaTriple zero = gamma_closed_form(0.0, 0.0, 0.0);
  CHECK(std::abs(zero.gamma1) == 0.0);
  CHECK(std::abs(zero.gamma2) == 0.0);
  CHECK(std::abs(zero.gamma3) == 0.0);

  const GammaTriple half = gamma_closed_form(1.0, 1.0, 1.0);
  CHECK(std::abs(half.gamma1 - Complex(0.5)) < 1e-15);
  CHECK(std::abs(half.gamma2 - Complex(0.25)) < 1e-15);
  CHECK(std::abs(half.gamma3 - Complex(1.0 / 6.0)) < 1e-15);
}

TEST_CASE("closed forms agree with the expansion") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> mag(0.0, 1.0), ang(0.0, 2 * M_PI);
  auto check_one = [](const NormalizedFunction& f) {
    const LogCoefficientVector g = log_coefficients(f, 3);
    const GammaTriple c = gamma_closed_form(f.a(2), f.a(3), f.a(4));
    CHECK(std::abs(c.gamma1 - g.gamma(1)) < 1e-11);
    CHECK(std::abs(c.gamma2 - g.gamma(2)) < 1e-11);
    CHECK(std::abs(c.gamma3 - g.gamma(3)) < 1e-11);
  };
  for (const auto& entry : full_catalog(10)) check_one(entry.series);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Complex> c(9, Complex(0.0));
    c[1] = 1.0;
    for (int k = 2; k <= 8; ++k)
      c[static_cast<size_t>(k)] =
          std::polar(std::sqrt(mag(rng)) / (k * k), ang(rng));
    check_one(NormalizedFunction(UnivariateSeries(std::move(c))));
  }
}

TEST_CASE("catalog screens: |gamma_1| <= 1, |gamma_2| <= 1/2 + 1/e") {
  for (const auto& entry : full_catalog(10)) {
    const LogCoefficientVector g = log_coefficients(entry.series, 3);
    CHECK(std::abs(g.gamma(1)) <= 1.0 + 1e-9);
    CHECK(std::abs(g.gamma(2)) <= 0.5 + std::exp(-1.0) + 1e-9);
  }
}

TEST_CASE("|gamma_n| is rotation invariant") {
  const NormalizedFunction koebe = catalog_function("koebe", 16).series;
  const LogCoefficientVector g = log_coefficients(koebe, 15);
  for (double theta : {0.3, 1.7, -2.5}) {
    const LogCoefficientVector gr =
        log_coefficients(rotate(koebe, theta), 15);
    for (int n = 1; n <= 15; ++n)
      CHECK(std::abs(std::abs(gr.gamma(n)) - std::abs(g.gamma(n))) < 1e-12);
  }
}
