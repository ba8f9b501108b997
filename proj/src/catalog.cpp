#include "gamma3/catalog.hpp"

#include <cmath>

namespace gamma3 {

namespace {

constexpr double kDefaultRotation = M_PI / 3.0;
constexpr double kDefaultTwoPointAlpha = M_PI / 2.0;
constexpr double kDefaultTwoPointBeta = -M_PI / 2.0;

NormalizedFunction from_rule(int order, const std::vector<Complex>& a) {
  std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
  for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = a[n - 1];
  return NormalizedFunction(UnivariateSeries(std::move(c)));
}

double param_or(const std::vector<double>& params, size_t i, double fallback) {
  if (i < params.size()) {
    if (!std::isfinite(params[i]))
      throw ParameterOutOfRange("catalog_function: non-finite parameter");
    return params[i];
  }
  return fallback;
}

}  // namespace

CatalogEntry catalog_function(const std::string& name,
                              const std::vector<double>& params, int order) {
  if (order < 1) throw OutOfRange("catalog_function: order must be >= 1");
  std::vector<Complex> a(static_cast<size_t>(order), Complex(0.0));
  a[0] = 1.0;
  std::vector<Complex> gamma(static_cast<size_t>(std::max(order - 1, 0)),
                             Complex(0.0));
  const int gmax = static_cast<int>(gamma.size());

  if (name == "identity") {
    return {name, from_rule(order, a), a, gamma, "f(z) = z; trivially univalent"};
  }
  if (name == "koebe") {
    for (int n = 2; n <= order; ++n) a[n - 1] = static_cast<double>(n);
    for (int n = 1; n <= gmax; ++n) gamma[n - 1] = 1.0 / n;
    return {name, from_rule(order, a), a, gamma,
            "k(z) = z/(1-z)^2, maps the disc onto C minus a radial slit"};
  }
  if (name == "koebe_rotation") {
    const double theta = param_or(params, 0, kDefaultRotation);
    for (int n = 2; n <= order; ++n)
      a[n - 1] = static_cast<double>(n) * std::polar(1.0, (n - 1) * theta);
    for (int n = 1; n <= gmax; ++n)
      gamma[n - 1] = std::polar(1.0, n * theta) / static_cast<double>(n);
    return {name, from_rule(order, a), a, gamma,
            "rotated Koebe function; shares all |a_n| and |gamma_n| with k"};
  }
  if (name == "right_half_line") {
    for (int n = 2; n <= order; ++n) a[n - 1] = 1.0;
    for (int n = 1; n <= gmax; ++n) gamma[n - 1] = 0.5 / n;
    return {name, from_rule(order, a), a, gamma,
            "z/(1-z), conformal onto a half-plane"};
  }
  if (name == "odd_koebe") {
    for (int n = 3; n <= order; n += 2) a[n - 1] = 1.0;
    for (int n = 2; n <= gmax; n += 2) gamma[n - 1] = 1.0 / n;
    return {name, from_rule(order, a), a, gamma,
            "z/(1-z^2), the square-root transform of the Koebe function"};
  }
  if (name == "log_map") {
    for (int n = 3; n <= order; n += 2) a[n - 1] = 1.0 / n;
    return {name, from_rule(order, a), a, std::nullopt,
            "(1/2) log((1+z)/(1-z)), conformal onto a horizontal strip"};
  }
  if (name == "convex_parabola") {
    if (order >= 2) a[1] = -0.5;
    for (int n = 1; n <= gmax; ++n)
      gamma[n - 1] = -1.0 / (n * std::pow(2.0, n + 1));
    return {name, from_rule(order, a), a, gamma,
            "z - z^2/2, convex univalent (f' = 1 - z is zero-free)"};
  }
  if (name == "two_point") {
    const Complex u = std::polar(1.0, param_or(params, 0, kDefaultTwoPointAlpha));
    const Complex v = std::polar(1.0, param_or(params, 1, kDefaultTwoPointBeta));
    // z/((1-uz)(1-vz)): a_n = sum_{k=0}^{n-1} u^k v^{n-1-k}.
    for (int n = 1; n <= order; ++n) {
      Complex s(0.0), uk(1.0);
      for (int k = 0; k < n; ++k) {
        s += uk * std::pow(v, n - 1 - k);
        uk *= u;
      }
      a[n - 1] = s;
    }
    for (int n = 1; n <= gmax; ++n)
      gamma[n - 1] = (std::pow(u, n) + std::pow(v, n)) / (2.0 * n);
    return {name, from_rule(order, a), a, gamma,
            "z/((1-uz)(1-vz)) with |u| = |v| = 1; maps onto a two-slit plane"};
  }
  throw UnknownCatalogEntry("catalog_function: unknown name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"identity",   "koebe",          "koebe_rotation", "right_half_line",
          "odd_koebe",  "log_map",        "convex_parabola", "two_point"};
}

std::vector<CatalogEntry> full_catalog(int order) {
  std::vector<CatalogEntry> entries;
  for (const auto& name : catalog_names())
    entries.push_back(catalog_function(name, {}, order));
  return entries;
}

}  // namespace gamma3
