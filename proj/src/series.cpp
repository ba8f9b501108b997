#include "gamma3/series.hpp"

namespace gamma3 {

NormalizedFunction sqrt_transform(const NormalizedFunction& f) {
  const int n = f.order();
  // g(w) = f(z^2)/z^2 with w = z^2; g_k = a_{k+1}. Coefficients of the result
  // up to z^n only need g up to w^((n-1)/2).
  const int gw = (n - 1) / 2;
  std::vector<Complex> g(static_cast<size_t>(gw) + 1);
  for (int k = 0; k <= gw; ++k) g[static_cast<size_t>(k)] = f.a(k + 1);
  const UnivariateSeries s = series_sqrt(UnivariateSeries(std::move(g)));

  std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
  for (int k = 0; 2 * k + 1 <= n; ++k)
    out[static_cast<size_t>(2 * k + 1)] = s.coeff(k);
  return NormalizedFunction(UnivariateSeries(std::move(out)));
}

NormalizedFunction rotate(const NormalizedFunction& f, double theta) {
  const int n = f.order();
  std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
  out[1] = Complex(1.0);
  for (int k = 2; k <= n; ++k)
    out[static_cast<size_t>(k)] =
        std::polar(1.0, (k - 1) * theta) * f.a(k);
  return NormalizedFunction(UnivariateSeries(std::move(out)));
}

}  // namespace gamma3
