#include "gamma3/log_coeffs.hpp"

#include <string>

namespace gamma3 {

LogCoefficientVector log_coefficients(const NormalizedFunction& f,
                                      int n_max) {
  // gamma_n consumes a_2 .. a_{n+1} (f = z + a z^{n+1} has gamma_n = a/2).
  if (f.order() < n_max + 1)
    throw InsufficientTruncation(
        "log_coefficients: need f.order >= " + std::to_string(n_max + 1));
  const UnivariateSeries log_series = series_log(f.over_z());
  std::vector<Complex> gamma(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    gamma[static_cast<size_t>(n - 1)] = 0.5 * log_series.coeff(n);
  return LogCoefficientVector(std::move(gamma));
}

GammaTriple gamma_closed_form(Complex a2, Complex a3, Complex a4) {
  GammaTriple g;
  g.gamma1 = 0.5 * a2;
  g.gamma2 = 0.5 * (a3 - 0.5 * a2 * a2);
  g.gamma3 = 0.5 * (a4 - a2 * a3 + a2 * a2 * a2 / 3.0);
  return g;
}

}  // namespace gamma3
