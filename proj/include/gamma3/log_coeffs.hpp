#pragma once

#include <vector>

#include "gamma3/series.hpp"

namespace gamma3 {

// gamma_1 .. gamma_N of log(f(z)/z) = 2 sum gamma_n z^n.
class LogCoefficientVector {
 public:
  explicit LogCoefficientVector(std::vector<Complex> entries)
      : entries_(std::move(entries)) {}

  // gamma_n, 1-based.
  Complex gamma(int n) const { return entries_[static_cast<size_t>(n - 1)]; }
  int count() const { return static_cast<int>(entries_.size()); }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

// gamma_n = (1/2) [z^n] log(f(z)/z). gamma_n consumes a_2 .. a_{n+1}, so
// f.order >= n_max + 1 is required.
LogCoefficientVector log_coefficients(const NormalizedFunction& f, int n_max);

struct GammaTriple {
  Complex gamma1, gamma2, gamma3;
};

// Closed forms: gamma1 = a2/2, gamma2 = (a3 - a2^2/2)/2,
// gamma3 = (a4 - a2 a3 + a2^3/3)/2.
GammaTriple gamma_closed_form(Complex a2, Complex a3, Complex a4);

}  // namespace gamma3
