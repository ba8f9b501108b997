#include "gamma3/bivariate.hpp"

#include <string>

namespace gamma3 {

BivariateSeries divided_difference(const NormalizedFunction& f, int degree) {
  if (f.order() < degree + 1)
    throw InsufficientTruncation(
        "divided_difference: need f.order >= " + std::to_string(degree + 1) +
        ", got " + std::to_string(f.order()));
  BivariateSeries h(degree);
  // (t^n - z^n)/(t - z) = sum_{p+q = n-1} t^p z^q, so b_{p,q} = a_{p+q+1}.
  for (int p = 0; p <= degree; ++p)
    for (int q = 0; p + q <= degree; ++q) h.set_coeff(p, q, f.a(p + q + 1));
  return h;
}

}  // namespace gamma3
