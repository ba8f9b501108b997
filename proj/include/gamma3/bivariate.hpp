#pragma once

#include <utility>
#include <vector>

#include "gamma3/series.hpp"

namespace gamma3 {

// Double power series in (t, z) truncated by total degree: coefficients
// b_{p,q} are stored for the triangular index set p + q <= D. The log
// recurrence is closed under total degree, so this is the minimal correct
// coefficient budget for Grunsky tables.
template <class K>
class BasicBivariateSeries {
 public:
  explicit BasicBivariateSeries(int degree)
      : degree_(degree),
        coeffs_(static_cast<size_t>(degree + 1) * (degree + 2) / 2) {}

  int degree() const { return degree_; }

  const K& coeff(int p, int q) const { return coeffs_[index(p, q)]; }
  void set_coeff(int p, int q, const K& v) { coeffs_[index(p, q)] = v; }

 private:
  // Row-major over p, triangular: row p holds q = 0..D-p.
  size_t index(int p, int q) const {
    // offset of row p = sum_{i<p} (D+1-i)
    const size_t d = static_cast<size_t>(degree_);
    const size_t pp = static_cast<size_t>(p);
    return pp * (d + 1) - pp * (pp - 1) / 2 + static_cast<size_t>(q);
  }

  int degree_;
  std::vector<K> coeffs_;
};

using BivariateSeries = BasicBivariateSeries<Complex>;
using RationalBivariateSeries = BasicBivariateSeries<Rational>;

// (f(t) - f(z)) / (t - z) as a bivariate series: b_{p,q} = a_{p+q+1},
// symmetric in (p, q) by construction. Requires f.order >= degree + 1.
BivariateSeries divided_difference(const NormalizedFunction& f, int degree);

// Formal logarithm by graded recurrence on total degree n = p + q, using the
// Euler operator t d/dt + z d/dz:
//   L_{p,q} = h_{p,q} - (1/n) sum_{0 < i+j < n} (i+j) L_{i,j} h_{p-i,q-j}.
template <class K>
BasicBivariateSeries<K> bivariate_log(const BasicBivariateSeries<K>& h) {
  if (h.coeff(0, 0) != K(1))
    throw NonUnitConstantTerm("bivariate_log: constant term must be 1");
  const int d = h.degree();
  BasicBivariateSeries<K> l(d);
  for (int n = 1; n <= d; ++n) {
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      K s = h.coeff(p, q);
      K weighted{};
      for (int i = 0; i <= p; ++i) {
        for (int j = 0; j <= q; ++j) {
          const int g = i + j;
          if (g == 0 || g == n) continue;
          weighted += K(g) * l.coeff(i, j) * h.coeff(p - i, q - j);
        }
      }
      l.set_coeff(p, q, s - weighted / K(n));
    }
  }
  return l;
}

// Inverse of bivariate_log; test-side round trips.
template <class K>
BasicBivariateSeries<K> bivariate_exp(const BasicBivariateSeries<K>& l) {
  if (l.coeff(0, 0) != K{})
    throw NonUnitConstantTerm("bivariate_exp: constant term must be 0");
  const int d = l.degree();
  BasicBivariateSeries<K> e(d);
  e.set_coeff(0, 0, K(1));
  for (int n = 1; n <= d; ++n) {
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      K s{};
      for (int i = 0; i <= p; ++i) {
        for (int j = 0; j <= q; ++j) {
          const int g = i + j;
          if (g == 0) continue;
          s += K(g) * l.coeff(i, j) * e.coeff(p - i, q - j);
        }
      }
      e.set_coeff(p, q, s / K(n));
    }
  }
  return e;
}

}  // namespace gamma3
