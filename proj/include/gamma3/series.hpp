#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "gamma3/errors.hpp"
#include "gamma3/rational.hpp"

namespace gamma3 {

using Complex = std::complex<double>;

// Truncated power series c0 + c1 z + ... + cN z^N over a coefficient field K.
// Values are immutable once built; all operations return new series. Binary
// operations truncate to the minimum of the operand orders, never pad.
template <class K>
class BasicSeries {
 public:
  explicit BasicSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}

  explicit BasicSeries(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const K& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }

  void set_coeff(int k, const K& v) { coeffs_[static_cast<size_t>(k)] = v; }

  const std::vector<K>& coeffs() const { return coeffs_; }

  // Drops coefficients above new_order (new_order <= order()).
  BasicSeries truncated(int new_order) const {
    std::vector<K> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return BasicSeries(std::move(c));
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    const int n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeff(k) + b.coeff(k);
    return r;
  }

  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
    const int n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeff(k) - b.coeff(k);
    return r;
  }

  // Cauchy product truncated to min(order a, order b).
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    const int n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (int k = 0; k <= n; ++k) {
      K s{};
      for (int i = 0; i <= k; ++i) s += a.coeff(i) * b.coeff(k - i);
      r.coeffs_[k] = s;
    }
    return r;
  }

  // Formal quotient by forward substitution; requires b(0) != 0.
  friend BasicSeries operator/(const BasicSeries& a, const BasicSeries& b) {
    if (b.coeff(0) == K{})
      throw DivisionBySingularSeries(
          "series division: divisor has zero constant term");
    const int n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (int k = 0; k <= n; ++k) {
      K s = a.coeff(k);
      for (int i = 0; i < k; ++i) s -= r.coeffs_[i] * b.coeff(k - i);
      r.coeffs_[k] = s / b.coeff(0);
    }
    return r;
  }

 private:
  std::vector<K> coeffs_;
};

using UnivariateSeries = BasicSeries<Complex>;
using RationalSeries = BasicSeries<Rational>;

// Formal logarithm of a series with unit constant term, via L'.u = u':
//   L_n = u_n - (1/n) sum_{k=1}^{n-1} k L_k u_{n-k},  L_0 = 0.
// The unit constant term pins the branch; no pointwise evaluation happens.
template <class K>
BasicSeries<K> series_log(const BasicSeries<K>& u) {
  if (u.coeff(0) != K(1))
    throw NonUnitConstantTerm("series_log: constant term must be 1");
  const int n = u.order();
  BasicSeries<K> log_series(n);
  for (int m = 1; m <= n; ++m) {
    K s = u.coeff(m);
    K weighted{};
    for (int k = 1; k < m; ++k)
      weighted += K(k) * log_series.coeff(k) * u.coeff(m - k);
    log_series.set_coeff(m, s - weighted / K(m));
  }
  return log_series;
}

// Formal exponential with E(0) = 1, the inverse of series_log. Used by the
// round-trip property tests.
template <class K>
BasicSeries<K> series_exp(const BasicSeries<K>& l) {
  if (l.coeff(0) != K{})
    throw NonUnitConstantTerm("series_exp: constant term must be 0");
  const int n = l.order();
  BasicSeries<K> e(n);
  e.set_coeff(0, K(1));
  for (int m = 1; m <= n; ++m) {
    K s{};
    for (int k = 1; k <= m; ++k) s += K(k) * l.coeff(k) * e.coeff(m - k);
    e.set_coeff(m, s / K(m));
  }
  return e;
}

// Formal square root with S(0) = +1:
//   S_n = (u_n - sum_{k=1}^{n-1} S_k S_{n-k}) / 2.
template <class K>
BasicSeries<K> series_sqrt(const BasicSeries<K>& u) {
  if (u.coeff(0) != K(1))
    throw NonUnitConstantTerm("series_sqrt: constant term must be 1");
  const int n = u.order();
  BasicSeries<K> s(n);
  s.set_coeff(0, K(1));
  for (int m = 1; m <= n; ++m) {
    K acc = u.coeff(m);
    for (int k = 1; k < m; ++k) acc -= s.coeff(k) * s.coeff(m - k);
    s.set_coeff(m, acc / K(2));
  }
  return s;
}

// A normalized analytic function z + a2 z^2 + ... ; a(1) = 1 always.
class NormalizedFunction {
 public:
  explicit NormalizedFunction(UnivariateSeries series)
      : series_(std::move(series)) {
    if (series_.order() < 1 || series_.coeff(0) != Complex(0.0) ||
        series_.coeff(1) != Complex(1.0))
      throw std::invalid_argument(
          "NormalizedFunction: series must have c0 = 0, c1 = 1");
  }

  int order() const { return series_.order(); }
  const UnivariateSeries& series() const { return series_; }

  // Taylor coefficient a_n; a(1) = 1.
  Complex a(int n) const { return series_.coeff(n); }

  // f(z)/z as a unit-constant series of order N-1.
  UnivariateSeries over_z() const {
    std::vector<Complex> c(series_.coeffs().begin() + 1,
                           series_.coeffs().end());
    return UnivariateSeries(std::move(c));
  }

 private:
  UnivariateSeries series_;
};

// The square-root transform z * sqrt(f(z^2)/z^2). The result is odd and keeps
// the input order; its coefficient of z^(2k+1) consumes a_1..a_(k+1).
NormalizedFunction sqrt_transform(const NormalizedFunction& f);

// e^{-i theta} f(e^{i theta} z): a_n -> e^{i(n-1)theta} a_n.
NormalizedFunction rotate(const NormalizedFunction& f, double theta);

// Default truncation order used by the catalog and the CLI.
inline constexpr int kDefaultOrder = 25;

}  // namespace gamma3
