#pragma once

#include <vector>

#include "gamma3/bivariate.hpp"
#include "gamma3/series.hpp"

namespace gamma3 {

// How a table was produced. The Grunsky inequality takes a different index
// lattice for odd tables (Eq.-(6)-style, only odd indices) than for direct
// ones, so the split is keyed on the table itself rather than a caller flag.
enum class TableProvenance { direct, odd };

// Symmetric table of Grunsky coefficients omega_{p,q}, 1 <= p,q <= size,
// from log((f(t)-f(z))/(t-z)) = sum omega_{p,q} t^p z^q. slice0 holds the
// z = 0 row omega_{p,0} = 2 gamma_p for p = 1..2*size.
class GrunskyTable {
 public:
  GrunskyTable(int size, TableProvenance provenance)
      : size_(size),
        provenance_(provenance),
        omega_(static_cast<size_t>(size) * size),
        slice0_(static_cast<size_t>(2 * size)) {}

  int size() const { return size_; }
  TableProvenance provenance() const { return provenance_; }

  Complex omega(int p, int q) const {
    return omega_[static_cast<size_t>(p - 1) * size_ + (q - 1)];
  }
  void set_omega(int p, int q, Complex v) {
    omega_[static_cast<size_t>(p - 1) * size_ + (q - 1)] = v;
  }

  // omega_{p,0}, 1 <= p <= 2*size.
  Complex slice0(int p) const { return slice0_[static_cast<size_t>(p - 1)]; }
  void set_slice0(int p, Complex v) { slice0_[static_cast<size_t>(p - 1)] = v; }

 private:
  int size_;
  TableProvenance provenance_;
  std::vector<Complex> omega_;
  std::vector<Complex> slice0_;
};

// Test vector x_1 .. x_K for the quadratic form; x(p) = 0 beyond the stored
// entries. Entry i of the constructor vector is x_{i+1}.
class TestVector {
 public:
  TestVector() = default;
  explicit TestVector(std::vector<Complex> entries)
      : entries_(std::move(entries)) {}

  Complex x(int p) const {
    return (p >= 1 && p <= static_cast<int>(entries_.size()))
               ? entries_[static_cast<size_t>(p - 1)]
               : Complex(0.0);
  }
  int support() const { return static_cast<int>(entries_.size()); }

 private:
  std::vector<Complex> entries_;
};

struct QuadraticFormCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  int truncation = 0;  // outer sum cut at q = truncation (odd: 2q-1)
  bool equality = false;
};

struct TwoTermCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

struct FirstCoefficients {
  Complex a2, a3, a4;
};

// Table of omega_{p,q} for p,q <= size via divided_difference + bivariate
// log at total degree 2*size. Requires f.order >= 2*size + 1.
GrunskyTable grunsky_table(const NormalizedFunction& f, int size);

// Grunsky table of the square-root transform f2 = z sqrt(f(z^2)/z^2), size
// 2*m (odd indices up to 2*m - 1). Requires f.order >= 4*m + 2. Entries of
// mixed index parity are verified to vanish; only omega_{2p-1,2q-1} feed the
// odd-form inequality.
GrunskyTable odd_grunsky(const NormalizedFunction& f, int m);

// Both sides of the Grunsky inequality truncated at outer index trunc_q.
// Odd tables evaluate the odd-index form
//   sum_{q<=Q} (2q-1) |sum_p omega_{2p-1,2q-1} x_{2p-1}|^2
//     <= sum_p |x_{2p-1}|^2 / (2p-1),
// direct tables the all-index form with weights q and 1/p. A truncated lhs
// underestimates the full sum, so lhs <= rhs remains a valid necessary check.
QuadraticFormCheck grunsky_quadratic(const GrunskyTable& table,
                                     const TestVector& x, int trunc_q);

// The two-term specialization
//   |w11 x1 + w31 x3|^2 + 3 |w13 x1 + w33 x3|^2 <= |x1|^2 + |x3|^2 / 3.
// Odd tables only; table.size >= 3.
TwoTermCheck two_term_inequality(const GrunskyTable& table, Complex x1,
                                 Complex x3);

// a2 = 2 w11, a3 = 2 w13 + 3 w11^2, a4 = 2 w33 + 8 w11 w13 + (10/3) w11^3,
// reading the odd table of f2 back to the Taylor coefficients of f.
FirstCoefficients coefficients_from_grunsky(const GrunskyTable& table);

// gamma_3 = w33 + 2 w11 w13 (odd tables only).
Complex gamma3_from_grunsky(const GrunskyTable& table);

// Relative equality tolerance used to flag attained bounds.
inline bool quadratic_equality(double lhs, double rhs) {
  return std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs);
}

}  // namespace gamma3
