#include "gamma3/grunsky.hpp"

#include <cmath>
#include <string>

namespace gamma3 {

GrunskyTable grunsky_table(const NormalizedFunction& f, int size) {
  const int degree = 2 * size;
  if (f.order() < degree + 1)
    throw InsufficientTruncation(
        "grunsky_table: need f.order >= " + std::to_string(degree + 1) +
        " for size " + std::to_string(size));
  const BivariateSeries log_dd =
      bivariate_log(divided_difference(f, degree));
  GrunskyTable table(size, TableProvenance::direct);
  for (int p = 1; p <= size; ++p)
    for (int q = 1; q <= size; ++q) table.set_omega(p, q, log_dd.coeff(p, q));
  for (int p = 1; p <= degree; ++p) table.set_slice0(p, log_dd.coeff(p, 0));
  return table;
}

GrunskyTable odd_grunsky(const NormalizedFunction& f, int m) {
  if (f.order() < 4 * m + 2)
    throw InsufficientTruncation(
        "odd_grunsky: need f.order >= " + std::to_string(4 * m + 2) +
        " for size " + std::to_string(m));
  const GrunskyTable table = grunsky_table(sqrt_transform(f), 2 * m);
  GrunskyTable odd(table.size(), TableProvenance::odd);
  for (int p = 1; p <= table.size(); ++p) {
    for (int q = 1; q <= table.size(); ++q) {
      // f2 is odd, so omega_{p,q} with p + q odd must vanish identically.
      if ((p + q) % 2 != 0 && std::abs(table.omega(p, q)) > 1e-12)
        throw std::logic_error(
            "odd_grunsky: mixed-parity entry does not vanish");
      odd.set_omega(p, q, table.omega(p, q));
    }
  }
  for (int p = 1; p <= 2 * table.size(); ++p)
    odd.set_slice0(p, table.slice0(p));
  return odd;
}

QuadraticFormCheck grunsky_quadratic(const GrunskyTable& table,
                                     const TestVector& x, int trunc_q) {
  QuadraticFormCheck check;
  check.truncation = trunc_q;
  if (table.provenance() == TableProvenance::odd) {
    if (2 * trunc_q - 1 > table.size())
      throw InsufficientTruncation(
          "grunsky_quadratic: odd table of size " +
          std::to_string(table.size()) + " cannot evaluate Q = " +
          std::to_string(trunc_q));
    const int pmax = (table.size() + 1) / 2;
    for (int q = 1; q <= trunc_q; ++q) {
      Complex inner(0.0);
      for (int p = 1; p <= pmax; ++p)
        inner += table.omega(2 * p - 1, 2 * q - 1) * x.x(2 * p - 1);
      check.lhs += (2 * q - 1) * std::norm(inner);
    }
    for (int p = 1; p <= pmax; ++p)
      check.rhs += std::norm(x.x(2 * p - 1)) / (2 * p - 1);
  } else {
    if (trunc_q > table.size())
      throw InsufficientTruncation(
          "grunsky_quadratic: table of size " + std::to_string(table.size()) +
          " cannot evaluate Q = " + std::to_string(trunc_q));
    for (int q = 1; q <= trunc_q; ++q) {
      Complex inner(0.0);
      for (int p = 1; p <= table.size(); ++p)
        inner += table.omega(p, q) * x.x(p);
      check.lhs += q * std::norm(inner);
    }
    for (int p = 1; p <= table.size(); ++p)
      check.rhs += std::norm(x.x(p)) / p;
  }
  check.equality = quadratic_equality(check.lhs, check.rhs);
  return check;
}

namespace {

void require_odd(const GrunskyTable& table, const char* op) {
  if (table.provenance() != TableProvenance::odd)
    throw ProvenanceMismatch(std::string(op) +
                             ": requires an odd-provenance table");
  if (table.size() < 3)
    throw InsufficientTruncation(std::string(op) +
                                 ": table must cover index 3");
}

}  // namespace

TwoTermCheck two_term_inequality(const GrunskyTable& table, Complex x1,
                                 Complex x3) {
  require_odd(table, "two_term_inequality");
  const Complex w11 = table.omega(1, 1);
  const Complex w13 = table.omega(1, 3);
  const Complex w31 = table.omega(3, 1);
  const Complex w33 = table.omega(3, 3);
  TwoTermCheck check;
  check.lhs = std::norm(w11 * x1 + w31 * x3) +
              3.0 * std::norm(w13 * x1 + w33 * x3);
  check.rhs = std::norm(x1) + std::norm(x3) / 3.0;
  return check;
}

FirstCoefficients coefficients_from_grunsky(const GrunskyTable& table) {
  require_odd(table, "coefficients_from_grunsky");
  const Complex w11 = table.omega(1, 1);
  const Complex w13 = table.omega(1, 3);
  const Complex w33 = table.omega(3, 3);
  FirstCoefficients c;
  c.a2 = 2.0 * w11;
  c.a3 = 2.0 * w13 + 3.0 * w11 * w11;
  c.a4 = 2.0 * w33 + 8.0 * w11 * w13 + (10.0 / 3.0) * w11 * w11 * w11;
  return c;
}

Complex gamma3_from_grunsky(const GrunskyTable& table) {
  require_odd(table, "gamma3_from_grunsky");
  return table.omega(3, 3) + 2.0 * table.omega(1, 1) * table.omega(1, 3);
}

}  // namespace gamma3
