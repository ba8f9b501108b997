#include "gamma3/bound.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gamma3 {
namespace bound {

const char* edge_name(Edge e) {
  switch (e) {
    case Edge::interior: return "interior";
    case Edge::a0: return "a0";
    case Edge::a1: return "a1";
    case Edge::t_lower: return "t_lower";
    case Edge::t_upper: return "t_upper";
  }
  return "?";
}

double phi(const RegionPoint& p) {
  const double a2 = p.a * p.a;
  return 4.0 * a2 - 4.0 * a2 * a2 - p.t * p.t - 4.0 * a2 * p.t;
}

double psi(const RegionPoint& p) { return 1.0 / 9.0 + phi(p) / 3.0; }

std::pair<double, double> region_bounds(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw OutOfRange("region_bounds: a must lie in [0,1]");
  const double one_minus_a2 = 1.0 - a * a;
  return {-0.5 * one_minus_a2, std::sqrt(one_minus_a2) / std::sqrt(3.0)};
}

std::pair<double, double> phi_gradient(const RegionPoint& p) {
  const double a = p.a, t = p.t;
  return {8.0 * a - 16.0 * a * a * a - 8.0 * a * t, -4.0 * a * a - 2.0 * t};
}

std::vector<RegionPoint> stationary_points() { return {RegionPoint{0.0, 0.0}}; }

double edge_profile(Edge edge, double param) {
  switch (edge) {
    case Edge::a0:
      if (!(param >= -0.5 && param <= 1.0 / std::sqrt(3.0)))
        throw OutOfRange("edge_profile: t outside [-1/2, 1/sqrt(3)]");
      return phi({0.0, param});
    case Edge::a1:
      if (param != 0.0)
        throw OutOfRange("edge_profile: a = 1 admits only t = 0");
      return phi({1.0, 0.0});
    case Edge::t_lower: {
      if (!(param >= 0.0 && param <= 1.0))
        throw OutOfRange("edge_profile: a outside [0,1]");
      return phi({param, -0.5 * (1.0 - param * param)});
    }
    case Edge::t_upper: {
      if (!(param >= 0.0 && param <= 1.0))
        throw OutOfRange("edge_profile: a outside [0,1]");
      return phi({param, std::sqrt((1.0 - param * param) / 3.0)});
    }
    case Edge::interior:
      throw OutOfRange("edge_profile: not an edge");
  }
  throw OutOfRange("edge_profile: not an edge");
}

namespace {

// Degree-2 rational polynomials in u, coefficients [c0, c1, c2].
using Poly = std::array<Rational, 3>;

Poly operator+(const Poly& x, const Poly& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}
Poly operator-(const Poly& x, const Poly& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}
// Product, valid when the result stays within degree 2.
Poly mul(const Poly& x, const Poly& y) {
  Poly r{Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) r[i + j] += x[i] * y[j];
  return r;
}

}  // namespace

EdgeIdentity exact_lower_edge_identity() {
  // u = a^2, t = (u - 1)/2 on the lower edge.
  const Poly u{Rational(0), Rational(1), Rational(0)};
  const Poly t{rat(-1, 2), rat(1, 2), Rational(0)};
  // phi = 4u - 4u^2 - t^2 - 4ut
  const Poly four_u{Rational(0), Rational(4), Rational(0)};
  const Poly four_u_sq{Rational(0), Rational(0), Rational(4)};
  const Poly expansion = four_u - four_u_sq - mul(t, t) - mul(four_u, t);

  EdgeIdentity id;
  id.poly = {expansion[0], expansion[1], expansion[2]};
  id.argmax_u = id.poly.vertex();  // concave, vertex inside [0,1]
  id.max_value = id.poly.eval(id.argmax_u);

  // The printed derivation factors the edge as -(1/4)(u-1)(u-1/25); the
  // exact leading factor is -25/4.
  const Poly printed =
      mul(Poly{rat(-1, 4), Rational(0), Rational(0)},
          mul(Poly{Rational(-1), Rational(1), Rational(0)},
              Poly{rat(-1, 25), Rational(1), Rational(0)}));
  id.printed_factor_matches = (printed[0] == expansion[0] &&
                               printed[1] == expansion[1] &&
                               printed[2] == expansion[2]);
  id.detail =
      "phi(a, -(1-a^2)/2) = -(25/4)u^2 + (13/2)u - 1/4, max 36/25 at "
      "u = 13/25; printed leading factor -1/4 is a typo for -25/4";
  return id;
}

EdgeIdentity exact_upper_edge_identity() {
  // Polynomial part of phi(a, t_max(a)): t_max^2 = (1-u)/3 and the radical
  // cross term -4u t_max is nonpositive, so
  //   phi <= 4u - 4u^2 - (1-u)/3 = (-12u^2 + 13u - 1)/3.
  const Poly four_u{Rational(0), Rational(4), Rational(0)};
  const Poly four_u_sq{Rational(0), Rational(0), Rational(4)};
  const Poly tmax_sq{rat(1, 3), rat(-1, 3), Rational(0)};
  const Poly expansion = four_u - four_u_sq - tmax_sq;

  EdgeIdentity id;
  id.poly = {expansion[0], expansion[1], expansion[2]};
  id.argmax_u = id.poly.vertex();
  id.max_value = id.poly.eval(id.argmax_u);
  id.printed_factor_matches = true;
  id.detail =
      "upper-edge dominating polynomial (-12u^2 + 13u - 1)/3, max 121/144 at "
      "u = 13/24, strictly below 36/25";
  return id;
}

double t_from_square(double a, double s) {
  const auto [t_min, t_max] = region_bounds(a);
  return t_min + s * (t_max - t_min);
}

namespace {

double psi_square(double a, double s) {
  return psi({a, t_from_square(a, s)});
}

// Golden-section maximization of a unimodal function on [lo, hi]; the
// bracket shrinks below x_tol. Deterministic for fixed inputs.
double golden_max(const std::function<double(double)>& f, double lo,
                  double hi, double x_tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > x_tol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  return f(mid) >= std::max(f1, f2) ? mid : (f1 >= f2 ? x1 : x2);
}

struct BestCell {
  double value = -std::numeric_limits<double>::infinity();
  long long index = -1;  // row-major (i, j): lexicographic (a, s)
};

// Larger value wins; ties break to the smaller (lexicographic) index.
void combine(BestCell& acc, const BestCell& c) {
  if (c.value > acc.value || (c.value == acc.value && c.index < acc.index &&
                              c.index >= 0))
    acc = c;
}

BestCell scan_serial(int n) {
  BestCell best;
  for (int i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double s = static_cast<double>(j) / (n - 1);
      combine(best, {psi_square(a, s), static_cast<long long>(i) * n + j});
    }
  }
  return best;
}

BestCell scan_parallel(int n) {
  BestCell best;
#ifdef _OPENMP
#pragma omp parallel
  {
    BestCell local;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < n; ++i) {
      const double a = static_cast<double>(i) / (n - 1);
      for (int j = 0; j < n; ++j) {
        const double s = static_cast<double>(j) / (n - 1);
        combine(local, {psi_square(a, s), static_cast<long long>(i) * n + j});
      }
    }
#pragma omp critical
    combine(best, local);
  }
#else
  best = scan_serial(n);
#endif
  return best;
}

OptimizationResult run_optimizer(int grid_n, double refine_tol,
                                 bool parallel) {
  if (grid_n < 2) throw OutOfRange("maximize_psi: grid_n must be >= 2");
  if (!(refine_tol > 0.0))
    throw OutOfRange("maximize_psi: refine_tol must be positive");

  const BestCell seed = parallel ? scan_parallel(grid_n) : scan_serial(grid_n);
  double a = static_cast<double>(seed.index / grid_n) / (grid_n - 1);
  double s = static_cast<double>(seed.index % grid_n) / (grid_n - 1);
  double value = seed.value;

  // Coordinate-wise refinement. psi is unimodal along each coordinate line
  // of the square (quadratic in t for fixed a; monotone-quadratic in u = a^2
  // along the edges), so golden section applies.
  for (int round = 0; round < 100; ++round) {
    a = golden_max([&](double x) { return psi_square(x, s); }, 0.0, 1.0,
                   refine_tol);
    s = golden_max([&](double x) { return psi_square(a, x); }, 0.0, 1.0,
                   refine_tol);
    const double next = psi_square(a, s);
    if (next - value <= refine_tol && round > 0) {
      value = std::max(value, next);
      break;
    }
    value = next;
  }

  OptimizationResult result;
  result.max_value = value;
  result.argmax = {a, t_from_square(a, s)};
  result.grid_resolution = grid_n;
  result.refinement_tolerance = refine_tol;
  result.argmax_a = a;
  result.argmax_s = s;

  const double eps = std::max(1e-9, 10.0 * refine_tol);
  if (s <= eps)
    result.edge_attained = Edge::t_lower;
  else if (s >= 1.0 - eps)
    result.edge_attained = Edge::t_upper;
  else if (a <= eps)
    result.edge_attained = Edge::a0;
  else if (a >= 1.0 - eps)
    result.edge_attained = Edge::a1;
  else
    result.edge_attained = Edge::interior;
  return result;
}

}  // namespace

OptimizationResult maximize_psi(int grid_n, double refine_tol, bool parallel) {
  return run_optimizer(grid_n, refine_tol, parallel);
}

OptimizationResult maximize_psi_serial(int grid_n, double refine_tol) {
  return run_optimizer(grid_n, refine_tol, false);
}

double bound_constant() { return std::sqrt(133.0) / 15.0; }

RegionPoint quasi_random_point(long long k) {
  // R2 Kronecker sequence (plastic-constant rotations) on the (a, s) square.
  constexpr double alpha1 = 0.7548776662466927;
  constexpr double alpha2 = 0.5698402909980532;
  const double a = std::fmod(0.5 + alpha1 * static_cast<double>(k), 1.0);
  const double s = std::fmod(0.5 + alpha2 * static_cast<double>(k), 1.0);
  return {a, t_from_square(a, s)};
}

}  // namespace bound
}  // namespace gamma3
