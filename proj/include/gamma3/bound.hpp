#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gamma3/errors.hpp"
#include "gamma3/rational.hpp"

namespace gamma3 {
namespace bound {

// (a, t) with a = w11 in [0,1] and t = Re w13 in [t_min(a), t_max(a)].
struct RegionPoint {
  double a = 0.0;
  double t = 0.0;
};

enum class Edge { interior, a0, a1, t_lower, t_upper };

const char* edge_name(Edge e);

// phi(a,t) = 4a^2 - 4a^4 - t^2 - 4a^2 t. Defined on the whole plane; region
// membership is the caller's business.
double phi(const RegionPoint& p);

// psi = 1/9 + phi/3; |gamma_3|^2 <= psi on the region.
double psi(const RegionPoint& p);

// t_min(a) = -(1 - a^2)/2, t_max(a) = sqrt(1 - a^2)/sqrt(3); t_min <= t_max
// for every a in [0,1]. Throws OutOfRange outside [0,1].
std::pair<double, double> region_bounds(double a);

// Gradient (phi_a, phi_t) = (8a - 16a^3 - 8at, -4a^2 - 2t).
std::pair<double, double> phi_gradient(const RegionPoint& p);

// Real solutions of phi_a = phi_t = 0: substituting t = -2a^2 into the first
// equation leaves 8a = 0, so (0,0) is the only one.
std::vector<RegionPoint> stationary_points();

// phi restricted to a named edge, parametrized by t (edges a0, a1) or by a
// (edges t_lower, t_upper). Throws OutOfRange outside the edge's domain.
double edge_profile(Edge edge, double param);

// c0 + c1 u + c2 u^2 with exact rational coefficients, u = a^2.
struct RationalQuadratic {
  Rational c0, c1, c2;

  Rational eval(const Rational& u) const { return c0 + c1 * u + c2 * u * u; }
  // Vertex of a concave quadratic: argmax and max over all reals.
  Rational vertex() const { return -c1 / (Rational(2) * c2); }
};

struct EdgeIdentity {
  RationalQuadratic poly;       // exact expansion in u = a^2
  Rational argmax_u;            // maximizer over u in [0,1]
  Rational max_value;           // exact maximum
  bool printed_factor_matches;  // false: the printed leading factor -1/4
                                // disagrees with the exact -25/4
  std::string detail;
};

// Expands phi(a, -(1-a^2)/2) in exact rational arithmetic. The result is
// -(25/4)u^2 + (13/2)u - 1/4 with maximum 36/25 at u = 13/25. The leading
// factor printed in the source derivation is -1/4, which would cap the edge
// at 36/625; the identity reports that discrepancy.
EdgeIdentity exact_lower_edge_identity();

// Exact polynomial part of the upper edge, (-12u^2 + 13u - 1)/3, which
// dominates phi(a, t_max(a)); its maximum is 121/144 at u = 13/24, strictly
// below 36/25.
EdgeIdentity exact_upper_edge_identity();

struct OptimizationResult {
  double max_value = 0.0;
  RegionPoint argmax;
  int grid_resolution = 0;
  double refinement_tolerance = 0.0;
  Edge edge_attained = Edge::interior;
  // Square-domain coordinates of the maximizer; s in [0,1] spans
  // [t_min(a), t_max(a)].
  double argmax_a = 0.0;
  double argmax_s = 0.0;
};

// t at square coordinates (a, s); the degenerate slice a = 1 collapses to 0.
double t_from_square(double a, double s);

// Dense grid_n x grid_n scan over the (a, s) square followed by
// coordinate-wise golden-section refinement to refine_tol. Deterministic:
// ties on the grid break to the lexicographically smallest (a, s).
// `parallel` selects the OpenMP scan; both scans return bit-identical
// results (the reduction is an associative max with a fixed tie-break).
OptimizationResult maximize_psi(int grid_n, double refine_tol,
                                bool parallel = true);

// Serial reference scan, kept for testing and benchmarking.
OptimizationResult maximize_psi_serial(int grid_n, double refine_tol);

// sqrt(133)/15: the upper bound for |gamma_3| over the class S. An upper
// bound only; no sharpness is claimed.
double bound_constant();

// k-th point of a fixed 2-D Kronecker (additive-recurrence) sequence mapped
// into the region; used by the bulk psi <= 133/225 screens.
RegionPoint quasi_random_point(long long k);

}  // namespace bound
}  // namespace gamma3
