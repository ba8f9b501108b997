#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma3/series.hpp"

namespace gamma3 {

// One ground-truth function: series from an exact closed-form coefficient
// rule, plus exact a_n / gamma_n where a closed form exists. Univalence of
// each entry is classical and documented in `notes`, not re-proved here.
struct CatalogEntry {
  std::string name;
  NormalizedFunction series;
  std::optional<std::vector<Complex>> known_a;      // a_1 .. a_order
  std::optional<std::vector<Complex>> known_gamma;  // gamma_1 .. gamma_(order-1)
  std::string notes;
};

// Builds the named entry to the requested truncation order. Names:
//   identity         z
//   koebe            z/(1-z)^2, a_n = n
//   koebe_rotation   e^{-i t} k(e^{i t} z), params = {theta}
//   right_half_line  z/(1-z)
//   odd_koebe        z/(1-z^2)
//   log_map          (1/2) log((1+z)/(1-z))
//   convex_parabola  z - z^2/2
//   two_point        z/((1-uz)(1-vz)), u = e^{i alpha}, v = e^{i beta},
//                    params = {alpha, beta}
// Throws UnknownCatalogEntry / ParameterOutOfRange.
CatalogEntry catalog_function(const std::string& name,
                              const std::vector<double>& params, int order);

inline CatalogEntry catalog_function(const std::string& name, int order) {
  return catalog_function(name, {}, order);
}

// All catalog names, in the fixed order the verification suites iterate.
std::vector<std::string> catalog_names();

// Every entry at the given order, with default parameters for the
// parametrized families (koebe_rotation theta = pi/3, two_point
// u = i, v = -i).
std::vector<CatalogEntry> full_catalog(int order);

}  // namespace gamma3
