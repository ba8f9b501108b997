// Times the serial reference grid scan against the OpenMP one and checks
// they return identical results.

#include <chrono>
#include <cstdio>

#include "gamma3/bound.hpp"

using namespace gamma3::bound;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int grid_n = argc > 1 ? std::atoi(argv[1]) : 4001;
  const double refine_tol = 1e-12;

  OptimizationResult serial, parallel;
  const double t_serial =
      time_ms([&] { serial = maximize_psi_serial(grid_n, refine_tol); });
  const double t_parallel =
      time_ms([&] { parallel = maximize_psi(grid_n, refine_tol, true); });

  std::printf("grid %d x %d\n", grid_n, grid_n);
  std::printf("serial    %10.2f ms   max %.17g\n", t_serial, serial.max_value);
  std::printf("openmp    %10.2f ms   max %.17g\n", t_parallel,
              parallel.max_value);
  std::printf("speedup   %10.2fx\n", t_serial / t_parallel);

  const bool identical = serial.max_value == parallel.max_value &&
                         serial.argmax.a == parallel.argmax.a &&
                         serial.argmax.t == parallel.argmax.t;
  std::printf("identical %s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
