// gamma3: logarithmic / Grunsky coefficient toolbox and verification front
// end. Subcommands: coeffs, grunsky, verify, optimize, list-functions.
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gamma3/bound.hpp"
#include "gamma3/catalog.hpp"
#include "gamma3/grunsky.hpp"
#include "gamma3/log_coeffs.hpp"
#include "gamma3/verify.hpp"

namespace {

using namespace gamma3;
using nlohmann::json;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Real JSON value when the imaginary part is negligible, else [re, im].
json complex_json(Complex z) {
  if (std::abs(z.imag()) < 1e-15) return z.real();
  return json::array({z.real(), z.imag()});
}

// Writes to the path if given, else stdout. False on I/O failure.
bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path);
  out << text;
  return static_cast<bool>(out);
}

int cmd_coeffs(const std::string& function, const std::vector<double>& params,
               int order, const std::string& format,
               const std::string& out_path) {
  // gamma_n consumes a_{n+1}, so the series is generated one order deeper.
  const CatalogEntry entry = catalog_function(function, params, order + 1);
  const LogCoefficientVector gamma = log_coefficients(entry.series, order);
  const GammaTriple closed =
      gamma_closed_form(entry.series.a(2), entry.series.a(3),
                        entry.series.a(4));
  const double res1 = std::abs(closed.gamma1 - gamma.gamma(1));
  const double res2 = std::abs(closed.gamma2 - gamma.gamma(2));
  const double res3 = std::abs(closed.gamma3 - gamma.gamma(3));

  std::string text;
  if (format == "json") {
    json j;
    j["function"] = function;
    j["order"] = order;
    j["a"] = json::array();
    for (int n = 1; n <= order; ++n) j["a"].push_back(complex_json(entry.series.a(n)));
    j["gamma"] = json::array();
    for (int n = 1; n <= order; ++n)
      j["gamma"].push_back(complex_json(gamma.gamma(n)));
    j["gamma_closed_form"] = {complex_json(closed.gamma1),
                              complex_json(closed.gamma2),
                              complex_json(closed.gamma3)};
    j["closed_form_residuals"] = {res1, res2, res3};
    text = j.dump(2) + "\n";
  } else {
    std::string csv = "n,a_re,a_im,gamma_re,gamma_im\n";
    char buf[160];
    for (int n = 1; n <= order; ++n) {
      const Complex a = entry.series.a(n);
      const Complex g = gamma.gamma(n);
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", n,
                    a.real(), a.imag(), g.real(), g.imag());
      csv += buf;
    }
    text = csv;
  }
  return emit(text, out_path) ? 0 : kExitIo;
}

int cmd_grunsky(const std::string& function, const std::vector<double>& params,
                int size, const std::string& format,
                const std::string& out_path) {
  const int order = std::max(4 * size + 2, kDefaultOrder);
  const CatalogEntry entry = catalog_function(function, params, order);
  const GrunskyTable odd = odd_grunsky(entry.series, size);
  const FirstCoefficients c = coefficients_from_grunsky(odd);
  const Complex g3 = gamma3_from_grunsky(odd);
  const LogCoefficientVector gamma = log_coefficients(entry.series, 3);

  std::string text;
  if (format == "json") {
    json j;
    j["function"] = function;
    j["size"] = size;
    json omega = json::array();
    for (int p = 1; p <= size; ++p) {
      json row = json::array();
      for (int q = 1; q <= size; ++q)
        row.push_back(complex_json(odd.omega(2 * p - 1, 2 * q - 1)));
      omega.push_back(row);
    }
    j["omega_odd"] = omega;  // omega_{2p-1,2q-1} of f2
    j["reconstructed"] = {complex_json(c.a2), complex_json(c.a3),
                          complex_json(c.a4)};
    j["reconstruction_residuals"] = {
        std::abs(c.a2 - entry.series.a(2)), std::abs(c.a3 - entry.series.a(3)),
        std::abs(c.a4 - entry.series.a(4))};
    j["gamma3_identity"] = complex_json(g3);
    j["gamma3_direct"] = complex_json(gamma.gamma(3));
    j["gamma3_residual"] = std::abs(g3 - gamma.gamma(3));
    text = j.dump(2) + "\n";
  } else {
    std::string csv = "p,q,omega_re,omega_im\n";
    char buf[160];
    for (int p = 1; p <= size; ++p)
      for (int q = 1; q <= size; ++q) {
        const Complex w = odd.omega(2 * p - 1, 2 * q - 1);
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", 2 * p - 1,
                      2 * q - 1, w.real(), w.imag());
        csv += buf;
      }
    text = csv;
  }
  return emit(text, out_path) ? 0 : kExitIo;
}

int cmd_verify(const std::string& suite, double tol, unsigned long long seed,
               const std::string& fixture_path, const std::string& format,
               const std::string& out_path) {
  verify::SuiteOptions opt;
  opt.tol = tol;
  opt.seed = seed;
  verify::VerificationReport report = verify::run_suite(suite, opt);
  if (!fixture_path.empty()) {
    std::ifstream in(fixture_path);
    if (!in) {
      std::cerr << "gamma3: cannot read fixture '" << fixture_path << "'\n";
      return kExitIo;
    }
    json fixture;
    in >> fixture;
    verify::check_fixture_table(fixture, opt, report);
  }
  const std::string text = format == "csv"
                               ? report.to_csv()
                               : report.to_json().dump(2) + "\n";
  if (!emit(text, out_path)) return kExitIo;
  return report.exit_code() == 0 ? 0 : kExitVerification;
}

int cmd_optimize(int grid_n, double refine_tol, bool serial,
                 const std::string& format, const std::string& out_path) {
  const bound::OptimizationResult result =
      serial ? bound::maximize_psi_serial(grid_n, refine_tol)
             : bound::maximize_psi(grid_n, refine_tol);

  if (format == "json") {
    json j;
    j["max_value"] = result.max_value;
    j["argmax"] = {result.argmax.a, result.argmax.t};
    j["edge"] = bound::edge_name(result.edge_attained);
    j["grid_resolution"] = result.grid_resolution;
    j["refinement_tolerance"] = result.refinement_tolerance;
    j["bound_constant"] = bound::bound_constant();
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("max psi      %.17g\n", result.max_value);
    std::printf("argmax       (%.17g, %.17g)\n", result.argmax.a,
                result.argmax.t);
    std::printf("edge         %s\n", bound::edge_name(result.edge_attained));
    std::printf("bound const  %.17g\n", bound::bound_constant());
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "gamma3: cannot write surface to '" << out_path << "'\n";
      return kExitIo;
    }
    out << "a,t,psi\n";
    char buf[120];
    for (int i = 0; i < grid_n; ++i) {
      const double a = static_cast<double>(i) / (grid_n - 1);
      for (int j = 0; j < grid_n; ++j) {
        const double s = static_cast<double>(j) / (grid_n - 1);
        const double t = bound::t_from_square(a, s);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", a, t,
                      bound::psi({a, t}));
        out << buf;
      }
    }
    if (!out) return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic and Grunsky coefficients of univalent functions; "
               "verification of the |gamma_3| <= sqrt(133)/15 bound"};
  app.require_subcommand(1);

  std::string function = "koebe";
  std::vector<double> params;
  int order = 10;
  int size = 3;
  std::string suite = "all";
  double tol = 1e-9;
  unsigned long long seed = 42;
  int grid_n = 2001;
  double refine_tol = 1e-12;
  std::string format = "json";
  std::string out_path;
  std::string fixture_path;
  bool serial = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "Write output to this path");
  };

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "Taylor and logarithmic coefficients of a catalog function");
  coeffs->add_option("--function", function, "Catalog function name")
      ->required();
  coeffs->add_option("--order", order, "Truncation order");
  coeffs->add_option("--params", params, "Parameters of the family");
  add_format(coeffs);

  CLI::App* grunsky = app.add_subcommand(
      "grunsky", "Odd Grunsky table, coefficient reconstruction, gamma_3");
  grunsky->add_option("--function", function, "Catalog function name")
      ->required();
  grunsky->add_option("--size", size, "Table size M (odd indices to 2M-1)")
      ->check(CLI::Range(2, 12));
  grunsky->add_option("--params", params, "Parameters of the family");
  add_format(grunsky);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"series", "grunsky", "gamma", "bound", "all"}));
  verify_cmd->add_option("--tol", tol, "Inequality tolerance");
  verify_cmd->add_option("--seed", seed, "RNG seed for random test vectors");
  verify_cmd->add_option("--fixture", fixture_path,
                         "Check a serialized omega table (JSON)");
  add_format(verify_cmd);

  CLI::App* optimize =
      app.add_subcommand("optimize", "Maximize psi over the region");
  optimize->add_option("--grid", grid_n, "Grid resolution")
      ->check(CLI::Range(2, 100000));
  optimize->add_option("--refine", refine_tol, "Refinement tolerance");
  optimize->add_flag("--serial", serial, "Use the serial reference scan");
  add_format(optimize);

  CLI::App* list =
      app.add_subcommand("list-functions", "List catalog functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (coeffs->parsed())
      return cmd_coeffs(function, params, order, format, out_path);
    if (grunsky->parsed())
      return cmd_grunsky(function, params, size, format, out_path);
    if (verify_cmd->parsed())
      return cmd_verify(suite, tol, seed, fixture_path, format, out_path);
    if (optimize->parsed())
      return cmd_optimize(grid_n, refine_tol, serial, format, out_path);
    if (list->parsed()) {
      for (const auto& entry : gamma3::full_catalog(5))
        std::cout << entry.name << "  --  " << entry.notes << "\n";
      return 0;
    }
  } catch (const UnknownCatalogEntry& e) {
    std::cerr << "gamma3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterOutOfRange& e) {
    std::cerr << "gamma3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfRange& e) {
    std::cerr << "gamma3: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "gamma3: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
