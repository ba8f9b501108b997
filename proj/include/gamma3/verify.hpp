#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gamma3/bound.hpp"

namespace gamma3 {
namespace verify {

enum class Status { pass, fail, flagged };

const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  std::string details;
};

struct VerificationReport {
  std::vector<Check> checks;
  double bound_constant = 0.0;
  double argmax_a = 0.0;
  double argmax_t = 0.0;
  std::string edge;
  std::vector<std::string> paper_discrepancies;

  int count(Status s) const;
  // 0 iff no check failed.
  int exit_code() const { return count(Status::fail) == 0 ? 0 : 1; }

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

struct SuiteOptions {
  double tol = 1e-9;
  unsigned long long seed = 42;
  int catalog_order = 30;
  int random_vectors = 1000;        // Grunsky quadratic-form draws
  int random_perturbations = 200;   // gamma cross-method draws
  long long bulk_samples = 1000000; // quasi-random region screens
  int grid_n = 501;                 // bound-suite grid (acceptance uses 2001)
  double refine_tol = 1e-12;
};

// Named invariant suites. Each appends its checks to the report; flagged
// entries record transcription errata in the source derivation, never
// mathematical failures.
void run_series_suite(const SuiteOptions& opt, VerificationReport& report);
void run_grunsky_suite(const SuiteOptions& opt, VerificationReport& report);
void run_gamma_suite(const SuiteOptions& opt, VerificationReport& report);
void run_bound_suite(const SuiteOptions& opt, VerificationReport& report);

// suite in {series, grunsky, gamma, bound, all}; fills the bound block and
// the paper-discrepancy list. Throws OutOfRange for an unknown suite name.
VerificationReport run_suite(const std::string& suite,
                             const SuiteOptions& opt);

// Checks a serialized omega table (JSON: size, provenance, omega as a
// size x size array of [re, im] or plain numbers) against the Grunsky
// quadratic form with seeded random vectors. Appends exactly one check.
void check_fixture_table(const nlohmann::json& fixture,
                         const SuiteOptions& opt, VerificationReport& report);

}  // namespace verify
}  // namespace gamma3
