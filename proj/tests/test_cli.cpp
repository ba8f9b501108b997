#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GAMMA3_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("list-functions") {
  const RunResult r = run_cli("list-functions");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("koebe") != std::string::npos);
  CHECK(r.output.find("two_point") != std::string::npos);
}

TEST_CASE("coeffs koebe json") {
  const RunResult r = run_cli("coeffs --function koebe --order 5");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["gamma"][0].get<double>() == doctest::Approx(1.0));
  CHECK(j["gamma"][2].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(j["gamma"][4].get<double>() == doctest::Approx(0.2));
  CHECK(j["a"][4].get<double>() == doctest::Approx(5.0));
}

TEST_CASE("coeffs identity all zeros, right_half_line 1/(2n)") {
  const nlohmann::json id = nlohmann::json::parse(
      run_cli("coeffs --function identity --order 3").output);
  for (int n = 0; n < 3; ++n) CHECK(id["gamma"][n].get<double>() == 0.0);

  const nlohmann::json r = nlohmann::json::parse(
      run_cli("coeffs --function right_half_line --order 3").output);
  CHECK(r["gamma"][0].get<double>() == doctest::Approx(0.5));
  CHECK(r["gamma"][1].get<double>() == doctest::Approx(0.25));
  CHECK(r["gamma"][2].get<double>() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("unknown function is a usage error") {
  CHECK(run_cli("coeffs --function nope --order 3").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("grunsky subcommand") {
  const RunResult r = run_cli("grunsky --function koebe --size 3");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["omega_odd"][0][0].get<double>() == doctest::Approx(1.0));
  CHECK(j["omega_odd"][0][1].get<double>() == doctest::Approx(0.0));
  CHECK(j["omega_odd"][1][1].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(j["reconstructed"][0].get<double>() == doctest::Approx(2.0));
  CHECK(j["reconstructed"][1].get<double>() == doctest::Approx(3.0));
  CHECK(j["reconstructed"][2].get<double>() == doctest::Approx(4.0));
  CHECK(j["gamma3_residual"].get<double>() < 1e-11);
}

TEST_CASE("verify series suite and negative control") {
  const RunResult ok = run_cli("verify --suite series --seed 42");
  CHECK(ok.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(ok.output);
  CHECK(j["summary"]["fail"] == 0);

  const std::string fixture =
      std::string(GAMMA3_FIXTURE_DIR) + "/corrupted_table.json";
  const RunResult bad =
      run_cli("verify --suite series --fixture " + fixture);
  CHECK(bad.exit_code == 1);
  const nlohmann::json jb = nlohmann::json::parse(bad.output);
  CHECK(jb["summary"]["fail"] == 1);
}

TEST_CASE("verify reports are byte-identical across runs") {
  const std::string a = run_cli("verify --suite gamma --seed 7").output;
  const std::string b = run_cli("verify --suite gamma --seed 7").output;
  CHECK(a == b);
}

TEST_CASE("optimize with surface output") {
  const std::string path = "/tmp/gamma3_surface_test.csv";
  std::remove(path.c_str());
  const RunResult r =
      run_cli("optimize --grid 21 --refine 1e-10 --out " + std::string(path));
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["max_value"].get<double>() <= 133.0 / 225.0 + 1e-9);
  CHECK(j["edge"] == "t_lower");

  std::ifstream csv(path);
  REQUIRE(csv);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "a,t,psi");
  int rows = 0;
  std::string line;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 21 * 21);
  std::remove(path.c_str());

  CHECK(run_cli("optimize --grid 5 --out /no/such/dir/surface.csv")
            .exit_code == 3);
}
