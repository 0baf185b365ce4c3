#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "astau/calibration.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "support/generators.hpp"

using namespace astau;
using astau::testing::for_all;
using astau::testing::Gen;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "astau");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

// every test uses its own config file so nothing leaks from the working directory
struct TempConfig {
  std::string path;
  explicit TempConfig(const std::string& name) : path(name) { fs::remove(path); }
  ~TempConfig() { fs::remove(path); }
};

}  // namespace

TEST_CASE("config serialisation round-trips bit-exactly") {
  for_all(50, 61, [](Gen& g, int) {
    cli::RunConfig c;
    const char* methods[] = {"airy", "widom", "minor"};
    c.method = methods[g.integer(0, 2)];
    c.s = g.real(-50, 50);
    c.kappa = g.real(-1, 1);
    c.quad_order = g.integer(2, 2000);
    c.eps = g.real(0.01, 0.99);
    c.truncation = g.real(1, 40);
    c.max_weight = g.integer(0, 20);
    c.n_cut = g.integer(1, 21);
    c.fd_step = g.real(1e-4, 1e-1);
    c.calibration = g.real(0, 2);
    c.format = g.coin() ? "json" : "text";
    c.s_min = g.real(-10, 0);
    c.s_max = g.real(0, 10);
    c.step = g.real(1e-3, 1);
    CHECK(cli::parse_config(cli::serialize(c)) == c);
  });
}

TEST_CASE("config parser rejects malformed input") {
  CHECK_THROWS_AS(cli::parse_config("bogus = 1\n"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_config("s = 1\ns = 2\n"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_config("s = 1x\n"), ArgumentError);
  CHECK_THROWS_AS(cli::parse_config("s\n"), ArgumentError);
  CHECK(cli::parse_config("# comment\n\nkappa = 0.25\n").kappa == 0.25);
  cli::RunConfig bad;
  bad.kappa = 2;
  CHECK_THROWS_AS(cli::validate(bad), ArgumentError);
}

TEST_CASE("tau subcommand") {
  TempConfig cfg("tau_test.cfg");
  auto r = run({"--config", cfg.path, "tau", "--method", "airy", "--s", "0", "--kappa", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("value          1\n") != std::string::npos);

  r = run({"--config", cfg.path, "tau", "--method", "widom", "--s", "1", "--kappa", "0.5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"value", "imag_residual", "method", "s", "kappa", "error_estimate"}) CHECK(j.contains(key));
  CHECK(j["method"] == "widom");
  // thin shell: the printed number is the library number
  CHECK(j["value"].get<double>() == widom::tau_widom(1, 0.5).value);

  const double widom_025 = widom::tau_widom(1, 0.25).value;
  r = run({"--config", cfg.path, "tau", "--method", "minor", "--s", "1", "--kappa", "0.25", "--max-weight", "8", "--json"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(nlohmann::json::parse(r.out)["value"].get<double>() - widom_025) <= 1e-4);
}

TEST_CASE("exit codes") {
  TempConfig cfg("exit_test.cfg");
  CHECK(run({"--config", cfg.path, "tau", "--method", "nope"}).code == 2);
  CHECK(run({"--config", cfg.path, "tau", "--kappa", "3"}).code == 2);
  CHECK(run({"--config", cfg.path, "tau", "--unknown"}).code == 2);
  CHECK(run({"--config", cfg.path}).code == 2);
  CHECK(run({"--config", cfg.path, "tau", "--s", "abc"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  // a zero-length half-line is rejected before any numerics run
  CHECK(run({"--config", cfg.path, "tau", "--truncation", "0"}).code == 2);
  // eps = 1 puts the contour through the basis poles
  CHECK(run({"--config", cfg.path, "coeffs", "--eps", "1"}).code == 2);
  CHECK(run({"selftest", "--filter", "nothing"}).code == 2);
}

TEST_CASE("scan output") {
  TempConfig cfg("scan_test.cfg");
  auto r = run({"--config", cfg.path, "scan", "--s-min", "0.5", "--s-max", "0.5", "--step", "0.1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("s,tau,err_est,method\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);

  r = run({"--config", cfg.path, "scan", "--kappa", "0", "--s-min", "-1", "--s-max", "1", "--step", "0.5", "--method", "widom"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",1,0,widom") != std::string::npos);
  }
  CHECK(rows == 5);
}

TEST_CASE("scan files are deterministic and match airy after calibration") {
  TempConfig cfg("scan_cal.cfg");
  const std::vector<std::string> common = {"--s-min", "-1", "--s-max", "1", "--step", "0.25", "--kappa", "0.5"};
  auto scan_to = [&](const std::string& file, const std::string& method) {
    std::vector<std::string> args = {"--config", cfg.path, "scan", "--method", method, "--out", file};
    args.insert(args.end(), common.begin(), common.end());
    return run(args).code;
  };
  REQUIRE(scan_to("a.csv", "widom") == 0);
  REQUIRE(scan_to("b.csv", "widom") == 0);
  CHECK(slurp("a.csv") == slurp("b.csv"));
  CHECK_FALSE(fs::exists("a.csv.tmp"));

  // widom at s against airy at c s, column by column
  const double c = std::pow(2.0, -2.0 / 3.0);
  std::istringstream lines(slurp("a.csv"));
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const double s = std::stod(line.substr(0, line.find(',')));
    const double tau = std::stod(line.substr(line.find(',') + 1));
    CHECK(std::abs(tau - airy::tau_airy(c * s, 0.5).value) <= 1e-6);
  }
  fs::remove("a.csv");
  fs::remove("b.csv");
}

TEST_CASE("failed scans leave no file behind") {
  TempConfig cfg("scan_fail.cfg");
  fs::remove("fail.csv");
  // s = 45 is past the Airy half-line range
  const auto r = run({"--config", cfg.path, "scan", "--s-min", "44", "--s-max", "46", "--step", "1", "--out", "fail.csv"});
  CHECK(r.code != 0);
  CHECK_FALSE(fs::exists("fail.csv"));
  CHECK_FALSE(fs::exists("fail.csv.tmp"));
}

TEST_CASE("calibrate persists c, u uses it") {
  TempConfig cfg("cal_test.cfg");
  CHECK(run({"--config", cfg.path, "u", "--method", "widom", "--s", "1"}).code == 2);
  auto r = run({"--config", cfg.path, "calibrate", "--kappa", "0"});
  REQUIRE(r.code == 0);
  const double c = cli::load_config(cfg.path).calibration;
  CHECK(c == doctest::Approx(std::pow(2.0, -2.0 / 3.0)).epsilon(1e-8));
  REQUIRE(run({"--config", cfg.path, "calibrate"}).code == 0);
  CHECK(std::abs(cli::load_config(cfg.path).calibration - c) <= 1e-10);

  r = run({"--config", cfg.path, "u", "--method", "widom", "--s", "1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["residual"].get<double>() <= 1e-4);
}

TEST_CASE("coeffs and maya listings") {
  TempConfig cfg("list_test.cfg");
  auto r = run({"--config", cfg.path, "coeffs", "--n-cut", "3", "--s", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("m,n,symbolic,quadrature,rel_err,expression\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 10);

  r = run({"--config", cfg.path, "maya", "--n-cut", "3", "--max-weight", "2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 4);  // vacuum, {1/2|-1/2}, {1/2|-3/2}, {3/2|-1/2}
  CHECK(j[0]["young"].empty());
}

TEST_CASE("selftest filter") {
  const auto r = run({"selftest", "--filter", "maya"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A11") != std::string::npos);
  CHECK(r.out.find("A1 ") == std::string::npos);
}
