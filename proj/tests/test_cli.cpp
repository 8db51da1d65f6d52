#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wigner/cli.hpp"
#include "wigner/kernel_io.hpp"
#include "wigner/presets.hpp"

using namespace wigner;
using namespace wigner::cli;
using nlohmann::json;

namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result exec(const RunConfig& cfg) {
  std::ostringstream out, err;
  Result r;
  r.status = run(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "wigner_test_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

RunConfig preset_cfg(Command c, const std::string& preset, Index cells = 0) {
  RunConfig cfg;
  cfg.command = c;
  cfg.preset = preset;
  cfg.cells = cells;
  return cfg;
}

}  // namespace

TEST_CASE("kernel JSON round trip") {
  const auto f = random_gaussian(GridSpec(3, 0.25), 3, 5);
  const auto g = kernel_from_json(json::parse(kernel_to_json(f).dump()));
  CHECK(g == f);
  CHECK(g.grid().width == 0.25);
  const auto path = scratch("roundtrip.json");
  write_kernel(path, f);
  CHECK(read_kernel(path) == f);
}

TEST_CASE("kernel JSON shape errors") {
  auto j = json(kernel_to_json(basis_power(GridSpec(2), 2)));
  j["coeffs"].erase(0);
  CHECK_THROWS_AS(kernel_from_json(j), ShapeError);
  j = kernel_to_json(basis_power(GridSpec(2), 1));
  j["coeffs"][0] = 1.0;
  CHECK_THROWS_AS(kernel_from_json(j), ShapeError);
  j = kernel_to_json(basis_power(GridSpec(2), 1));
  j.erase("order");
  CHECK_THROWS_AS(kernel_from_json(j), ShapeError);
  j = kernel_to_json(basis_power(GridSpec(2), 1));
  j["grid"]["cells"] = 0;
  CHECK_THROWS_AS(kernel_from_json(j), ShapeError);
  CHECK_THROWS_AS(read_kernel(scratch("does_not_exist.json")), ShapeError);
  {
    std::ofstream bad(scratch("garbage.json"));
    bad << "{ not json";
  }
  CHECK_THROWS_AS(read_kernel(scratch("garbage.json")), ShapeError);
}

TEST_CASE("preset parsing") {
  CHECK(parse_preset("diagonal:16").name == "diagonal_family");
  CHECK(parse_preset("basis:2").name == "basis_power");
  CHECK(parse_preset("random_mirror:3:7").params == std::vector<Index>{3, 7});
  CHECK(preset_default_cells(parse_preset("diagonal:16")) == 16);
  CHECK(preset_default_cells(parse_preset("basis_power:2")) == 1);
  CHECK_THROWS_AS(parse_preset("nope:1"), ShapeError);
  CHECK_THROWS_AS(parse_preset("basis_power"), ShapeError);
  CHECK_THROWS_AS(parse_preset("basis_power:x"), ShapeError);
  CHECK_THROWS_AS(parse_preset("basis_power:1:2"), ShapeError);
  CHECK_THROWS_AS(parse_preset(""), ShapeError);
}

TEST_CASE("pairings command") {
  RunConfig cfg;
  cfg.command = Command::pairings;
  cfg.points = 8;
  const auto r = exec(cfg);
  CHECK(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["all"] == 105);
  CHECK(j["noncrossing"] == 14);
  CHECK(j["config"]["command"] == "pairings");
  cfg.points = 7;
  CHECK(exec(cfg).status == kExitInputError);
}

TEST_CASE("deficit command") {
  const auto r = exec(preset_cfg(Command::deficit, "diagonal:16", 16));
  CHECK(r.status == kExitOk);
  CHECK(json::parse(r.out)["deficit"].get<double>() == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(exec(preset_cfg(Command::deficit, "diagonal:16", 8)).status == kExitInputError);
}

TEST_CASE("moments command") {
  auto cfg = preset_cfg(Command::moments, "basis_power:2");
  cfg.k = 6;
  const auto r = exec(cfg);
  CHECK(r.status == kExitOk);
  const auto j = json::parse(r.out);
  REQUIRE(j["moments"].size() == 6);
  CHECK(j["moments"][1].get<double>() == doctest::Approx(1));
  CHECK(j["moments"][3].get<double>() == doctest::Approx(3));
  CHECK(j["deficit"].get<double>() == doctest::Approx(1));
  CHECK(j["identity_error"].get<double>() < 1e-12);

  // from a kernel file, including a non-unit one (deficit is then null)
  const auto path = scratch("scaled.json");
  write_kernel(path, std::complex<double>(2) * Kernel::basis(GridSpec(1), {0}));
  RunConfig fc;
  fc.command = Command::moments;
  fc.kernel_path = path.string();
  const auto s = exec(fc);
  CHECK(s.status == kExitOk);
  const auto js = json::parse(s.out);
  CHECK(js["deficit"].is_null());
  CHECK(js["moments"][3].get<double>() == doctest::Approx(32));
}

TEST_CASE("stein command") {
  const auto r = exec(preset_cfg(Command::stein, "basis_power:2"));
  CHECK(r.status == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["delta_sq"].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(j["bound_rhs"].get<double>() == doctest::Approx(2.828427).epsilon(1e-6));
  CHECK(j["bound_satisfied"] == true);
  CHECK(j["per_term"].size() == 2);
  CHECK(exec(preset_cfg(Command::stein, "random_mirror:3:5", 3)).status == kExitOk);
}

TEST_CASE("input errors map to exit status 2") {
  RunConfig none;
  none.command = Command::deficit;
  CHECK(exec(none).status == kExitInputError);

  auto both = preset_cfg(Command::deficit, "basis_power:2");
  both.kernel_path = "x.json";
  CHECK(exec(both).status == kExitInputError);

  CHECK(exec(preset_cfg(Command::deficit, "unknown:2")).status == kExitInputError);

  auto csv = preset_cfg(Command::deficit, "basis_power:2");
  csv.format = Format::csv;
  const auto r = exec(csv);
  CHECK(r.status == kExitInputError);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  auto big = preset_cfg(Command::moments, "basis_power:4", 10);
  big.budget = 1000;
  CHECK(exec(big).status == kExitInputError);

  auto bad_file = preset_cfg(Command::deficit, "basis_power:2");
  bad_file.preset.reset();
  const auto path = scratch("short.json");
  {
    std::ofstream out(path);
    out << R"({"grid":{"cells":2,"width":1.0},"order":2,"coeffs":[[1,0],[0,0],[0,0]]})";
  }
  bad_file.kernel_path = path.string();
  CHECK(exec(bad_file).status == kExitInputError);
}

TEST_CASE("coefficient budget from the environment") {
  RunConfig cfg;
  ::setenv("WIGNER_COEFF_BUDGET", "1234", 1);
  apply_environment(cfg);
  CHECK(cfg.budget == 1234);
  ::setenv("WIGNER_COEFF_BUDGET", "12x", 1);
  CHECK_THROWS_AS(apply_environment(cfg), ShapeError);
  ::setenv("WIGNER_COEFF_BUDGET", "0", 1);
  CHECK_THROWS_AS(apply_environment(cfg), ShapeError);
  ::unsetenv("WIGNER_COEFF_BUDGET");
}

TEST_CASE("simulate and verify are reproducible across thread counts") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.ks = {1, 2};
  cfg.dim = 48;
  cfg.trials = 3;
  cfg.threads = 1;
  const auto a = exec(cfg);
  cfg.threads = 4;
  const auto b = exec(cfg);
  CHECK(a.status == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# family=diagonal", 0) == 0);
  CHECK(a.out.find("\nk,deficit,delta_sq,theorem_rhs,w2_est,w2_spread,entropy_est\n") != std::string::npos);
  CHECK(a.out.find("\n2,0.49999") != std::string::npos);

  cfg.format = Format::json;
  const auto j = json::parse(exec(cfg).out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["violation"] == false);

  auto sim = preset_cfg(Command::simulate, "diagonal:2");
  sim.dim = 48;
  sim.trials = 2;
  const auto s1 = exec(sim);
  sim.threads = 2;
  const auto s2 = exec(sim);
  CHECK(s1.status == kExitOk);
  CHECK(s1.out == s2.out);
  const auto js = json::parse(s1.out);
  CHECK(js["trials"].size() == 2);
  CHECK(js["config"]["seed"] == 42);
}

TEST_CASE("a violated allowance exits with status 1") {
  auto sim = preset_cfg(Command::simulate, "basis_power:1");
  sim.dim = 8;
  sim.trials = 1;
  sim.epsilon_n = -10.0;
  const auto r = exec(sim);
  CHECK(r.status == kExitViolation);
  CHECK(json::parse(r.out)["violation"] == true);
}

TEST_CASE("report goes to --out when given") {
  RunConfig cfg;
  cfg.command = Command::pairings;
  cfg.points = 4;
  cfg.output_path = scratch("pairings.json").string();
  const auto r = exec(cfg);
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(*cfg.output_path);
  CHECK(json::parse(in)["all"] == 3);
}
