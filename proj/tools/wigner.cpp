// wigner: batch front-end for the chaos algebra, Stein discrepancy and
// matrix-model experiments. Exit status 0 = ok, 1 = a declared tolerance was
// exceeded, 2 = input error.

#include <CLI11.hpp>

#include <iostream>

#include "wigner/cli.hpp"

namespace {

using wigner::cli::Command;
using wigner::cli::RunConfig;

void add_kernel_source(CLI::App* sub, RunConfig& cfg) {
  auto* kernel = sub->add_option("--kernel", cfg.kernel_path, "kernel JSON file");
  auto* preset = sub->add_option("--preset", cfg.preset,
                                 "preset: diagonal:K | basis_power:N | random_mirror:N[:SEED]");
  kernel->excludes(preset);
  sub->add_option("--cells", cfg.cells, "grid cells for presets (default: preset minimum)");
  sub->add_option("--width", cfg.width, "grid cell width")->check(CLI::PositiveNumber);
}

void add_simulation(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--dim", cfg.dim, "matrix dimension N")->check(CLI::Range(2, 4096));
  sub->add_option("--trials", cfg.trials, "independent matrix-model trials")->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "base seed (trial t uses seed ^ t)");
  sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  sub->add_option("--epsilon", cfg.epsilon_n, "finite-N allowance on the W2 bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner chaos calculus: contractions, moments, Stein discrepancy, matrix models"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  auto* pairings = app.add_subcommand("pairings", "count all and non-crossing pairings");
  pairings->add_option("--points", cfg.points, "number of points (even, <= 16)");

  auto* moments = app.add_subcommand("moments", "moments tau(F^j), j = 1..k, and the fourth-moment deficit");
  add_kernel_source(moments, cfg);
  moments->add_option("--k", cfg.k, "highest moment");

  auto* deficit = app.add_subcommand("deficit", "fourth-moment deficit tau(F^4) - 2");
  add_kernel_source(deficit, cfg);

  auto* stein = app.add_subcommand("stein", "Stein discrepancy report");
  add_kernel_source(stein, cfg);

  auto* simulate = app.add_subcommand("simulate", "GUE matrix-model inequality report");
  add_kernel_source(simulate, cfg);
  add_simulation(simulate, cfg);

  auto* verify = app.add_subcommand("verify", "sweep a kernel family through the inequality report");
  verify->add_option("--family", cfg.family, "kernel family (diagonal)");
  verify->add_option("--ks", cfg.ks, "family parameters")->delimiter(',');
  verify->add_option("--cells", cfg.cells, "grid cells (default: k)");
  verify->add_option("--width", cfg.width, "grid cell width")->check(CLI::PositiveNumber);
  add_simulation(verify, cfg);

  for (auto* sub : {pairings, moments, deficit, stein, simulate, verify}) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.output_path, "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wigner::cli::kExitInputError;
  }

  if (*pairings) cfg.command = Command::pairings;
  if (*moments) cfg.command = Command::moments;
  if (*deficit) cfg.command = Command::deficit;
  if (*stein) cfg.command = Command::stein;
  if (*simulate) cfg.command = Command::simulate;
  if (*verify) cfg.command = Command::verify;
  if (!format.empty()) cfg.format = format == "csv" ? wigner::cli::Format::csv : wigner::cli::Format::json;

  try {
    wigner::cli::apply_environment(cfg);
  } catch (const std::exception& e) {
    std::cerr << "wigner: " << e.what() << '\n';
    return wigner::cli::kExitInputError;
  }
  return wigner::cli::run(cfg, std::cout, std::cerr);
}
