#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wigner/chaos.hpp"
#include "wigner/report.hpp"

namespace wigner::cli {

enum class Command { pairings, moments, deficit, stein, simulate, verify };
enum class Format { json, csv };

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Exit statuses of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // a declared tolerance was exceeded
inline constexpr int kExitInputError = 2;

struct RunConfig {
  Command command = Command::pairings;

  // kernel source: exactly one of these for moments/deficit/stein/simulate
  std::optional<std::string> kernel_path;
  std::optional<std::string> preset;
  Index cells = 0;  // 0: the preset's own minimum
  double width = 1.0;

  int points = 8;   // pairings
  int k = 4;        // moments: highest moment order

  Index dim = 512;
  int trials = 8;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  double epsilon_n = kDefaultFiniteNAllowance;

  std::string family = "diagonal";            // verify
  std::vector<Index> ks = {1, 4, 16, 64};      // verify

  std::optional<Format> format;  // default: csv for verify, json otherwise
  std::optional<std::string> output_path;
  Index budget = kDefaultCoefficientBudget;
};

const char* command_name(Command c);

/// Applies environment overrides: WIGNER_COEFF_BUDGET (coefficient budget of
/// the chaos algebra).
void apply_environment(RunConfig& cfg);

/// Dispatches the command and writes the report to cfg.output_path or `out`.
/// Diagnostics go to `err`. Returns kExitOk, kExitViolation or kExitInputError.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace wigner::cli
