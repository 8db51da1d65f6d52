#pragma once

#include <cstdint>
#include <vector>

#include "wigner/kernel.hpp"
#include "wigner/stein.hpp"

namespace wigner {

/// Finite-N allowance on top of the fourth-moment bound for W_2 estimates from
/// the GUE matrix model. Calibrated by pilot runs, not derived.
inline constexpr double kDefaultFiniteNAllowance = 0.1;

struct SimulationConfig {
  Index dim = 512;
  int trials = 8;
  std::uint64_t seed = 42;
  unsigned threads = 1;  // 0 = hardware concurrency
  double epsilon_n = kDefaultFiniteNAllowance;
};

struct TrialResult {
  std::uint64_t seed = 0;
  double w2 = 0;
  double entropy = 0;
  bool jittered = false;
};

struct InequalityReport {
  int order = 0;
  double w2_est = 0;        // mean over trials of W_2(F_N, semicircle)
  double w2_spread = 0;     // sample standard deviation over trials (0 for one trial)
  double entropy_est = 0;   // mean plug-in free entropy (raw, may be negative)
  double deficit = 0;       // tau(F^4) - 2
  double delta_sq = 0;      // ||A - 1x1||^2
  double sigma_upper = 0;   // sqrt(delta_sq)
  double talagrand_rhs = 0; // sqrt(2 max(entropy, 0))
  double ws_rhs = 0;        // sigma_upper
  double wsh_rhs = 0;       // sigma_upper * arccos(exp(-max(entropy,0)/sigma_upper^2)), 0 if sigma_upper = 0
  double theorem_rhs = 0;   // n^{3/4} deficit^{1/4}
  double epsilon_n = 0;
  bool violation = false;   // w2_est > theorem_rhs + epsilon_n
  std::vector<TrialResult> trials;
};

/// Runs `trials` independent matrix models of I_n(f) (trial t seeded with
/// seed ^ t), averages W_2 to the semicircle and the entropy estimate in
/// trial order, and assembles the right-hand sides of the inequality chain.
/// Results do not depend on the thread count.
InequalityReport inequality_report(const Kernel& f, const SimulationConfig& cfg);

}  // namespace wigner
