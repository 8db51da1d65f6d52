#include "wigner/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "wigner/chaos.hpp"
#include "wigner/spectral.hpp"
#include "wigner/transport.hpp"

namespace wigner {

namespace {

TrialResult run_trial(const ChaosElement& F, Index dim, std::uint64_t seed) {
  const auto sample = eigenvalues(matrix_model(F, dim, seed));
  const auto entropy = free_entropy_estimate(sample);
  return {seed, w2_to_semicircle(sample), entropy.value, entropy.jittered};
}

}  // namespace

InequalityReport inequality_report(const Kernel& f, const SimulationConfig& cfg) {
  if (cfg.trials < 1) throw ShapeError("inequality_report: trials must be >= 1");
  const auto stein = stein_discrepancy_sq(f);  // validates unit norm and mirror symmetry
  const auto F = ChaosElement::from_kernel(f);

  InequalityReport rep;
  rep.order = f.order();
  rep.deficit = stein.deficit;
  rep.delta_sq = stein.delta_sq;
  rep.sigma_upper = stein.discrepancy_bound;
  rep.theorem_rhs = stein.theorem_w2_bound;
  rep.epsilon_n = cfg.epsilon_n;
  rep.trials.resize(static_cast<std::size_t>(cfg.trials));

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int t; (t = next.fetch_add(1)) < cfg.trials;) {
      try {
        rep.trials[static_cast<std::size_t>(t)] = run_trial(F, cfg.dim, cfg.seed ^ static_cast<std::uint64_t>(t));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const double n = static_cast<double>(cfg.trials);
  for (const auto& t : rep.trials) {
    rep.w2_est += t.w2;
    rep.entropy_est += t.entropy;
  }
  rep.w2_est /= n;
  rep.entropy_est /= n;
  if (cfg.trials > 1) {
    double ss = 0;
    for (const auto& t : rep.trials) ss += (t.w2 - rep.w2_est) * (t.w2 - rep.w2_est);
    rep.w2_spread = std::sqrt(ss / (n - 1));
  }

  const double chi = std::max(rep.entropy_est, 0.0);
  rep.talagrand_rhs = std::sqrt(2.0 * chi);
  rep.ws_rhs = rep.sigma_upper;
  rep.wsh_rhs = rep.sigma_upper > 0 ? rep.sigma_upper * arccos_exp_neg(chi / rep.delta_sq) : 0.0;
  rep.violation = rep.w2_est > rep.theorem_rhs + rep.epsilon_n;
  return rep;
}

}  // namespace wigner
