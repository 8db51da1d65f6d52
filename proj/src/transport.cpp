#include "wigner/transport.hpp"

#include <cmath>

#include "wigner/semicircle.hpp"

namespace wigner {

SpectralSample semicircle_quantiles(Index N) {
  if (N < 1) throw ShapeError("semicircle_quantiles: N must be >= 1");
  Eigen::VectorXd q(N);
  for (Index i = 0; i < N; ++i) q(i) = semicircle::quantile((static_cast<double>(i) + 0.5) / static_cast<double>(N));
  return SpectralSample(std::move(q));
}

double w2_to_semicircle(const SpectralSample& s) {
  if (s.size() == 0) throw ShapeError("w2_to_semicircle: empty sample");
  return w2_samples(s, semicircle_quantiles(s.size()));
}

double w2_samples(const SpectralSample& a, const SpectralSample& b) {
  if (a.size() != b.size()) throw ShapeError("w2_samples: sample sizes differ");
  if (a.size() == 0) throw ShapeError("w2_samples: empty samples");
  return std::sqrt((a.values - b.values).squaredNorm() / static_cast<double>(a.size()));
}

EntropyEstimate free_entropy_estimate(const SpectralSample& s) {
  const Index N = s.size();
  if (N < 2) throw ShapeError("free_entropy_estimate: need at least 2 values");
  EntropyEstimate out;
  Eigen::VectorXd x = s.values;
  for (Index i = 0; i + 1 < N; ++i)
    if (x(i + 1) - x(i) < kCoincidenceTol) out.jittered = true;
  if (out.jittered) {
    const double range = x(N - 1) - x(0);
    const double step = kJitterScale * (range > 0 ? range : 1.0);
    for (Index i = 0; i < N; ++i) x(i) += static_cast<double>(i) * step;
  }

  // sum over i != j of log|x_i - x_j| = 2 * sum over i < j
  double log_energy = 0;
  for (Index i = 0; i < N; ++i) {
    double row = 0;
    for (Index j = i + 1; j < N; ++j) row += std::log(x(j) - x(i));
    log_energy += row;
  }
  log_energy *= 2.0 / (static_cast<double>(N) * static_cast<double>(N - 1));
  out.value = 0.5 * x.squaredNorm() / static_cast<double>(N) - log_energy - 0.75;
  return out;
}

double arccos_exp_neg(double x) { return std::atan(std::sqrt(std::expm1(2.0 * x))); }

std::vector<WshRow> wsh_scalar_check(const std::vector<double>& xs) {
  std::vector<WshRow> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(x > 0)) throw DomainError("wsh_scalar_check: x must be positive");
    out.push_back({x, arccos_exp_neg(x), std::sqrt(2.0 * x)});
  }
  return out;
}

TestFunctionBound test_function_bound_check(const SpectralSample& a, const SpectralSample& b, double omega) {
  if (omega == 0) throw DomainError("test_function_bound_check: omega must be nonzero");
  if (a.size() != b.size()) throw ShapeError("test_function_bound_check: sample sizes differ");
  const double w2 = omega * omega;
  const auto mean_h = [&](const SpectralSample& s) {
    return -(s.values * omega).array().cos().mean() / w2;
  };
  const double h_prime_at_0 = 0.0;
  TestFunctionBound out;
  out.lhs = std::abs(mean_h(a) - mean_h(b));
  out.rhs = std::abs(a.mean() - b.mean()) * h_prime_at_0 + 0.5 * (a.rms() + b.rms()) * w2_samples(a, b);
  return out;
}

}  // namespace wigner
