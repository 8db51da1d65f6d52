#pragma once

#include <vector>

#include "wigner/spectral.hpp"

namespace wigner {

/// q_i = semicircle quantile((i - 1/2) / N), i = 1..N.
SpectralSample semicircle_quantiles(Index N);

/// W_2 between the empirical measure of s and the semicircle, through the
/// monotone coupling against the midpoint quantiles.
double w2_to_semicircle(const SpectralSample& s);

/// W_2 between two equal-size empirical measures (sorted coupling).
double w2_samples(const SpectralSample& a, const SpectralSample& b);

struct EntropyEstimate {
  double value = 0;
  bool jittered = false;  // coincident values were separated before taking logs
};

inline constexpr double kCoincidenceTol = 1e-14;
inline constexpr double kJitterScale = 1e-12;

/// Plug-in estimate of the relative free entropy of the sample's law:
///   (1/2N) sum x_i^2 - (1/(N(N-1))) sum_{i != j} log|x_i - x_j| - 3/4.
/// Sorted neighbours closer than 1e-14 trigger a deterministic jitter: the
/// i-th value moves by i * 1e-12 * (spectral range, or 1 if the range is 0).
EntropyEstimate free_entropy_estimate(const SpectralSample& s);

struct WshRow {
  double x = 0;
  double arccos_exp = 0;  // arccos(e^{-x})
  double sqrt_2x = 0;     // sqrt(2x)
};

/// arccos(e^{-x}) and sqrt(2x) on each grid point; x must be positive.
std::vector<WshRow> wsh_scalar_check(const std::vector<double>& xs);

/// arccos(e^{-x}) evaluated as atan(sqrt(expm1(2x))) to keep accuracy as x -> 0.
double arccos_exp_neg(double x);

struct TestFunctionBound {
  double lhs = 0;
  double rhs = 0;
};

/// For h(x) = -cos(omega x)/omega^2 (so |h''| <= 1 and h'(0) = 0):
///   lhs = |mean h(a) - mean h(b)|,
///   rhs = |mean a - mean b| |h'(0)| + (rms(a) + rms(b))/2 * W_2(a, b).
TestFunctionBound test_function_bound_check(const SpectralSample& a, const SpectralSample& b, double omega);

}  // namespace wigner
