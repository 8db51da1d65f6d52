#pragma once

namespace wigner::semicircle {

// Standard semicircle law: mean 0, variance 1, support [-2, 2].

double density(double x);
double cdf(double x);

/// Inverse of cdf on (0,1); |cdf(q) - u| <= 1e-12.
double quantile(double u);

/// E[X^power] by Simpson quadrature in the angle variable x = 2 cos(theta),
/// with `points` subintervals (rounded up to even).
double moment_quadrature(int power, int points = 10'000);

}  // namespace wigner::semicircle
