#include "wigner/semicircle.hpp"

#include <cmath>
#include <numbers>

#include "wigner/error.hpp"

namespace wigner::semicircle {

double density(double x) {
  if (x <= -2.0 || x >= 2.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) + std::asin(x / 2.0) / std::numbers::pi;
}

double quantile(double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("semicircle::quantile: level must lie in (0, 1)");
  // Newton steps kept inside a shrinking bracket; bisect when a step leaves it
  // or the density vanishes near the edges.
  double lo = -2.0, hi = 2.0;
  double x = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double r = cdf(x) - u;
    if (std::abs(r) <= 1e-13) break;
    if (r > 0) hi = x; else lo = x;
    const double d = density(x);
    double next = d > 0 ? x - r / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  return x;
}

double moment_quadrature(int power, int points) {
  if (points < 2) points = 2;
  if (points % 2) ++points;
  // With x = 2cos(t), density dx = (2/pi) sin^2(t) dt on [0, pi].
  const double h = std::numbers::pi / points;
  auto integrand = [power](double t) {
    const double s = std::sin(t);
    return std::pow(2.0 * std::cos(t), power) * (2.0 / std::numbers::pi) * s * s;
  };
  double sum = integrand(0.0) + integrand(std::numbers::pi);
  for (int i = 1; i < points; ++i) sum += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
  return sum * h / 3.0;
}

}  // namespace wigner::semicircle
