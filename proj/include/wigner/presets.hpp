#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wigner/kernel.hpp"

namespace wigner {

/// e_0^{x n}
template <typename Real = double>
BasicKernel<Real> basis_power(const GridSpec& grid, int n) {
  if (n < 0) throw ShapeError("basis_power: order must be >= 0");
  return BasicKernel<Real>::basis(grid, std::vector<Index>(static_cast<std::size_t>(n), 0));
}

/// k^{-1/2} sum_{i<k} e_i x e_i. Unit norm, mirror and fully symmetric, with
/// fourth-moment deficit exactly 1/k.
template <typename Real = double>
BasicKernel<Real> diagonal_family(const GridSpec& grid, Index k) {
  if (k < 1 || k > grid.cells)
    throw ShapeError("diagonal_family: need 1 <= k <= cells (k=" + std::to_string(k) +
                     ", cells=" + std::to_string(grid.cells) + ")");
  typename BasicKernel<Real>::Coeffs c = BasicKernel<Real>::Coeffs::Zero(grid.cells * grid.cells);
  const Real w = Real(1) / std::sqrt(static_cast<Real>(k));
  for (Index i = 0; i < k; ++i) c(i * grid.cells + i) = w;
  return BasicKernel<Real>(grid, 2, std::move(c));
}

/// Complex Gaussian coefficients (real and imaginary parts standard normal).
template <typename Real = double>
BasicKernel<Real> random_gaussian(const GridSpec& grid, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal;
  typename BasicKernel<Real>::Coeffs c(tensor_size(grid.cells, n));
  for (Index i = 0; i < c.size(); ++i) {
    const Real re = normal(rng);
    const Real im = normal(rng);
    c(i) = {re, im};
  }
  return BasicKernel<Real>(grid, n, std::move(c));
}

/// (g + g^*) / ||g + g^*|| for Gaussian g. Exactly mirror symmetric, unit
/// norm, and in general not fully symmetric.
template <typename Real = double>
BasicKernel<Real> random_mirror(const GridSpec& grid, int n, std::uint64_t seed) {
  if (n < 0) throw ShapeError("random_mirror: order must be >= 0");
  const auto g = random_gaussian<Real>(grid, n, seed);
  auto f = g + adjoint(g);
  const Real nrm = f.norm();
  if (nrm == Real(0)) throw DomainError("random_mirror: degenerate draw");
  return f * std::complex<Real>(Real(1) / nrm);
}

}  // namespace wigner
