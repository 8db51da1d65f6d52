#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <vector>

#include "wigner/chaos.hpp"

namespace wigner {

/// Sorted real spectrum of one matrix-model realization, or any equal-weight
/// point sample of a distribution on R.
struct SpectralSample {
  Eigen::VectorXd values;  // ascending, finite
  Index dim = 0;
  std::uint64_t seed = 0;
  int trials = 1;

  SpectralSample() = default;
  /// Sorts `values`; throws DomainError on non-finite entries.
  explicit SpectralSample(Eigen::VectorXd values, std::uint64_t seed = 0, int trials = 1);

  Index size() const { return values.size(); }
  double mean() const;
  double mean_square() const;
  double rms() const;
};

/// (Z + Z^*) / sqrt(2N) with Z an N x N matrix of independent standard complex
/// Gaussians (E|z|^2 = 1). Its spectrum approaches the standard semicircle.
Eigen::MatrixXcd sample_gue(Index N, std::mt19937_64& rng);
Eigen::MatrixXcd sample_gue(Index N, std::uint64_t seed);

inline constexpr Index kMatrixModelTermBudget = 100'000;
inline constexpr Index kMatrixModelMaxDim = 4096;
inline constexpr double kHermitianTol = 1e-10;

/// Matrix realization of F = sum_n I_n(f_n) with one independent GUE matrix
/// G_i per grid cell, drawn in cell order from a generator seeded by `seed`.
/// Wick words follow the recursion
///   W(i_1..i_n) = G_{i_1} W(i_2..i_n) - [i_1 == i_2] W(i_3..i_n),   W() = Id,
/// evaluated on kernels rather than words:
///   M(c) = sum_i G_i M(c[i, .]) - M(sum_i c[i, i, .]).
/// Throws DomainError if F is not self-adjoint (the result would not be
/// Hermitian) and BudgetExceeded past m^n > 1e5 or N > 4096.
Eigen::MatrixXcd matrix_model(const ChaosElement& F, Index N, std::uint64_t seed);

/// Same, with caller-supplied GUE matrices (one per grid cell).
Eigen::MatrixXcd matrix_model(const ChaosElement& F, const std::vector<Eigen::MatrixXcd>& gue);

/// Sorted eigenvalues of a Hermitian matrix. Entries of H - H^* must be below
/// 1e-10 relative to max(1, max|H_ij|).
SpectralSample eigenvalues(const Eigen::MatrixXcd& H);
SpectralSample eigenvalues(const Eigen::MatrixXd& H);

}  // namespace wigner
