#include "wigner/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace wigner {

SpectralSample::SpectralSample(Eigen::VectorXd v, std::uint64_t seed_, int trials_)
    : values(std::move(v)), dim(values.size()), seed(seed_), trials(trials_) {
  if (!values.allFinite()) throw DomainError("SpectralSample: non-finite value");
  std::sort(values.data(), values.data() + values.size());
}

double SpectralSample::mean() const { return size() ? values.mean() : 0.0; }
double SpectralSample::mean_square() const { return size() ? values.squaredNorm() / static_cast<double>(size()) : 0.0; }
double SpectralSample::rms() const { return std::sqrt(mean_square()); }

Eigen::MatrixXcd sample_gue(Index N, std::mt19937_64& rng) {
  if (N < 2) throw ShapeError("sample_gue: N must be >= 2");
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd Z(N, N);
  for (Index j = 0; j < N; ++j)
    for (Index i = 0; i < N; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      Z(i, j) = {re, im};
    }
  Eigen::MatrixXcd G = (Z + Z.adjoint()) / std::sqrt(2.0 * static_cast<double>(N));
  return G;
}

Eigen::MatrixXcd sample_gue(Index N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_gue(N, rng);
}

namespace {

using Coeffs = Kernel::Coeffs;

// M(c) for an order-n coefficient tensor c (length m^n).
Eigen::MatrixXcd wick_matrix(const Coeffs& c, int order, const std::vector<Eigen::MatrixXcd>& G) {
  const Index m = static_cast<Index>(G.size());
  const Index N = G.front().rows();
  if (order == 0) return c(0) * Eigen::MatrixXcd::Identity(N, N);

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N, N);
  if (order == 1) {
    for (Index i = 0; i < m; ++i)
      if (c(i) != std::complex<double>(0)) out += c(i) * G[static_cast<std::size_t>(i)];
    return out;
  }

  const Index tail = tensor_size(m, order - 1);
  for (Index i = 0; i < m; ++i) {
    const Coeffs sub = c.segment(i * tail, tail);
    if (sub.isZero(0)) continue;
    out.noalias() += G[static_cast<std::size_t>(i)] * wick_matrix(sub, order - 1, G);
  }
  // diagonal contraction of the first two arguments
  const Index tail2 = tensor_size(m, order - 2);
  Coeffs diag = Coeffs::Zero(tail2);
  for (Index i = 0; i < m; ++i) diag += c.segment((i * m + i) * tail2, tail2);
  if (!diag.isZero(0)) out -= wick_matrix(diag, order - 2, G);
  return out;
}

double hermitian_defect(const Eigen::MatrixXcd& H) {
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  return (H - H.adjoint()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

Eigen::MatrixXcd matrix_model(const ChaosElement& F, const std::vector<Eigen::MatrixXcd>& gue) {
  if (static_cast<Index>(gue.size()) != F.grid().cells)
    throw ShapeError("matrix_model: need one GUE matrix per grid cell");
  const Index N = gue.front().rows();
  if (N > kMatrixModelMaxDim) throw BudgetExceeded("matrix_model: N exceeds " + std::to_string(kMatrixModelMaxDim));
  for (const auto& [n, f] : F.components())
    if (f.size() > kMatrixModelTermBudget)
      throw BudgetExceeded("matrix_model: m^n = " + std::to_string(f.size()) + " exceeds the term budget");
  if (!F.is_self_adjoint(1e-12)) throw DomainError("matrix_model: element is not self-adjoint");

  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
  for (const auto& [n, f] : F.components()) H += wick_matrix(f.coeffs(), n, gue);
  if (hermitian_defect(H) > kHermitianTol) throw DomainError("matrix_model: result is not Hermitian");
  return (H + H.adjoint()) / 2.0;
}

Eigen::MatrixXcd matrix_model(const ChaosElement& F, Index N, std::uint64_t seed) {
  if (N > kMatrixModelMaxDim) throw BudgetExceeded("matrix_model: N exceeds " + std::to_string(kMatrixModelMaxDim));
  std::mt19937_64 rng(seed);
  std::vector<Eigen::MatrixXcd> gue;
  gue.reserve(static_cast<std::size_t>(F.grid().cells));
  for (Index i = 0; i < F.grid().cells; ++i) gue.push_back(sample_gue(N, rng));
  return matrix_model(F, gue);
}

SpectralSample eigenvalues(const Eigen::MatrixXcd& H) {
  if (H.rows() != H.cols()) throw ShapeError("eigenvalues: matrix is not square");
  if (hermitian_defect(H) > kHermitianTol) throw DomainError("eigenvalues: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalues: solver did not converge");
  return SpectralSample(solver.eigenvalues());
}

SpectralSample eigenvalues(const Eigen::MatrixXd& H) { return eigenvalues(Eigen::MatrixXcd(H.cast<std::complex<double>>())); }

}  // namespace wigner
