#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "wigner/bichaos.hpp"
#include "wigner/chaos.hpp"

namespace wigner {

/// One term G_{k,p} of the Stein kernel expansion together with the
/// contraction norm that bounds it.
template <typename Real>
struct BasicSteinTerm {
  int k = 0;
  int p = 0;
  Real norm_sq = 0;          // ||G_{k,p}||^2
  Real contraction_norm = 0; // ||f contract_{n-p-1} f||, upper bound for norm_sq
};

template <typename Real>
struct BasicSteinReport {
  int order = 0;
  Real delta_sq = 0;           // ||A - 1x1||^2
  Real deficit = 0;            // tau(F^4) - 2
  Real bound_rhs = 0;          // n^{3/2} deficit^{1/2}
  Real discrepancy_bound = 0;  // sqrt(delta_sq), upper bound for the Stein discrepancy
  Real theorem_w2_bound = 0;   // n^{3/4} deficit^{1/4}
  std::vector<BasicSteinTerm<Real>> per_term;
};

using SteinTerm = BasicSteinTerm<double>;
using SteinReport = BasicSteinReport<double>;

inline constexpr double kSteinNormTol = 1e-10;
inline constexpr double kSteinBoundSlack = 1e-9;

namespace detail {

template <typename Real>
void require_stein_input(const BasicKernel<Real>& f, const char* what) {
  if (f.order() < 1) throw DomainError(std::string(what) + ": order must be >= 1");
  if (std::abs(f.norm() - Real(1)) > Real(kSteinNormTol)) throw DomainError(std::string(what) + ": kernel is not unit norm");
  if (!is_mirror_symmetric(f, Real(1e-12))) throw DomainError(std::string(what) + ": kernel is not mirror symmetric");
}

// sum_s f^n_s contract_p ftilde^k_s, including the constant (n, n-1) term.
template <typename Real>
BasicKernel<Real> slice_contraction_sum(const BasicKernel<Real>& f, int k, int p) {
  const int n = f.order();
  BasicKernel<Real> out(f.grid(), 2 * n - 2 - 2 * p);
  for (Index s = 0; s < f.cells(); ++s)
    out += contract(slice(f, n, s), split_adjoint(slice(f, k, s), k - 1), p);
  return out;
}

}  // namespace detail

/// ftilde^k at cell s: the slice of f at argument k with its two legs
/// (k-1 arguments before, n-k after) each reversed and conjugated.
template <typename Real>
BasicKernel<Real> reversed_slice(const BasicKernel<Real>& f, int k, Index s) {
  return split_adjoint(slice(f, k, s), k - 1);
}

/// G_{k,p} = integral over t of f^n_t contract_p ftilde^k_t, as the exact sum
/// over grid cells. The width factors cancel: each coefficient slice carries
/// width^{-1/2} against the width of the dt-cell.
template <typename Real>
BasicKernel<Real> integrated_slice_contraction(const BasicKernel<Real>& f, int k, int p) {
  const int n = f.order();
  if (n < 1) throw DomainError("integrated_slice_contraction: order must be >= 1");
  if (!is_mirror_symmetric(f, Real(1e-12))) throw DomainError("integrated_slice_contraction: kernel is not mirror symmetric");
  if (k < 1 || k > n) throw ShapeError("integrated_slice_contraction: k out of range");
  if (p < 0 || p > k - 1) throw ShapeError("integrated_slice_contraction: p out of range");
  if (k == n && p == n - 1) throw ShapeError("integrated_slice_contraction: (n, n-1) is the constant term");
  return detail::slice_contraction_sum(f, k, p);
}

/// Admissible (k, p) pairs in lexicographic order, excluding (n, n-1).
inline std::vector<std::pair<int, int>> stein_terms(int n) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k)
    for (int p = 0; p <= k - 1; ++p)
      if (!(k == n && p == n - 1)) out.emplace_back(k, p);
  return out;
}

/// Squared distance between the Stein kernel of I_n(f) and 1x1, evaluated as
/// sum ||G_{k,p}||^2 over the admissible terms, plus the fourth-moment bounds.
template <typename Real>
BasicSteinReport<Real> stein_discrepancy_sq(const BasicKernel<Real>& f) {
  detail::require_stein_input(f, "stein_discrepancy_sq");
  const int n = f.order();
  BasicSteinReport<Real> rep;
  rep.order = n;
  for (const auto& [k, p] : stein_terms(n)) {
    BasicSteinTerm<Real> term;
    term.k = k;
    term.p = p;
    term.norm_sq = detail::slice_contraction_sum(f, k, p).squared_norm();
    term.contraction_norm = contract(f, f, n - p - 1).norm();
    rep.delta_sq += term.norm_sq;
    rep.per_term.push_back(term);
  }
  rep.deficit = fourth_moment_deficit(f, Real(kSteinNormTol));
  const Real nr = static_cast<Real>(n);
  rep.bound_rhs = std::pow(nr, Real(1.5)) * std::sqrt(rep.deficit);
  rep.discrepancy_bound = std::sqrt(rep.delta_sq);
  rep.theorem_w2_bound = std::pow(nr, Real(0.75)) * std::pow(rep.deficit, Real(0.25));
  return rep;
}

/// A = integral of (id x tau)(nabla_t F) . (nabla_t F)^* dt for F = I_n(f):
///   A = sum_{k,p} (I_{n+k-2-2p} x I_{n-k})(G_{k,p}),
/// the (n, n-1) term being ||f||^2 1x1.
template <typename Real>
BasicBiChaosElement<Real> stein_kernel(const BasicKernel<Real>& f) {
  detail::require_stein_input(f, "stein_kernel");
  const int n = f.order();
  BasicBiChaosElement<Real> A(f.grid());
  for (int k = 1; k <= n; ++k)
    for (int p = 0; p <= k - 1; ++p) A.add(n + k - 2 - 2 * p, n - k, detail::slice_contraction_sum(f, k, p));
  return A;
}

template <typename Real>
struct BasicIdentityCheck {
  int degree = 0;
  std::complex<Real> lhs{};
  std::complex<Real> rhs{};
  Real error = 0;
};

using IdentityCheck = BasicIdentityCheck<double>;

/// For P = X^j, j = 0..max_degree:
///   lhs = <F, P(F)> = tau(F^{j+1}),
///   rhs = <A, dP(F)> = sum_{i<j} <A, F^i x F^{j-1-i}>.
template <typename Real>
std::vector<BasicIdentityCheck<Real>> verify_stein_identity(const BasicKernel<Real>& f, int max_degree,
                                                            Index budget = kDefaultCoefficientBudget) {
  if (max_degree < 0 || max_degree > 4) throw ShapeError("verify_stein_identity: max_degree must be in [0, 4]");
  const auto A = stein_kernel(f);
  const auto F = BasicChaosElement<Real>::from_kernel(f);

  std::vector<BasicChaosElement<Real>> powers{BasicChaosElement<Real>::unit(f.grid())};
  for (int i = 1; i < max_degree; ++i) powers.push_back(mul(powers.back(), F, budget));

  std::vector<BasicIdentityCheck<Real>> out;
  for (int j = 0; j <= max_degree; ++j) {
    BasicIdentityCheck<Real> row;
    row.degree = j;
    row.lhs = moment(F, j + 1, budget);
    for (int i = 0; i < j; ++i)
      row.rhs += bichaos_inner(A, tensor(powers[static_cast<std::size_t>(i)],
                                         powers[static_cast<std::size_t>(j - 1 - i)], budget));
    row.error = std::abs(row.lhs - row.rhs);
    out.push_back(row);
  }
  return out;
}

template <typename Real>
struct BasicDualityCheck {
  std::complex<Real> lhs{};
  std::complex<Real> rhs{};
  Real error = 0;
};

using DualityCheck = BasicDualityCheck<double>;

/// tau(AB) against the integral over t of
/// tau((id x tau)(nabla_t A) . (tau x id)(nabla_t B)) for A = I_n(f), B = I_q(g).
/// (id x tau)(nabla_t A) is I_{n-1} of the last-argument slice of f and
/// (tau x id)(nabla_t B) is I_{q-1} of the first-argument slice of g.
template <typename Real>
BasicDualityCheck<Real> verify_nabla_duality(const BasicKernel<Real>& f, const BasicKernel<Real>& g) {
  using Chaos = BasicChaosElement<Real>;
  require_same_grid(f.grid(), g.grid(), "verify_nabla_duality");
  if (f.order() < 1 || g.order() < 1) throw ShapeError("verify_nabla_duality: orders must be >= 1");
  BasicDualityCheck<Real> out;
  out.lhs = trace(mul(Chaos::from_kernel(f), Chaos::from_kernel(g)));
  for (Index s = 0; s < f.cells(); ++s)
    out.rhs += trace(mul(Chaos::from_kernel(slice(f, f.order(), s)), Chaos::from_kernel(slice(g, 1, s))));
  out.error = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace wigner
