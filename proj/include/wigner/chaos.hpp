#pragma once

#include <cmath>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wigner/kernel.hpp"
#include "wigner/pairings.hpp"

namespace wigner {

/// Default cap on the number of complex coefficients an algebra operation may
/// allocate for its result.
inline constexpr Index kDefaultCoefficientBudget = 10'000'000;

/// Finite sum  sum_n I_n(f_n)  of Wigner integrals over a shared grid.
///
/// Components are keyed by chaos order; a missing order is zero. Chaoses of
/// different orders are orthogonal in L^2(tau), so the L^2 norm is the
/// Euclidean norm over all component coefficients.
template <typename Real>
class BasicChaosElement {
 public:
  using Kernel = BasicKernel<Real>;
  using Scalar = typename Kernel::Scalar;
  using Components = std::map<int, Kernel>;

  explicit BasicChaosElement(const GridSpec& grid) : grid_(grid) {}

  static BasicChaosElement unit(const GridSpec& grid) {
    return from_kernel(Kernel::scalar(grid, Scalar(1)));
  }

  /// I_n(f)
  static BasicChaosElement from_kernel(const Kernel& f) {
    BasicChaosElement out(f.grid());
    out += f;
    return out;
  }

  const GridSpec& grid() const { return grid_; }
  const Components& components() const { return components_; }

  const Kernel* component(int order) const {
    const auto it = components_.find(order);
    return it == components_.end() ? nullptr : &it->second;
  }

  int max_order() const { return components_.empty() ? -1 : components_.rbegin()->first; }

  Index coefficient_count() const {
    Index total = 0;
    for (const auto& [n, f] : components_) total += f.size();
    return total;
  }

  Real squared_norm() const {
    Real total = 0;
    for (const auto& [n, f] : components_) total += f.squared_norm();
    return total;
  }

  bool is_zero() const {
    for (const auto& [n, f] : components_)
      if (!f.is_zero()) return false;
    return true;
  }

  /// Every component mirror symmetric.
  bool is_self_adjoint(Real tol = Real(0)) const {
    for (const auto& [n, f] : components_)
      if (!is_mirror_symmetric(f, tol)) return false;
    return true;
  }

  BasicChaosElement& operator+=(const Kernel& f) {
    require_same_grid(grid_, f.grid(), "ChaosElement +=");
    auto [it, inserted] = components_.try_emplace(f.order(), f);
    if (!inserted) it->second += f;
    return *this;
  }
  BasicChaosElement& operator+=(const BasicChaosElement& other) {
    for (const auto& [n, f] : other.components_) *this += f;
    return *this;
  }
  BasicChaosElement& operator-=(const BasicChaosElement& other) {
    for (const auto& [n, f] : other.components_) *this += Scalar(-1) * f;
    return *this;
  }
  BasicChaosElement& operator*=(Scalar s) {
    for (auto& [n, f] : components_) f *= s;
    return *this;
  }

  friend BasicChaosElement operator+(BasicChaosElement a, const BasicChaosElement& b) { return a += b; }
  friend BasicChaosElement operator-(BasicChaosElement a, const BasicChaosElement& b) { return a -= b; }
  friend BasicChaosElement operator*(Scalar s, BasicChaosElement a) { return a *= s; }

 private:
  GridSpec grid_;
  Components components_;
};

using ChaosElement = BasicChaosElement<double>;

/// I_n(f)^* = I_n(f^*), componentwise.
template <typename Real>
BasicChaosElement<Real> adjoint(const BasicChaosElement<Real>& F) {
  BasicChaosElement<Real> out(F.grid());
  for (const auto& [n, f] : F.components()) out += adjoint(f);
  return out;
}

/// Product formula, extended bilinearly:
///   I_n(f) I_m(g) = sum_{p=0}^{min(n,m)} I_{n+m-2p}(f contract_p g).
template <typename Real>
BasicChaosElement<Real> mul(const BasicChaosElement<Real>& F, const BasicChaosElement<Real>& G,
                            Index budget = kDefaultCoefficientBudget) {
  require_same_grid(F.grid(), G.grid(), "mul");
  std::set<int> orders;
  for (const auto& [n, f] : F.components())
    for (const auto& [m, g] : G.components())
      for (int p = 0; p <= std::min(n, m); ++p) orders.insert(n + m - 2 * p);
  Index needed = 0;
  for (int o : orders) {
    needed += tensor_size(F.grid().cells, o);
    if (needed > budget)
      throw BudgetExceeded("mul: result needs more than " + std::to_string(budget) + " coefficients");
  }

  BasicChaosElement<Real> out(F.grid());
  for (const auto& [n, f] : F.components())
    for (const auto& [m, g] : G.components())
      for (int p = 0; p <= std::min(n, m); ++p) out += contract(f, g, p);
  return out;
}

/// tau(F): the order-0 coefficient.
template <typename Real>
std::complex<Real> trace(const BasicChaosElement<Real>& F) {
  const auto* c = F.component(0);
  return c ? c->value() : std::complex<Real>(0);
}

/// tau(F G) = sum_n f_n contract_n g_n, without forming the product.
template <typename Real>
std::complex<Real> trace_product(const BasicChaosElement<Real>& F, const BasicChaosElement<Real>& G) {
  require_same_grid(F.grid(), G.grid(), "trace_product");
  std::complex<Real> total(0);
  for (const auto& [n, f] : F.components())
    if (const auto* g = G.component(n)) total += contract(f, *g, n).value();
  return total;
}

/// F^k by repeated multiplication; F^0 is the unit.
template <typename Real>
BasicChaosElement<Real> power(const BasicChaosElement<Real>& F, int k, Index budget = kDefaultCoefficientBudget) {
  if (k < 0) throw ShapeError("power: negative exponent");
  auto out = BasicChaosElement<Real>::unit(F.grid());
  for (int i = 0; i < k; ++i) out = mul(out, F, budget);
  return out;
}

/// tau(F^k) through the product formula. The product is split as
/// tau(F^a F^b) with a = ceil(k/2), b = floor(k/2) so only F^a is formed;
/// the final factor uses the trace pairing tau(I_n(f) I_m(g)) = delta_{nm} f contract_n g.
template <typename Real>
std::complex<Real> moment(const BasicChaosElement<Real>& F, int k, Index budget = kDefaultCoefficientBudget) {
  if (k < 0) throw ShapeError("moment: negative order");
  if (k == 0) return std::complex<Real>(1);
  const int a = (k + 1) / 2, b = k / 2;
  const auto high = power(F, a, budget);
  if (b == 0) return trace(high);
  if (b == a) return trace_product(high, high);
  return trace_product(high, power(F, b, budget));
}

/// Pairing integral: identify the arguments paired by pi, sum over the shared
/// cell index of every block and multiply the kernels' coefficients.
template <typename Real>
std::complex<Real> pairing_integral(std::span<const BasicKernel<Real>> kernels, const Pairing& pi) {
  if (kernels.empty()) return std::complex<Real>(1);
  const Index m = kernels.front().cells();
  int total = 0;
  for (const auto& f : kernels) total += f.order();
  if (pi.points() != total) throw ShapeError("pairing_integral: pairing size != total degree");

  // point -> block id
  std::vector<int> block_of(static_cast<std::size_t>(total));
  for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
    block_of[static_cast<std::size_t>(pi.blocks()[b].first)] = static_cast<int>(b);
    block_of[static_cast<std::size_t>(pi.blocks()[b].second)] = static_cast<int>(b);
  }
  const std::size_t nblocks = pi.blocks().size();
  std::vector<Index> cell(nblocks, 0);

  std::complex<Real> sum(0);
  for (;;) {
    std::complex<Real> term(1);
    int point = 0;
    for (const auto& f : kernels) {
      Index flat = 0;
      for (int d = 0; d < f.order(); ++d, ++point) flat = flat * m + cell[static_cast<std::size_t>(block_of[point])];
      term *= f.coeffs()(flat);
      if (term == std::complex<Real>(0)) break;
    }
    sum += term;
    std::size_t b = 0;
    while (b < nblocks && ++cell[b] == m) cell[b++] = 0;
    if (b == nblocks) break;
  }
  return sum;
}

/// tau(I_{n_1}(f_1) ... I_{n_r}(f_r)) as a sum of pairing integrals over the
/// non-crossing pairings that never pair two arguments of the same kernel.
/// Independent of the product formula; restricted to total degree <= 16.
template <typename Real>
std::complex<Real> moment_oracle(std::span<const BasicKernel<Real>> kernels) {
  if (kernels.empty()) return std::complex<Real>(1);
  std::complex<Real> scalar(1);
  std::vector<BasicKernel<Real>> active;
  BlockStructure bs;
  for (const auto& f : kernels) {
    require_same_grid(kernels.front().grid(), f.grid(), "moment_oracle");
    if (f.order() == 0) {
      scalar *= f.value();
    } else {
      active.push_back(f);
      bs.lengths.push_back(f.order());
    }
  }
  const int total = bs.total();
  if (total % 2 != 0) return std::complex<Real>(0);
  if (total > kMaxPairingPoints)
    throw BudgetExceeded("moment_oracle: total degree " + std::to_string(total) + " exceeds " +
                         std::to_string(kMaxPairingPoints));
  if (active.empty()) return scalar;

  std::complex<Real> sum(0);
  for (const auto& pi : enumerate_respecting(bs, true))
    sum += pairing_integral(std::span<const BasicKernel<Real>>(active), pi);
  return scalar * sum;
}

/// sum_{p=1}^{n-1} || f contract_p f^* ||^2, which equals tau(|I_n(f)|^4) - 2
/// for a unit-norm f.
template <typename Real>
Real fourth_moment_deficit(const BasicKernel<Real>& f, Real norm_tol = Real(1e-10)) {
  if (f.order() < 1) throw DomainError("fourth_moment_deficit: order must be >= 1");
  if (std::abs(f.norm() - Real(1)) > norm_tol) throw DomainError("fourth_moment_deficit: kernel is not unit norm");
  const auto fs = adjoint(f);
  Real total = 0;
  for (int p = 1; p < f.order(); ++p) total += contract(f, fs, p).squared_norm();
  return total;
}

}  // namespace wigner
