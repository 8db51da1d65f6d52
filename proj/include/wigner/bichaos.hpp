#pragma once

#include <map>
#include <string>
#include <utility>

#include "wigner/chaos.hpp"

namespace wigner {

/// Element of P x P stored as sum_{(a,b)} (I_a x I_b)(g_{ab}), each g_{ab}
/// an order-(a+b) kernel whose first a arguments feed the left leg.
///
/// (I_a x I_b) is an isometry onto H_a x H_b, and distinct (a,b) are
/// orthogonal, so inner products reduce to kernel inner products.
template <typename Real>
class BasicBiChaosElement {
 public:
  using Kernel = BasicKernel<Real>;
  using Chaos = BasicChaosElement<Real>;
  using Scalar = typename Kernel::Scalar;
  using Key = std::pair<int, int>;
  using Components = std::map<Key, Kernel>;

  explicit BasicBiChaosElement(const GridSpec& grid) : grid_(grid) {}

  /// 1 x 1
  static BasicBiChaosElement unit(const GridSpec& grid) {
    BasicBiChaosElement out(grid);
    out.add(0, 0, Kernel::scalar(grid, Scalar(1)));
    return out;
  }

  const GridSpec& grid() const { return grid_; }
  const Components& components() const { return components_; }

  const Kernel* component(int a, int b) const {
    const auto it = components_.find({a, b});
    return it == components_.end() ? nullptr : &it->second;
  }

  Index coefficient_count() const {
    Index total = 0;
    for (const auto& [key, g] : components_) total += g.size();
    return total;
  }

  Real squared_norm() const {
    Real total = 0;
    for (const auto& [key, g] : components_) total += g.squared_norm();
    return total;
  }

  /// Accumulates (I_a x I_b)(g).
  BasicBiChaosElement& add(int a, int b, const Kernel& g) {
    require_same_grid(grid_, g.grid(), "BiChaosElement::add");
    if (a < 0 || b < 0 || g.order() != a + b) throw ShapeError("BiChaosElement::add: leg orders do not match kernel");
    auto [it, inserted] = components_.try_emplace(Key{a, b}, g);
    if (!inserted) it->second += g;
    return *this;
  }

  BasicBiChaosElement& operator+=(const BasicBiChaosElement& other) {
    for (const auto& [key, g] : other.components_) add(key.first, key.second, g);
    return *this;
  }
  BasicBiChaosElement& operator-=(const BasicBiChaosElement& other) {
    for (const auto& [key, g] : other.components_) add(key.first, key.second, Scalar(-1) * g);
    return *this;
  }
  friend BasicBiChaosElement operator+(BasicBiChaosElement a, const BasicBiChaosElement& b) { return a += b; }
  friend BasicBiChaosElement operator-(BasicBiChaosElement a, const BasicBiChaosElement& b) { return a -= b; }

 private:
  GridSpec grid_;
  Components components_;
};

using BiChaosElement = BasicBiChaosElement<double>;

/// F x G
template <typename Real>
BasicBiChaosElement<Real> tensor(const BasicChaosElement<Real>& F, const BasicChaosElement<Real>& G,
                                 Index budget = kDefaultCoefficientBudget) {
  require_same_grid(F.grid(), G.grid(), "tensor");
  Index needed = 0;
  for (const auto& [a, f] : F.components())
    for (const auto& [b, g] : G.components()) needed += f.size() * g.size();
  if (needed > budget) throw BudgetExceeded("tensor: result exceeds coefficient budget");
  BasicBiChaosElement<Real> out(F.grid());
  for (const auto& [a, f] : F.components())
    for (const auto& [b, g] : G.components()) out.add(a, b, tensor(f, g));
  return out;
}

/// <A, B>, conjugate-linear in A.
template <typename Real>
std::complex<Real> bichaos_inner(const BasicBiChaosElement<Real>& A, const BasicBiChaosElement<Real>& B) {
  require_same_grid(A.grid(), B.grid(), "bichaos_inner");
  std::complex<Real> total(0);
  for (const auto& [key, g] : A.components())
    if (const auto* h = B.component(key.first, key.second)) total += inner(g, *h);
  return total;
}

/// (A x B)^* = A^* x B^*
template <typename Real>
BasicBiChaosElement<Real> adjoint(const BasicBiChaosElement<Real>& A) {
  BasicBiChaosElement<Real> out(A.grid());
  for (const auto& [key, g] : A.components()) out.add(key.first, key.second, split_adjoint(g, key.first));
  return out;
}

/// tau x id: keeps the components whose left leg is the constant chaos.
template <typename Real>
BasicChaosElement<Real> partial_trace_left(const BasicBiChaosElement<Real>& A) {
  BasicChaosElement<Real> out(A.grid());
  for (const auto& [key, g] : A.components())
    if (key.first == 0) out += g;
  return out;
}

/// id x tau
template <typename Real>
BasicChaosElement<Real> partial_trace_right(const BasicBiChaosElement<Real>& A) {
  BasicChaosElement<Real> out(A.grid());
  for (const auto& [key, g] : A.components())
    if (key.second == 0) out += g;
  return out;
}

namespace detail {

// Leg-wise product of (I_a x I_b)(g) and (I_c x I_d)(h) contracted p times on
// the left leg (g's left against h's left) and q times on the right leg
// (h's right against g's right):
//   out(x1,x2,y1,y2) = sum_{s,r} g(x1, s_p..s_1, r_1..r_q, y2) h(s_1..s_p, x2, y1, r_q..r_1)
template <typename Real>
BasicKernel<Real> sharp_term(const BasicKernel<Real>& g, int a, int b, const BasicKernel<Real>& h, int c, int d,
                             int p, int q) {
  const Index m = g.cells();
  const Index X1 = tensor_size(m, a - p), X2 = tensor_size(m, c - p);
  const Index Y1 = tensor_size(m, d - q), Y2 = tensor_size(m, b - q);
  const Index P = tensor_size(m, p), Q = tensor_size(m, q);
  const auto rev_p = reversal_permutation(m, p);
  const auto rev_q = reversal_permutation(m, q);

  typename BasicKernel<Real>::Coeffs out = BasicKernel<Real>::Coeffs::Zero(X1 * X2 * Y1 * Y2);
  for (Index x1 = 0; x1 < X1; ++x1)
    for (Index s = 0; s < P; ++s) {
      const Index g_left = x1 * P + rev_p[static_cast<std::size_t>(s)];
      for (Index r = 0; r < Q; ++r)
        for (Index y2 = 0; y2 < Y2; ++y2) {
          const auto gv = g.coeffs()((g_left * Q + r) * Y2 + y2);
          if (gv == std::complex<Real>(0)) continue;
          for (Index x2 = 0; x2 < X2; ++x2)
            for (Index y1 = 0; y1 < Y1; ++y1) {
              const auto hv = h.coeffs()(((s * X2 + x2) * Y1 + y1) * Q + rev_q[static_cast<std::size_t>(r)]);
              out(((x1 * X2 + x2) * Y1 + y1) * Y2 + y2) += gv * hv;
            }
        }
    }
  return BasicKernel<Real>(g.grid(), (a + c - 2 * p) + (d + b - 2 * q), std::move(out));
}

}  // namespace detail

/// (A1 x B1) # (A2 x B2) = A1 A2 x B2 B1, extended bilinearly. Each leg
/// product is expanded with the product formula.
template <typename Real>
BasicBiChaosElement<Real> sharp(const BasicBiChaosElement<Real>& A, const BasicBiChaosElement<Real>& B,
                                Index budget = kDefaultCoefficientBudget) {
  require_same_grid(A.grid(), B.grid(), "sharp");
  const Index m = A.grid().cells;
  std::set<std::pair<int, int>> keys;
  for (const auto& [ka, g] : A.components())
    for (const auto& [kb, h] : B.components())
      for (int p = 0; p <= std::min(ka.first, kb.first); ++p)
        for (int q = 0; q <= std::min(kb.second, ka.second); ++q)
          keys.emplace(ka.first + kb.first - 2 * p, kb.second + ka.second - 2 * q);
  Index needed = 0;
  for (const auto& [l, r] : keys) {
    needed += tensor_size(m, l + r);
    if (needed > budget) throw BudgetExceeded("sharp: result exceeds coefficient budget");
  }

  BasicBiChaosElement<Real> out(A.grid());
  for (const auto& [ka, g] : A.components())
    for (const auto& [kb, h] : B.components()) {
      const auto [a, b] = ka;
      const auto [c, d] = kb;
      for (int p = 0; p <= std::min(a, c); ++p)
        for (int q = 0; q <= std::min(d, b); ++q)
          out.add(a + c - 2 * p, d + b - 2 * q, detail::sharp_term(g, a, b, h, c, d, p, q));
    }
  return out;
}

}  // namespace wigner
