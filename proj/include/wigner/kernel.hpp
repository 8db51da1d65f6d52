#pragma once

#include <Eigen/Core>

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wigner/error.hpp"
#include "wigner/grid.hpp"

namespace wigner {

/// Order-n step kernel f in L^2(R_+^n) on a uniform grid.
///
/// coeffs[i_1..i_n] = <e_{i_1} x ... x e_{i_n}, f>, flattened row-major with
/// the last index fastest. Order 0 is a single complex scalar. The L^2 norm of
/// f is exactly the Euclidean norm of the coefficient vector.
template <typename Real>
class BasicKernel {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicKernel() : coeffs_(Coeffs::Zero(1)) {}

  BasicKernel(const GridSpec& grid, int order)
      : grid_(grid), order_(order), coeffs_(Coeffs::Zero(tensor_size(grid.cells, order))) {}

  BasicKernel(const GridSpec& grid, int order, Coeffs coeffs)
      : grid_(grid), order_(order), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != tensor_size(grid.cells, order))
      throw ShapeError("Kernel: coefficient count " + std::to_string(coeffs_.size()) +
                       " != cells^order = " + std::to_string(tensor_size(grid.cells, order)));
  }

  static BasicKernel scalar(const GridSpec& grid, Scalar value) {
    Coeffs c(1);
    c(0) = value;
    return BasicKernel(grid, 0, std::move(c));
  }

  /// e_{i_1} x ... x e_{i_n}
  static BasicKernel basis(const GridSpec& grid, std::span<const Index> idx) {
    BasicKernel out(grid, static_cast<int>(idx.size()));
    out.coeffs_(out.flat_index(idx)) = Scalar(1);
    return out;
  }
  static BasicKernel basis(const GridSpec& grid, std::initializer_list<Index> idx) {
    return basis(grid, std::span<const Index>(idx.begin(), idx.size()));
  }

  int order() const { return order_; }
  const GridSpec& grid() const { return grid_; }
  Index cells() const { return grid_.cells; }
  Index size() const { return coeffs_.size(); }
  const Coeffs& coeffs() const { return coeffs_; }

  Index flat_index(std::span<const Index> idx) const {
    if (static_cast<int>(idx.size()) != order_) throw ShapeError("Kernel: index arity mismatch");
    Index flat = 0;
    for (Index i : idx) {
      if (i < 0 || i >= grid_.cells) throw ShapeError("Kernel: cell index out of range");
      flat = flat * grid_.cells + i;
    }
    return flat;
  }

  Scalar at(std::initializer_list<Index> idx) const {
    return coeffs_(flat_index(std::span<const Index>(idx.begin(), idx.size())));
  }
  Scalar value() const {
    if (order_ != 0) throw ShapeError("Kernel::value: order is not 0");
    return coeffs_(0);
  }

  Real squared_norm() const { return coeffs_.squaredNorm(); }
  Real norm() const { return coeffs_.norm(); }
  bool is_zero() const { return coeffs_.isZero(0); }

  BasicKernel& operator+=(const BasicKernel& other) {
    check_compatible(other, "Kernel +=");
    coeffs_ += other.coeffs_;
    return *this;
  }
  BasicKernel& operator-=(const BasicKernel& other) {
    check_compatible(other, "Kernel -=");
    coeffs_ -= other.coeffs_;
    return *this;
  }
  BasicKernel& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }

  friend BasicKernel operator+(BasicKernel a, const BasicKernel& b) { return a += b; }
  friend BasicKernel operator-(BasicKernel a, const BasicKernel& b) { return a -= b; }
  friend BasicKernel operator*(Scalar s, BasicKernel a) { return a *= s; }
  friend BasicKernel operator*(BasicKernel a, Scalar s) { return a *= s; }

  /// Exact coefficient-wise equality (same grid and order).
  friend bool operator==(const BasicKernel& a, const BasicKernel& b) {
    return a.grid_ == b.grid_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const BasicKernel& other, const char* what) const {
    require_same_grid(grid_, other.grid_, what);
    if (order_ != other.order_) throw ShapeError(std::string(what) + ": order mismatch");
  }

  GridSpec grid_{};
  int order_ = 0;
  Coeffs coeffs_;
};

using Kernel = BasicKernel<double>;

namespace detail {

// perm[flat] = flat index of the digit-reversed multi-index, base `cells`,
// `order` digits.
inline std::vector<Index> reversal_permutation(Index cells, int order) {
  const Index n = tensor_size(cells, order);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index flat = 0; flat < n; ++flat) {
    Index rest = flat, rev = 0;
    for (int d = 0; d < order; ++d) {
      rev = rev * cells + rest % cells;
      rest /= cells;
    }
    perm[static_cast<std::size_t>(flat)] = rev;
  }
  return perm;
}

template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace detail

/// f^*(t_1..t_n) = conj f(t_n..t_1)
template <typename Real>
BasicKernel<Real> adjoint(const BasicKernel<Real>& f) {
  const auto perm = detail::reversal_permutation(f.cells(), f.order());
  typename BasicKernel<Real>::Coeffs out(f.size());
  for (Index i = 0; i < f.size(); ++i) out(perm[static_cast<std::size_t>(i)]) = std::conj(f.coeffs()(i));
  return BasicKernel<Real>(f.grid(), f.order(), std::move(out));
}

/// Conjugate and reverse the two legs of an order-(left+right) kernel
/// separately: out(u_left..u_1, v_right..v_1) = conj f(u_1..u_left, v_1..v_right).
///
/// This is the adjoint on a two-leg tensor (A x B)^* = A^* x B^*, and applied
/// to a coordinate slice it produces the reordered-conjugate slice used by the
/// Stein kernel expansion.
template <typename Real>
BasicKernel<Real> split_adjoint(const BasicKernel<Real>& f, int left) {
  if (left < 0 || left > f.order()) throw ShapeError("split_adjoint: leg split out of range");
  const int right = f.order() - left;
  const Index cols = tensor_size(f.cells(), right);
  const auto perm_left = detail::reversal_permutation(f.cells(), left);
  const auto perm_right = detail::reversal_permutation(f.cells(), right);
  typename BasicKernel<Real>::Coeffs out(f.size());
  for (Index a = 0; a < static_cast<Index>(perm_left.size()); ++a)
    for (Index b = 0; b < cols; ++b)
      out(perm_left[static_cast<std::size_t>(a)] * cols + perm_right[static_cast<std::size_t>(b)]) =
          std::conj(f.coeffs()(a * cols + b));
  return BasicKernel<Real>(f.grid(), f.order(), std::move(out));
}

/// Contraction of order p:
///   out(i_1..i_{n-p}, j_{p+1}..j_q) = sum_s f(i_1..i_{n-p}, s_p..s_1) g(s_1..s_p, j_{p+1}..j_q).
/// The last p arguments of f are glued to the first p arguments of g in
/// reversed order. p = 0 is the tensor product; p = n = q is a scalar.
template <typename Real>
BasicKernel<Real> contract(const BasicKernel<Real>& f, const BasicKernel<Real>& g, int p) {
  using Scalar = typename BasicKernel<Real>::Scalar;
  using Mat = detail::RowMajorMatrix<Scalar>;
  require_same_grid(f.grid(), g.grid(), "contract");
  if (p < 0 || p > f.order() || p > g.order()) throw ShapeError("contract: p out of range");

  const Index m = f.cells();
  const Index rows = tensor_size(m, f.order() - p);
  const Index inner = tensor_size(m, p);
  const Index cols = tensor_size(m, g.order() - p);

  Eigen::Map<const Mat> lhs(f.coeffs().data(), rows, inner);
  Eigen::Map<const Mat> rhs(g.coeffs().data(), inner, cols);

  // Column c of lhs encodes (s_p..s_1); it meets row reverse(c) of rhs.
  const auto perm = detail::reversal_permutation(m, p);
  Mat reordered(inner, cols);
  for (Index c = 0; c < inner; ++c) reordered.row(c) = rhs.row(perm[static_cast<std::size_t>(c)]);

  typename BasicKernel<Real>::Coeffs out(rows * cols);
  Eigen::Map<Mat>(out.data(), rows, cols).noalias() = lhs * reordered;
  return BasicKernel<Real>(f.grid(), f.order() + g.order() - 2 * p, std::move(out));
}

template <typename Real>
BasicKernel<Real> tensor(const BasicKernel<Real>& f, const BasicKernel<Real>& g) {
  return contract(f, g, 0);
}

/// Coordinate slice: fixes argument k (1-based) of f to cell s.
///   out(i_1..i_{k-1}, i_{k+1}..i_n) = f(i_1..i_{k-1}, s, i_{k+1}..i_n)
template <typename Real>
BasicKernel<Real> slice(const BasicKernel<Real>& f, int k, Index s) {
  const int n = f.order();
  if (n < 1) throw ShapeError("slice: order must be >= 1");
  if (k < 1 || k > n) throw ShapeError("slice: position k out of range");
  if (s < 0 || s >= f.cells()) throw ShapeError("slice: cell index out of range");
  const Index m = f.cells();
  const Index before = tensor_size(m, k - 1);
  const Index after = tensor_size(m, n - k);
  typename BasicKernel<Real>::Coeffs out(before * after);
  for (Index b = 0; b < before; ++b)
    out.segment(b * after, after) = f.coeffs().segment((b * m + s) * after, after);
  return BasicKernel<Real>(f.grid(), n - 1, std::move(out));
}

/// sum conj(f) g
template <typename Real>
std::complex<Real> inner(const BasicKernel<Real>& f, const BasicKernel<Real>& g) {
  require_same_grid(f.grid(), g.grid(), "inner");
  if (f.order() != g.order()) throw ShapeError("inner: order mismatch");
  return f.coeffs().dot(g.coeffs());
}

template <typename Real>
Real norm(const BasicKernel<Real>& f) {
  return f.norm();
}

/// f == f^* entrywise, within an absolute tolerance (0 means exact).
template <typename Real>
bool is_mirror_symmetric(const BasicKernel<Real>& f, Real tol = Real(0)) {
  const auto perm = detail::reversal_permutation(f.cells(), f.order());
  for (Index i = 0; i < f.size(); ++i) {
    const auto diff = f.coeffs()(i) - std::conj(f.coeffs()(perm[static_cast<std::size_t>(i)]));
    if (tol == Real(0) ? diff != std::complex<Real>(0) : std::abs(diff) > tol) return false;
  }
  return true;
}

/// Real-valued and invariant under every permutation of the arguments.
/// Adjacent transpositions generate the symmetric group, so checking those
/// suffices.
template <typename Real>
bool is_fully_symmetric(const BasicKernel<Real>& f, Real tol = Real(0)) {
  const auto exceeds = [tol](Real v) { return tol == Real(0) ? v != Real(0) : v > tol; };
  for (Index i = 0; i < f.size(); ++i)
    if (exceeds(std::abs(f.coeffs()(i).imag()))) return false;

  const Index m = f.cells();
  for (int pos = 0; pos + 1 < f.order(); ++pos) {
    const Index lo = tensor_size(m, f.order() - pos - 2);  // stride of digit pos+1
    const Index hi = lo * m;                               // stride of digit pos
    for (Index i = 0; i < f.size(); ++i) {
      const Index a = (i / hi) % m, b = (i / lo) % m;
      const Index swapped = i + (b - a) * hi + (a - b) * lo;
      if (exceeds(std::abs(f.coeffs()(i) - f.coeffs()(swapped)))) return false;
    }
  }
  return true;
}

}  // namespace wigner
