#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <string>

#include "wigner/error.hpp"

namespace wigner {

using Index = Eigen::Index;

/// Uniform partition of [0, cells*width) into `cells` intervals.
///
/// The induced basis e_i = width^{-1/2} 1_{[i*width, (i+1)*width)} is
/// orthonormal in L^2(R_+), so every kernel built on the grid is stored as
/// its (exact) coefficient tensor in that basis and all integrals reduce to
/// finite sums over cell indices.
struct GridSpec {
  Index cells = 1;
  double width = 1.0;

  GridSpec() = default;
  GridSpec(Index cells_, double width_ = 1.0) : cells(cells_), width(width_) {
    if (cells < 1) throw ShapeError("GridSpec: cells must be >= 1");
    if (!(width > 0.0)) throw ShapeError("GridSpec: width must be > 0");
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// cells^order, throwing if the result does not fit an Index.
inline Index tensor_size(Index cells, int order) {
  if (order < 0) throw ShapeError("tensor_size: negative order");
  Index out = 1;
  for (int i = 0; i < order; ++i) {
    if (out > std::numeric_limits<Index>::max() / cells)
      throw BudgetExceeded("tensor_size: m^n overflows");
    out *= cells;
  }
  return out;
}

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) throw ShapeError(std::string(what) + ": grid mismatch");
}

}  // namespace wigner
