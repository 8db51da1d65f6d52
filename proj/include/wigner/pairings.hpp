#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wigner {

/// Perfect matching of the points {0, ..., 2k-1}.
///
/// Blocks are stored as (smaller, larger) pairs, sorted by their smaller
/// element; `partner` is the inverse view. Points are 0-based here even though
/// the usual mathematical convention numbers them from 1.
class Pairing {
 public:
  using Block = std::pair<int, int>;

  Pairing() = default;
  explicit Pairing(std::vector<Block> blocks);

  int points() const { return static_cast<int>(partner_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  int partner(int i) const { return partner_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::vector<Block> blocks_;
  std::vector<int> partner_;
};

/// Interval lengths n_1..n_r partitioning {0..sum-1} into consecutive runs.
struct BlockStructure {
  std::vector<int> lengths;

  int total() const;
  /// Interval id of every point.
  std::vector<int> labels() const;
};

inline constexpr int kMaxPairingPoints = 16;

/// All (2k-1)!! pairings in canonical order (pair the smallest unpaired point
/// with each later unpaired point in increasing order).
std::vector<Pairing> enumerate_pairings(int points);

/// No i<j<k<l with {i,k} and {j,l} both blocks.
bool is_noncrossing(const Pairing& pi);

/// Pairings with no block inside a single interval, optionally restricted to
/// non-crossing ones. Canonical order as in enumerate_pairings.
std::vector<Pairing> enumerate_respecting(const BlockStructure& bs, bool noncrossing_only);

struct PairingCounts {
  int points = 0;
  std::uint64_t all = 0;
  std::uint64_t noncrossing = 0;
};

PairingCounts count_pairings(int points);

std::uint64_t double_factorial_odd(int k);  // (2k-1)!!
std::uint64_t catalan(int k);

}  // namespace wigner
