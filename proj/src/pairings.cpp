#include "wigner/pairings.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wigner/error.hpp"

namespace wigner {

Pairing::Pairing(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_)
    if (b.first > b.second) std::swap(b.first, b.second);
  std::sort(blocks_.begin(), blocks_.end());
  partner_.assign(2 * blocks_.size(), -1);
  for (const auto& [a, b] : blocks_) {
    const int n = static_cast<int>(partner_.size());
    if (a < 0 || b >= n || a == b) throw ShapeError("Pairing: point out of range");
    if (partner_[a] != -1 || partner_[b] != -1) throw ShapeError("Pairing: point used twice");
    partner_[a] = b;
    partner_[b] = a;
  }
}

int BlockStructure::total() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

std::vector<int> BlockStructure::labels() const {
  std::vector<int> out;
  for (std::size_t r = 0; r < lengths.size(); ++r) {
    if (lengths[r] < 1) throw ShapeError("BlockStructure: interval lengths must be positive");
    out.insert(out.end(), static_cast<std::size_t>(lengths[r]), static_cast<int>(r));
  }
  return out;
}

namespace {

void check_points(int points) {
  if (points < 0 || points % 2 != 0) throw ShapeError("pairings: odd or negative number of points");
  if (points > kMaxPairingPoints)
    throw BudgetExceeded("pairings: " + std::to_string(points) + " points exceeds the guard of " +
                         std::to_string(kMaxPairingPoints));
}

// Recursive "pair the smallest free point"; `allowed(i, j)` filters blocks.
template <typename Allowed>
void pair_up(std::vector<int>& partner, std::vector<Pairing::Block>& blocks, const Allowed& allowed,
             std::vector<Pairing>& out) {
  const auto first = std::find(partner.begin(), partner.end(), -1);
  if (first == partner.end()) {
    out.emplace_back(blocks);
    return;
  }
  const int i = static_cast<int>(first - partner.begin());
  for (int j = i + 1; j < static_cast<int>(partner.size()); ++j) {
    if (partner[j] != -1 || !allowed(i, j)) continue;
    partner[i] = j;
    partner[j] = i;
    blocks.emplace_back(i, j);
    pair_up(partner, blocks, allowed, out);
    blocks.pop_back();
    partner[i] = partner[j] = -1;
  }
}

}  // namespace

std::vector<Pairing> enumerate_pairings(int points) {
  check_points(points);
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  std::vector<Pairing::Block> blocks;
  std::vector<Pairing> out;
  pair_up(partner, blocks, [](int, int) { return true; }, out);
  return out;
}

bool is_noncrossing(const Pairing& pi) {
  const auto& b = pi.blocks();
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      // blocks are (min,max); crossing iff a < c < b < d
      const auto [a, bb] = b[x];
      const auto [c, d] = b[y];
      if (a < c && c < bb && bb < d) return false;
    }
  return true;
}

std::vector<Pairing> enumerate_respecting(const BlockStructure& bs, bool noncrossing_only) {
  const auto labels = bs.labels();
  check_points(static_cast<int>(labels.size()));
  std::vector<int> partner(labels.size(), -1);
  std::vector<Pairing::Block> blocks;
  std::vector<Pairing> out;
  pair_up(partner, blocks, [&labels](int i, int j) { return labels[i] != labels[j]; }, out);
  if (noncrossing_only) std::erase_if(out, [](const Pairing& p) { return !is_noncrossing(p); });
  return out;
}

std::uint64_t double_factorial_odd(int k) {
  std::uint64_t r = 1;
  for (int i = 2 * k - 1; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t catalan(int k) {
  // C_{j+1} = C_j * 2(2j+1)/(j+2), exact in integers
  std::uint64_t c = 1;
  for (int j = 0; j < k; ++j) c = c * 2 * (2 * static_cast<std::uint64_t>(j) + 1) / (static_cast<std::uint64_t>(j) + 2);
  return c;
}

PairingCounts count_pairings(int points) {
  const auto all = enumerate_pairings(points);
  PairingCounts out;
  out.points = points;
  out.all = all.size();
  out.noncrossing = static_cast<std::uint64_t>(std::count_if(all.begin(), all.end(), is_noncrossing));
  return out;
}

}  // namespace wigner
