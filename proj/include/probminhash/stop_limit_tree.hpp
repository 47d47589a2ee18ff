#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "probminhash/errors.hpp"

namespace probminhash {

/// Running maximum over m per-component minima under decrease-only updates.
///
/// Nodes are stored in one flat array of size 2m - 1: indices [0, m) are the
/// leaves, and nodes 2j and 2j + 1 share the parent m + j. The last node is
/// the root and holds the maximum of all leaves. An update walks up from the
/// modified leaf and stops as soon as a parent does not change, which takes
/// O(1) node writes on average when leaves are picked uniformly.
class StopLimitTree {
 public:
  explicit StopLimitTree(std::uint32_t m)
      : m_(m), nodes_(checked_node_count(m), std::numeric_limits<double>::infinity()) {}

  /// Resets every node to +infinity.
  void reset() noexcept {
    std::fill(nodes_.begin(), nodes_.end(), std::numeric_limits<double>::infinity());
  }

  /// Replaces leaf k by the smaller value h and repairs the ancestors.
  void update(std::uint32_t k, double h) noexcept {
    assert(k < m_);
    assert(h < nodes_[k]);
    const std::size_t end = nodes_.size();
    std::size_t index = k;
    while (h < nodes_[index]) {
      nodes_[index] = h;
      ++node_writes_;
      const std::size_t parent = m_ + (index >> 1);
      if (parent >= end) break;
      const std::size_t sibling = index ^ 1;
      if (nodes_[sibling] >= nodes_[parent]) break;
      if (h < nodes_[sibling]) h = nodes_[sibling];
      index = parent;
    }
  }

  double max() const noexcept { return nodes_.back(); }
  double leaf(std::uint32_t k) const noexcept { return nodes_[k]; }
  std::uint32_t size() const noexcept { return m_; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  /// Number of node assignments performed by update() since construction.
  std::uint64_t node_writes() const noexcept { return node_writes_; }

 private:
  static std::size_t checked_node_count(std::uint32_t m) {
    if (m == 0) throw InvalidParamsError("stop limit tree requires m >= 1");
    return 2 * static_cast<std::size_t>(m) - 1;
  }

  std::uint32_t m_;
  std::vector<double> nodes_;
  std::uint64_t node_writes_ = 0;
};

}  // namespace probminhash
