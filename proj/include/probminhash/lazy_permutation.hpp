#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

#include "probminhash/errors.hpp"
#include "probminhash/random_stream.hpp"

namespace probminhash {

/// Fisher-Yates shuffle of {0, ..., m-1} generated one element at a time,
/// with an O(1) reset between permutations.
///
/// An entry of the work array counts as initialized for the current
/// permutation only if its version equals the epoch counter; otherwise it
/// holds its initial value (its own index). Starting a new permutation only
/// bumps the counter, so the two length-m arrays are reused for every input
/// element.
class LazyPermutation {
 public:
  explicit LazyPermutation(std::uint32_t m) : perm_(checked(m)), version_(m, 0) {
    std::iota(perm_.begin(), perm_.end(), std::uint32_t{0});
  }

  void reset() noexcept {
    emitted_ = 0;
    ++epoch_;
  }

  /// Next element of the current permutation. At most m calls per epoch.
  std::uint32_t next(RandomStream& rng) {
    assert(emitted_ < size());
    const std::uint32_t i = emitted_++;
    const auto j = i + static_cast<std::uint32_t>(rng.next_uniform_int(size() - i));
    const std::uint32_t label = version_[j] == epoch_ ? perm_[j] : j;
    perm_[j] = version_[i] == epoch_ ? perm_[i] : i;
    version_[j] = epoch_;
    return label;
  }

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(perm_.size()); }
  std::uint32_t emitted() const noexcept { return emitted_; }
  std::uint64_t epoch() const noexcept { return epoch_; }

 private:
  static std::size_t checked(std::uint32_t m) {
    if (m == 0) throw InvalidParamsError("permutation size must be >= 1");
    return m;
  }

  std::vector<std::uint32_t> perm_;
  std::vector<std::uint64_t> version_;
  std::uint64_t epoch_ = 0;
  std::uint32_t emitted_ = 0;
};

}  // namespace probminhash
