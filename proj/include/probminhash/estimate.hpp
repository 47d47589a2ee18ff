#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "probminhash/sketch.hpp"

namespace probminhash {

/// Weights of one element in the two compared sets. A zero coordinate means
/// the element is absent from that set.
struct WeightPair {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// Multiset of weight pairs describing a pair of weighted sets up to the
/// element ids. Every pair needs a positive coordinate and no negative one.
using WeightPairMultiset = std::vector<WeightPair>;

/// Throws InvalidParamsError unless the multiset is nonempty and every pair
/// is finite, nonnegative and not (0, 0).
void validate(std::span<const WeightPair> pairs);

/// |A ∩ B| / |A ∪ B|. Duplicate ids are counted once. Throws
/// InvalidParamsError if both sets are empty.
double jaccard_exact(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Probability Jaccard similarity. Quadratic in the number of pairs.
double jaccard_p_exact(std::span<const WeightPair> pairs);

/// Σ min / Σ max of the raw weights.
double jaccard_w_exact(std::span<const WeightPair> pairs);

/// Weighted Jaccard after normalizing each side to total weight 1.
double jaccard_n_exact(std::span<const WeightPair> pairs);

/// Fraction of equal components. Throws InvalidParamsError on size mismatch
/// or empty signatures.
double estimate_similarity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Number of equal components.
std::uint32_t count_matches(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

struct BBitSignature {
  std::vector<std::uint16_t> components;
  int bits = 0;
};

/// Hash of (component value, component index) used by the b-bit reduction:
/// mix64(mix64(value) ^ index * 0x9E3779B97F4A7C15), mix64 being the
/// splitmix64 finalizer. The low b bits form the reduced component.
std::uint64_t bbit_component_hash(std::uint64_t value, std::uint64_t index) noexcept;

/// Keeps b in [1, 16] bits of each component's hash.
BBitSignature bbit_reduce(std::span<const std::uint64_t> signature, int bits);

/// Match fraction corrected for random b-bit collisions,
/// (C - 2^-b) / (1 - 2^-b), clamped to [0, 1].
double estimate_similarity_bbit(const BBitSignature& a, const BBitSignature& b);

/// Variance improvement factor of SuperMinHash-style signatures over
/// independent components, for signature size m and union size u. Both must
/// be at least 2.
double improvement_factor(std::uint64_t m, std::uint64_t u);

/// j (1 - j) / m.
double estimator_variance(double j, std::uint64_t m);

/// estimator_variance(j, m) * improvement_factor(m, u).
double superminhash_variance(double j, std::uint64_t m, std::uint64_t u);

/// Harmonic number 1 + 1/2 + ... + 1/n.
double harmonic_number(std::uint64_t n) noexcept;

}  // namespace probminhash
