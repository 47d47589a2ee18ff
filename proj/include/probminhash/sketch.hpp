#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace probminhash {

enum class Algorithm : std::uint8_t {
  kPMinHash,
  kProbMinHash1,
  kProbMinHash1a,
  kProbMinHash2,
  kProbMinHash3,
  kProbMinHash3a,
  kProbMinHash4,
  kMinHash,
  kSuperMinHash,
  kOphDensified,
};

/// Canonical lower-case name, e.g. "probminhash3a" or "oph".
std::string_view algorithm_name(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
std::span<const Algorithm> all_algorithms() noexcept;

/// False for the baselines that only take unweighted sets (MinHash,
/// SuperMinHash, OPH).
bool accepts_weights(Algorithm algorithm) noexcept;
/// 2 for the algorithms that need m >= 2, else 1.
std::uint32_t min_signature_size(Algorithm algorithm) noexcept;
/// True for the interleaved variants that keep an element buffer.
bool is_interleaved(Algorithm algorithm) noexcept;
/// True if signature components are statistically independent.
bool has_independent_components(Algorithm algorithm) noexcept;

struct WeightedElement {
  std::uint64_t id = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedElement&, const WeightedElement&) = default;
};

/// Weighted input set. Element ids must be unique; entries with weight 0 are
/// ignored, negative or non-finite weights are rejected.
using WeightedSet = std::vector<WeightedElement>;

/// One element id per signature component.
using Signature = std::vector<std::uint64_t>;

struct SketchStats {
  std::uint64_t points_generated = 0;
  /// Buffer occupancy after the first pass (interleaved variants only).
  std::uint64_t max_buffer_size = 0;
  std::uint64_t tree_node_writes = 0;
  /// Signature updates made in the second and later passes (interleaved only).
  std::uint64_t late_pass_updates = 0;
};

struct SketchResult {
  Signature signature;
  SketchStats stats;
};

/// Reusable sketcher for one algorithm and signature size.
///
/// Holds the scratch space (stop limit tree, permutation arrays, element
/// buffer) that is reused across calls, so one instance should be kept per
/// thread when many sets are processed. Elements are processed exactly in
/// the given order.
class Sketcher {
 public:
  /// Throws InvalidParamsError if m is below min_signature_size(algorithm).
  Sketcher(Algorithm algorithm, std::uint32_t m);
  ~Sketcher();
  Sketcher(Sketcher&&) noexcept;
  Sketcher& operator=(Sketcher&&) noexcept;

  /// Signature of a weighted set, with collision probability equal to the
  /// probability Jaccard similarity. Throws EmptyInputError if no element has
  /// positive weight and InvalidParamsError for baselines that do not accept
  /// weights.
  SketchResult compute(std::span<const WeightedElement> set);

  /// Signature of an unweighted set, with collision probability equal to the
  /// Jaccard similarity. ProbMinHash variants use their unweighted
  /// specializations here.
  SketchResult compute_unweighted(std::span<const std::uint64_t> ids);

  Algorithm algorithm() const noexcept;
  std::uint32_t size() const noexcept;

  class Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

SketchResult sketch(Algorithm algorithm, std::span<const WeightedElement> set, std::uint32_t m);
SketchResult sketch_unweighted(Algorithm algorithm, std::span<const std::uint64_t> ids,
                               std::uint32_t m);

// One-shot entry points. The id-span overloads run the unweighted
// specializations.
SketchResult pminhash(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash1(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash1(std::span<const std::uint64_t> ids, std::uint32_t m);
SketchResult probminhash1a(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash1a(std::span<const std::uint64_t> ids, std::uint32_t m);
SketchResult probminhash2(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash2(std::span<const std::uint64_t> ids, std::uint32_t m);
SketchResult probminhash3(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash3(std::span<const std::uint64_t> ids, std::uint32_t m);
SketchResult probminhash3a(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash3a(std::span<const std::uint64_t> ids, std::uint32_t m);
SketchResult probminhash4(std::span<const WeightedElement> set, std::uint32_t m);
SketchResult probminhash4(std::span<const std::uint64_t> ids, std::uint32_t m);
Signature minhash(std::span<const std::uint64_t> ids, std::uint32_t m);
Signature superminhash(std::span<const std::uint64_t> ids, std::uint32_t m);
Signature oph_densified(std::span<const std::uint64_t> ids, std::uint32_t m);

/// Upper bound on generated points per element (and on passes for the
/// interleaved variants): 64 m (1 + ln m). Exceeding it raises
/// RandomnessFailure.
std::uint64_t iteration_cap(std::uint32_t m) noexcept;

}  // namespace probminhash
