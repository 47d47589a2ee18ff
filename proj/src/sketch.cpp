#include "probminhash/sketch.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "probminhash/errors.hpp"
#include "probminhash/lazy_permutation.hpp"
#include "probminhash/random_stream.hpp"
#include "probminhash/stop_limit_tree.hpp"

namespace probminhash {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Salt for the densification probe streams of OPH; keeps them apart from
// element streams seeded with small ids.
constexpr std::uint64_t kDensificationSalt = 0x6a09e667f3bcc909ULL;

struct AlgorithmInfo {
  Algorithm algorithm;
  std::string_view name;
  bool weights;
  std::uint32_t min_m;
  bool interleaved;
  bool independent;
};

constexpr std::array<AlgorithmInfo, 10> kAlgorithms{{
    {Algorithm::kPMinHash, "pminhash", true, 1, false, true},
    {Algorithm::kProbMinHash1, "probminhash1", true, 1, false, true},
    {Algorithm::kProbMinHash1a, "probminhash1a", true, 1, true, true},
    {Algorithm::kProbMinHash2, "probminhash2", true, 1, false, true},
    {Algorithm::kProbMinHash3, "probminhash3", true, 2, false, false},
    {Algorithm::kProbMinHash3a, "probminhash3a", true, 2, true, false},
    {Algorithm::kProbMinHash4, "probminhash4", true, 2, false, false},
    {Algorithm::kMinHash, "minhash", false, 1, false, true},
    {Algorithm::kSuperMinHash, "superminhash", false, 2, false, false},
    {Algorithm::kOphDensified, "oph", false, 1, false, false},
}};

constexpr std::array<Algorithm, 10> kAlgorithmList{
    Algorithm::kPMinHash,      Algorithm::kProbMinHash1,  Algorithm::kProbMinHash1a,
    Algorithm::kProbMinHash2,  Algorithm::kProbMinHash3,  Algorithm::kProbMinHash3a,
    Algorithm::kProbMinHash4,  Algorithm::kMinHash,       Algorithm::kSuperMinHash,
    Algorithm::kOphDensified,
};

const AlgorithmInfo& info(Algorithm algorithm) noexcept {
  return kAlgorithms[static_cast<std::size_t>(algorithm)];
}

template <class Input>
inline constexpr bool kUnweighted = std::is_same_v<Input, std::uint64_t>;

// Reads id and reciprocal weight; returns false for zero-weight entries.
template <class Input>
inline bool read_element(const Input& input, std::uint64_t& id, double& inverse_weight) {
  if constexpr (kUnweighted<Input>) {
    id = input;
    inverse_weight = 1.0;
    return true;
  } else {
    const double w = input.weight;
    if (w > 0.0 && w < kInfinity) {
      id = input.id;
      inverse_weight = 1.0 / w;
      return true;
    }
    if (w == 0.0) return false;
    throw InvalidParamsError("element weights must be finite and nonnegative, got " +
                             std::to_string(w) + " for element " + std::to_string(input.id));
  }
}

[[noreturn]] void throw_empty(Algorithm algorithm) {
  throw EmptyInputError(std::string(algorithm_name(algorithm)) +
                        ": input set has no element with positive weight");
}

[[noreturn]] void throw_cap(Algorithm algorithm, std::uint64_t id) {
  throw RandomnessFailure(std::string(algorithm_name(algorithm)) +
                          ": iteration cap exceeded while processing element " +
                          std::to_string(id));
}

}  // namespace

class Sketcher::Impl {
 public:
  Impl(Algorithm algorithm, std::uint32_t m)
      : algorithm_(algorithm), m_(m), cap_(iteration_cap(m)) {}
  virtual ~Impl() = default;

  virtual SketchResult compute(std::span<const WeightedElement> set) = 0;
  virtual SketchResult compute_unweighted(std::span<const std::uint64_t> ids) = 0;

  Algorithm algorithm() const noexcept { return algorithm_; }
  std::uint32_t size() const noexcept { return m_; }

 protected:
  Algorithm algorithm_;
  std::uint32_t m_;
  std::uint64_t cap_;
};

namespace {

// Dispatches both input kinds to a single templated run<Input>().
template <class Derived>
class SketcherBase : public Sketcher::Impl {
 public:
  using Sketcher::Impl::Impl;

  SketchResult compute(std::span<const WeightedElement> set) override {
    return static_cast<Derived*>(this)->template run<WeightedElement>(set);
  }
  SketchResult compute_unweighted(std::span<const std::uint64_t> ids) override {
    return static_cast<Derived*>(this)->template run<std::uint64_t>(ids);
  }
};

// Baselines that are only defined for unweighted sets.
template <class Derived>
class UnweightedBase : public Sketcher::Impl {
 public:
  using Sketcher::Impl::Impl;

  SketchResult compute(std::span<const WeightedElement>) override {
    throw InvalidParamsError(std::string(algorithm_name(algorithm_)) +
                             " only accepts unweighted sets");
  }
  SketchResult compute_unweighted(std::span<const std::uint64_t> ids) override {
    return static_cast<Derived*>(this)->run(ids);
  }
};

// Algorithms driven by the stop limit tree share this state.
class TreeState {
 public:
  explicit TreeState(std::uint32_t m) : tree_(m), signature_(m) {}

  void begin() noexcept {
    tree_.reset();
    writes_at_begin_ = tree_.node_writes();
  }

  void set(std::uint32_t k, double h, std::uint64_t id) noexcept {
    signature_[k] = id;
    tree_.update(k, h);
  }

  SketchResult finish(SketchStats stats) {
    stats.tree_node_writes = tree_.node_writes() - writes_at_begin_;
    return {signature_, stats};
  }

  StopLimitTree tree_;
  Signature signature_;
  std::uint64_t writes_at_begin_ = 0;
};

class PMinHash final : public SketcherBase<PMinHash> {
 public:
  PMinHash(Algorithm a, std::uint32_t m) : SketcherBase(a, m), minima_(m), signature_(m) {}

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    std::fill(minima_.begin(), minima_.end(), kInfinity);
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      for (std::uint32_t k = 0; k < m_; ++k) {
        const double h = inverse_weight * rng.next_exp1();
        if (h < minima_[k]) {
          minima_[k] = h;
          signature_[k] = id;
        }
      }
      stats.points_generated += m_;
    }
    if (!any) throw_empty(algorithm_);
    return {signature_, stats};
  }

 private:
  std::vector<double> minima_;
  Signature signature_;
};

class MinHash final : public UnweightedBase<MinHash> {
 public:
  MinHash(Algorithm a, std::uint32_t m) : UnweightedBase(a, m), minima_(m), signature_(m) {}

  SketchResult run(std::span<const std::uint64_t> ids) {
    if (ids.empty()) throw_empty(algorithm_);
    std::fill(minima_.begin(), minima_.end(), kInfinity);
    for (const std::uint64_t id : ids) {
      RandomStream rng(id);
      for (std::uint32_t k = 0; k < m_; ++k) {
        const double h = rng.next_uniform01();
        if (h < minima_[k]) {
          minima_[k] = h;
          signature_[k] = id;
        }
      }
    }
    SketchStats stats;
    stats.points_generated = static_cast<std::uint64_t>(ids.size()) * m_;
    return {signature_, stats};
  }

 private:
  std::vector<double> minima_;
  Signature signature_;
};

class ProbMinHash1 final : public SketcherBase<ProbMinHash1> {
 public:
  ProbMinHash1(Algorithm a, std::uint32_t m) : SketcherBase(a, m), state_(m) {}

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    auto& tree = state_.tree_;
    state_.begin();
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      double h = inverse_weight * rng.next_exp1();
      std::uint64_t points = 1;
      while (h < tree.max()) {
        const auto k = static_cast<std::uint32_t>(rng.next_uniform_int(m_));
        if (h < tree.leaf(k)) {
          state_.set(k, h, id);
          if (h >= tree.max()) break;
        }
        h += inverse_weight * rng.next_exp1();
        if (++points > cap_) throw_cap(algorithm_, id);
      }
      stats.points_generated += points;
    }
    if (!any) throw_empty(algorithm_);
    return state_.finish(stats);
  }

 private:
  TreeState state_;
};

class ProbMinHash1a final : public SketcherBase<ProbMinHash1a> {
 public:
  ProbMinHash1a(Algorithm a, std::uint32_t m) : SketcherBase(a, m), state_(m) {
    buffer_.reserve(4 * static_cast<std::size_t>(m));
  }

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    auto& tree = state_.tree_;
    state_.begin();
    buffer_.clear();
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      const double h = inverse_weight * rng.next_exp1();
      ++stats.points_generated;
      if (h >= tree.max()) continue;
      const auto k = static_cast<std::uint32_t>(rng.next_uniform_int(m_));
      if (h < tree.leaf(k)) {
        state_.set(k, h, id);
        if (h >= tree.max()) continue;
      }
      buffer_.push_back({id, inverse_weight, rng, h});
    }
    if (!any) throw_empty(algorithm_);
    stats.max_buffer_size = buffer_.size();

    std::uint64_t pass = 1;
    while (!buffer_.empty()) {
      if (++pass > cap_) throw_cap(algorithm_, buffer_.front().id);
      std::size_t kept = 0;
      for (std::size_t j = 0; j < buffer_.size(); ++j) {
        Entry entry = buffer_[j];
        if (entry.h >= tree.max()) continue;
        entry.h += entry.inverse_weight * entry.rng.next_exp1();
        ++stats.points_generated;
        if (entry.h >= tree.max()) continue;
        const auto k = static_cast<std::uint32_t>(entry.rng.next_uniform_int(m_));
        if (entry.h < tree.leaf(k)) {
          state_.set(k, entry.h, entry.id);
          ++stats.late_pass_updates;
          if (entry.h >= tree.max()) continue;
        }
        buffer_[kept++] = entry;
      }
      buffer_.erase(buffer_.begin() + static_cast<std::ptrdiff_t>(kept), buffer_.end());
    }
    return state_.finish(stats);
  }

 private:
  struct Entry {
    std::uint64_t id;
    double inverse_weight;
    RandomStream rng;
    double h;
  };

  TreeState state_;
  std::vector<Entry> buffer_;
};

class ProbMinHash2 final : public SketcherBase<ProbMinHash2> {
 public:
  ProbMinHash2(Algorithm a, std::uint32_t m)
      : SketcherBase(a, m), state_(m), permutation_(m), spacing_(m, 1.0) {
    // spacing_[p] scales the gap before the (p+1)-th point: m / (m - p)
    for (std::uint32_t p = 1; p < m; ++p) {
      spacing_[p] = static_cast<double>(m) / static_cast<double>(m - p);
    }
  }

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    auto& tree = state_.tree_;
    state_.begin();
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      permutation_.reset();
      double h = inverse_weight * rng.next_exp1();
      std::uint32_t p = 0;
      ++stats.points_generated;
      while (h < tree.max()) {
        const std::uint32_t k = permutation_.next(rng);
        if (h < tree.leaf(k)) {
          state_.set(k, h, id);
          if (h >= tree.max()) break;
        }
        // all labels used: the last point always ends the loop above
        if (++p == m_) break;
        h += inverse_weight * spacing_[p] * rng.next_exp1();
        ++stats.points_generated;
      }
    }
    if (!any) throw_empty(algorithm_);
    return state_.finish(stats);
  }

 private:
  TreeState state_;
  LazyPermutation permutation_;
  std::vector<double> spacing_;
};

// Rate for the correlated variants: log(1 + 1/(m-1)), so that point i of an
// element with weight w falls into [(i-1)/w, i/w).
double correlated_rate(std::uint32_t m) {
  return std::log1p(1.0 / static_cast<double>(m - 1));
}

class ProbMinHash3 final : public SketcherBase<ProbMinHash3> {
 public:
  ProbMinHash3(Algorithm a, std::uint32_t m)
      : SketcherBase(a, m), state_(m), params_(correlated_rate(m)) {}

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    auto& tree = state_.tree_;
    state_.begin();
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      double h = inverse_weight * offset<Input>(rng);
      std::uint64_t i = 1;
      ++stats.points_generated;
      while (h < tree.max()) {
        const auto k = static_cast<std::uint32_t>(rng.next_uniform_int(m_));
        if (h < tree.leaf(k)) state_.set(k, h, id);
        ++i;
        h = inverse_weight * static_cast<double>(i - 1);
        if (h >= tree.max()) break;
        h += inverse_weight * offset<Input>(rng);
        ++stats.points_generated;
        if (i > cap_) throw_cap(algorithm_, id);
      }
    }
    if (!any) throw_empty(algorithm_);
    return state_.finish(stats);
  }

 private:
  // Position within the unit interval; only the relative order matters for
  // unweighted input, so a uniform draw replaces the truncated exponential.
  template <class Input>
  double offset(RandomStream& rng) {
    if constexpr (kUnweighted<Input>) {
      return rng.next_uniform01();
    } else {
      return rng.next_trunc_exp(params_);
    }
  }

  TreeState state_;
  TruncExpParams params_;
};

class ProbMinHash3a final : public SketcherBase<ProbMinHash3a> {
 public:
  ProbMinHash3a(Algorithm a, std::uint32_t m)
      : SketcherBase(a, m), state_(m), params_(correlated_rate(m)) {
    buffer_.reserve(4 * static_cast<std::size_t>(m));
  }

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    auto& tree = state_.tree_;
    state_.begin();
    buffer_.clear();
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      const double h = inverse_weight * offset<Input>(rng);
      ++stats.points_generated;
      if (h >= tree.max()) continue;
      const auto k = static_cast<std::uint32_t>(rng.next_uniform_int(m_));
      if (h < tree.leaf(k)) state_.set(k, h, id);
      if (inverse_weight >= tree.max()) continue;
      buffer_.push_back({id, inverse_weight, rng});
    }
    if (!any) throw_empty(algorithm_);
    stats.max_buffer_size = buffer_.size();

    std::uint64_t i = 2;
    while (!buffer_.empty()) {
      if (i > cap_) throw_cap(algorithm_, buffer_.front().id);
      std::size_t kept = 0;
      for (std::size_t j = 0; j < buffer_.size(); ++j) {
        Entry entry = buffer_[j];
        double h = entry.inverse_weight * static_cast<double>(i - 1);
        if (h >= tree.max()) continue;
        h += entry.inverse_weight * offset<Input>(entry.rng);
        ++stats.points_generated;
        if (h >= tree.max()) continue;
        const auto k = static_cast<std::uint32_t>(entry.rng.next_uniform_int(m_));
        if (h < tree.leaf(k)) {
          state_.set(k, h, entry.id);
          ++stats.late_pass_updates;
        }
        if (entry.inverse_weight * static_cast<double>(i) >= tree.max()) continue;
        buffer_[kept++] = entry;
      }
      buffer_.erase(buffer_.begin() + static_cast<std::ptrdiff_t>(kept), buffer_.end());
      ++i;
    }
    return state_.finish(stats);
  }

 private:
  struct Entry {
    std::uint64_t id;
    double inverse_weight;
    RandomStream rng;
  };

  template <class Input>
  double offset(RandomStream& rng) {
    if constexpr (kUnweighted<Input>) {
      return rng.next_uniform01();
    } else {
      return rng.next_trunc_exp(params_);
    }
  }

  TreeState state_;
  TruncExpParams params_;
  std::vector<Entry> buffer_;
};

class ProbMinHash4 final : public SketcherBase<ProbMinHash4> {
 public:
  ProbMinHash4(Algorithm a, std::uint32_t m)
      : SketcherBase(a, m), state_(m), permutation_(m), boundaries_(m, 0.0) {
    const double rate = correlated_rate(m);
    rates_.reserve(m - 1);
    for (std::uint32_t i = 1; i < m; ++i) {
      rates_.emplace_back(std::log1p(1.0 / static_cast<double>(m - i)));
      boundaries_[i] =
          std::log1p(static_cast<double>(i) / static_cast<double>(m - i)) / rate;
    }
    tail_scale_ = 1.0 / rate;
  }

  template <class Input>
  SketchResult run(std::span<const Input> input) {
    auto& tree = state_.tree_;
    state_.begin();
    SketchStats stats;
    bool any = false;
    for (const auto& element : input) {
      std::uint64_t id;
      double inverse_weight;
      if (!read_element(element, id, inverse_weight)) continue;
      any = true;
      RandomStream rng(id);
      permutation_.reset();
      double h = inverse_weight * interval_offset<Input>(rng, 1);
      std::uint32_t i = 1;
      ++stats.points_generated;
      while (h < tree.max()) {
        std::uint32_t k = permutation_.next(rng);
        if (h < tree.leaf(k)) state_.set(k, h, id);
        ++i;
        if (inverse_weight * boundary<Input>(i - 1) >= tree.max()) break;
        if (i < m_) {
          h = inverse_weight * (boundary<Input>(i - 1) +
                                (boundary<Input>(i) - boundary<Input>(i - 1)) *
                                    interval_offset<Input>(rng, i));
          ++stats.points_generated;
        } else {
          // last point: unbounded tail beyond the final boundary
          h = inverse_weight * (boundary<Input>(m_ - 1) + tail<Input>(rng));
          ++stats.points_generated;
          if (h < tree.max()) {
            k = permutation_.next(rng);
            if (h < tree.leaf(k)) state_.set(k, h, id);
          }
          break;
        }
      }
    }
    if (!any) throw_empty(algorithm_);
    return state_.finish(stats);
  }

 private:
  template <class Input>
  double boundary(std::uint32_t i) const noexcept {
    if constexpr (kUnweighted<Input>) {
      return static_cast<double>(i);
    } else {
      return boundaries_[i];
    }
  }

  // Relative position of point i within its interval.
  template <class Input>
  double interval_offset(RandomStream& rng, std::uint32_t i) {
    if constexpr (kUnweighted<Input>) {
      return rng.next_uniform01();
    } else {
      return rng.next_trunc_exp(rates_[i - 1]);
    }
  }

  template <class Input>
  double tail(RandomStream& rng) {
    if constexpr (kUnweighted<Input>) {
      return rng.next_uniform01();
    } else {
      return tail_scale_ * rng.next_exp1();
    }
  }

  TreeState state_;
  LazyPermutation permutation_;
  std::vector<TruncExpParams> rates_;
  std::vector<double> boundaries_;
  double tail_scale_ = 0.0;
};

class SuperMinHash final : public UnweightedBase<SuperMinHash> {
 public:
  SuperMinHash(Algorithm a, std::uint32_t m)
      : UnweightedBase(a, m), minima_(m), signature_(m), permutation_(m), histogram_(m) {}

  SketchResult run(std::span<const std::uint64_t> ids) {
    if (ids.empty()) throw_empty(algorithm_);
    std::fill(minima_.begin(), minima_.end(), kInfinity);
    std::fill(histogram_.begin(), histogram_.end(), 0);
    // histogram_[j] counts components whose value lies in [j, j+1); unset
    // components are attributed to the last bucket
    histogram_[m_ - 1] = m_;
    std::uint32_t limit = m_ - 1;
    SketchStats stats;
    for (const std::uint64_t id : ids) {
      RandomStream rng(id);
      permutation_.reset();
      for (std::uint32_t j = 0; j <= limit; ++j) {
        const double r = rng.next_uniform01();
        const std::uint32_t k = permutation_.next(rng);
        ++stats.points_generated;
        const double h = r + static_cast<double>(j);
        if (h < minima_[k]) {
          const std::uint32_t previous = minima_[k] < static_cast<double>(m_ - 1)
                                             ? static_cast<std::uint32_t>(minima_[k])
                                             : m_ - 1;
          minima_[k] = h;
          signature_[k] = id;
          if (j < previous) {
            --histogram_[previous];
            ++histogram_[j];
            while (histogram_[limit] == 0) --limit;
          }
        }
      }
    }
    return {signature_, stats};
  }

 private:
  std::vector<double> minima_;
  Signature signature_;
  LazyPermutation permutation_;
  std::vector<std::uint32_t> histogram_;
};

class OphDensified final : public UnweightedBase<OphDensified> {
 public:
  OphDensified(Algorithm a, std::uint32_t m)
      : UnweightedBase(a, m), minima_(m), signature_(m) {}

  SketchResult run(std::span<const std::uint64_t> ids) {
    if (ids.empty()) throw_empty(algorithm_);
    std::fill(minima_.begin(), minima_.end(), kInfinity);
    SketchStats stats;
    for (const std::uint64_t id : ids) {
      RandomStream rng(id);
      const auto bin = static_cast<std::uint32_t>(rng.next_uniform_int(m_));
      const double h = rng.next_uniform01();
      ++stats.points_generated;
      if (h < minima_[bin]) {
        minima_[bin] = h;
        signature_[bin] = id;
      }
    }
    // Each empty bin copies from the first nonempty bin of its own probe
    // sequence. Probes depend only on the bin index, never on the set.
    for (std::uint32_t bin = 0; bin < m_; ++bin) {
      if (minima_[bin] != kInfinity) continue;
      RandomStream probe(kDensificationSalt ^ bin);
      std::uint64_t attempts = 0;
      for (;;) {
        const auto source = static_cast<std::uint32_t>(probe.next_uniform_int(m_));
        if (minima_[source] != kInfinity) {
          signature_[bin] = signature_[source];
          break;
        }
        if (++attempts > cap_) throw_cap(algorithm_, bin);
      }
    }
    return {signature_, stats};
  }

 private:
  std::vector<double> minima_;
  Signature signature_;
};

std::unique_ptr<Sketcher::Impl> make_impl(Algorithm algorithm, std::uint32_t m) {
  switch (algorithm) {
    case Algorithm::kPMinHash: return std::make_unique<PMinHash>(algorithm, m);
    case Algorithm::kProbMinHash1: return std::make_unique<ProbMinHash1>(algorithm, m);
    case Algorithm::kProbMinHash1a: return std::make_unique<ProbMinHash1a>(algorithm, m);
    case Algorithm::kProbMinHash2: return std::make_unique<ProbMinHash2>(algorithm, m);
    case Algorithm::kProbMinHash3: return std::make_unique<ProbMinHash3>(algorithm, m);
    case Algorithm::kProbMinHash3a: return std::make_unique<ProbMinHash3a>(algorithm, m);
    case Algorithm::kProbMinHash4: return std::make_unique<ProbMinHash4>(algorithm, m);
    case Algorithm::kMinHash: return std::make_unique<MinHash>(algorithm, m);
    case Algorithm::kSuperMinHash: return std::make_unique<SuperMinHash>(algorithm, m);
    case Algorithm::kOphDensified: return std::make_unique<OphDensified>(algorithm, m);
  }
  throw InvalidParamsError("unknown algorithm");
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) noexcept { return info(algorithm).name; }

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (const auto& entry : kAlgorithms) {
    if (entry.name == name) return entry.algorithm;
  }
  if (name == "oph_densified") return Algorithm::kOphDensified;
  return std::nullopt;
}

std::span<const Algorithm> all_algorithms() noexcept { return kAlgorithmList; }

bool accepts_weights(Algorithm algorithm) noexcept { return info(algorithm).weights; }

std::uint32_t min_signature_size(Algorithm algorithm) noexcept { return info(algorithm).min_m; }

bool is_interleaved(Algorithm algorithm) noexcept { return info(algorithm).interleaved; }

bool has_independent_components(Algorithm algorithm) noexcept {
  return info(algorithm).independent;
}

std::uint64_t iteration_cap(std::uint32_t m) noexcept {
  const double mm = static_cast<double>(m);
  return static_cast<std::uint64_t>(std::ceil(64.0 * mm * (1.0 + std::log(mm))));
}

Sketcher::Sketcher(Algorithm algorithm, std::uint32_t m) {
  if (m < min_signature_size(algorithm)) {
    throw InvalidParamsError(std::string(algorithm_name(algorithm)) + " requires m >= " +
                             std::to_string(min_signature_size(algorithm)) + ", got " +
                             std::to_string(m));
  }
  impl_ = make_impl(algorithm, m);
}

Sketcher::~Sketcher() = default;
Sketcher::Sketcher(Sketcher&&) noexcept = default;
Sketcher& Sketcher::operator=(Sketcher&&) noexcept = default;

SketchResult Sketcher::compute(std::span<const WeightedElement> set) {
  return impl_->compute(set);
}

SketchResult Sketcher::compute_unweighted(std::span<const std::uint64_t> ids) {
  return impl_->compute_unweighted(ids);
}

Algorithm Sketcher::algorithm() const noexcept { return impl_->algorithm(); }
std::uint32_t Sketcher::size() const noexcept { return impl_->size(); }

SketchResult sketch(Algorithm algorithm, std::span<const WeightedElement> set, std::uint32_t m) {
  return Sketcher(algorithm, m).compute(set);
}

SketchResult sketch_unweighted(Algorithm algorithm, std::span<const std::uint64_t> ids,
                               std::uint32_t m) {
  return Sketcher(algorithm, m).compute_unweighted(ids);
}

SketchResult pminhash(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kPMinHash, set, m);
}
SketchResult probminhash1(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kProbMinHash1, set, m);
}
SketchResult probminhash1(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kProbMinHash1, ids, m);
}
SketchResult probminhash1a(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kProbMinHash1a, set, m);
}
SketchResult probminhash1a(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kProbMinHash1a, ids, m);
}
SketchResult probminhash2(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kProbMinHash2, set, m);
}
SketchResult probminhash2(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kProbMinHash2, ids, m);
}
SketchResult probminhash3(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kProbMinHash3, set, m);
}
SketchResult probminhash3(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kProbMinHash3, ids, m);
}
SketchResult probminhash3a(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kProbMinHash3a, set, m);
}
SketchResult probminhash3a(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kProbMinHash3a, ids, m);
}
SketchResult probminhash4(std::span<const WeightedElement> set, std::uint32_t m) {
  return sketch(Algorithm::kProbMinHash4, set, m);
}
SketchResult probminhash4(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kProbMinHash4, ids, m);
}
Signature minhash(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kMinHash, ids, m).signature;
}
Signature superminhash(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kSuperMinHash, ids, m).signature;
}
Signature oph_densified(std::span<const std::uint64_t> ids, std::uint32_t m) {
  return sketch_unweighted(Algorithm::kOphDensified, ids, m).signature;
}

}  // namespace probminhash
