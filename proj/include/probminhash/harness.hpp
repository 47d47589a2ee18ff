#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "probminhash/estimate.hpp"
#include "probminhash/random_stream.hpp"
#include "probminhash/sketch.hpp"

namespace probminhash::harness {

struct Fixture {
  std::string name;
  WeightPairMultiset pairs;
};

/// The twelve estimation-error fixtures, covering binary and skewed weights
/// with 2 to 64 elements.
std::span<const Fixture> standard_fixtures();

/// Binary fixtures with J = 0.1, 0.5 and 0.9 for b-bit calibration.
std::span<const Fixture> calibration_fixtures();

/// Looks a fixture up by name in both tables.
std::optional<Fixture> find_fixture(std::string_view name);

/// Accepts a fixture name or an inline spec such as "3:20,30:7" (pairs
/// separated by commas, weights by a colon). Throws InvalidParamsError.
Fixture parse_fixture(std::string_view spec);

/// True if every weight is 0 or 1.
bool is_binary(std::span<const WeightPair> pairs) noexcept;

struct SetPair {
  WeightedSet a;
  WeightedSet b;
};

/// One fresh random id per weight pair; the id enters A (B) with weight w_A
/// (w_B) when that weight is positive. Ids within a pair of sets are distinct.
SetPair generate_pair(std::span<const WeightPair> pairs, RandomStream& rng);

/// Rebuilds the weight pair multiset from two generated sets, ordered by id.
WeightPairMultiset reconstruct_pairs(const SetPair& sets);

std::vector<std::uint64_t> ids_of(std::span<const WeightedElement> set);

/// Seed for one experiment cell, derived from the master seed and a textual
/// cell key so that results do not depend on scheduling order.
std::uint64_t cell_seed(std::uint64_t master, std::string_view key) noexcept;

/// Weight distribution for randomly generated sets.
struct WeightDistribution {
  enum class Kind { kUnweighted, kPareto };
  Kind kind = Kind::kUnweighted;
  double index = 0.0;  // Pareto tail index a

  /// "unweighted" or "pareto:<a>".
  std::string name() const;
};

WeightDistribution parse_distribution(std::string_view spec);

/// n elements with random ids. Pareto(1, a) weights come from U^(-1/a);
/// unweighted sets get weight 1.
WeightedSet generate_set(std::uint64_t n, const WeightDistribution& distribution,
                         RandomStream& rng);

/// Fisher-Yates shuffle of the element order.
void shuffle_set(WeightedSet& set, RandomStream& rng);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 selects the
/// hardware concurrency). Exceptions are rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

// Estimation error

enum class InputMode {
  kWeighted,    // weighted API; baselines always use their unweighted one
  kUnweighted,  // unweighted API for every algorithm; fixtures must be binary
};

struct MseConfig {
  std::vector<Algorithm> algorithms;
  std::vector<std::uint32_t> m_values;
  std::vector<Fixture> fixtures;
  std::uint64_t pairs = 2000;
  std::uint64_t seed = 1;
  InputMode mode = InputMode::kWeighted;
  int bbit = 0;  // 0 keeps full signatures
  unsigned threads = 0;
};

struct MseRow {
  std::string algorithm;
  std::uint32_t m = 0;
  std::string fixture;
  double jp = 0.0;
  double mse = 0.0;
  double relative_mse = 0.0;
  double zscore = 0.0;
  std::uint64_t pairs = 0;

  int bbit = 0;
  std::vector<std::uint32_t> matches;  // per pair, raw component matches
  double squared_error_variance = 0.0; // sample variance of per-pair squared errors
};

/// Expected MSE of the match-fraction estimator, J (1 - J) / m.
double expected_mse(double j, std::uint32_t m) noexcept;

/// Sampling variance of the empirical MSE over s pairs for independent
/// components: J^2 (1-J)^2 / (m^2 s) (2 - 6/m) + J (1-J) / (m^3 s).
double mse_variance(double j, std::uint32_t m, std::uint64_t s) noexcept;

/// (mse - expected) / sqrt(variance); 0 when both vanish.
double zscore(double mse, double expected, double variance) noexcept;

/// Estimate computed from a raw match count, including b-bit correction.
double estimate_from_matches(std::uint32_t matches, std::uint32_t m, int bbit) noexcept;

/// z-score of a row against an arbitrary expected relative MSE, using the
/// empirical variance of the per-pair squared errors. Needed for correlated
/// signatures, whose MSE variance has no closed form.
double empirical_zscore(const MseRow& row, double expected_relative_mse) noexcept;

std::vector<MseRow> run_mse_experiment(const MseConfig& config);

// Timing

struct TimingConfig {
  std::vector<Algorithm> algorithms;
  std::vector<std::uint32_t> m_values;
  std::vector<std::uint64_t> n_values;
  std::uint64_t sets = 100;
  std::uint64_t warmup = 3;
  WeightDistribution distribution{WeightDistribution::Kind::kPareto, 2.0};
  std::uint64_t seed = 1;
  /// Optional per-cell override of the number of timed sets.
  std::function<std::uint64_t(Algorithm, std::uint32_t m, std::uint64_t n)> sets_for;
};

struct TimingRow {
  std::string algorithm;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  double mean_ns = 0.0;
  std::uint64_t sets = 0;
};

/// Cells run one after another on the calling thread so that timings do not
/// interfere.
std::vector<TimingRow> run_timing_experiment(const TimingConfig& config);

// Buffer size

struct BufferConfig {
  std::vector<Algorithm> algorithms;  // interleaved variants only
  std::vector<WeightDistribution> distributions;
  std::vector<std::uint64_t> n_values;
  std::uint32_t m = 256;
  std::uint64_t runs = 100;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

struct BufferRow {
  std::string algorithm;
  std::string distribution;
  std::uint64_t n = 0;
  double mean = 0.0;
  double p005 = 0.0;
  double p995 = 0.0;
  std::uint32_t m = 0;
  std::vector<std::uint64_t> samples;  // max buffer size per run
};

std::vector<BufferRow> run_buffer_experiment(const BufferConfig& config);

/// Expected maximum buffer of the with-replacement interleaved variant for
/// n unit weights: Σ_{j=1..n} min(1, m H_m / j).
double expected_buffer_uncorrelated(std::uint64_t n, std::uint32_t m);

/// Quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

// Logical equivalence

struct EquivalenceConfig {
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  std::uint64_t max_size = 10000;
  unsigned threads = 0;
};

struct EquivalenceReport {
  std::uint64_t trials = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> failures;  // each names the trial seed

  bool ok() const noexcept { return mismatches == 0; }
};

/// Per trial: a random set (size log-uniform in [1, max_size], unit or
/// Pareto weights, random m). Checks ProbMinHash1 against 1a and 3 against 3a
/// on weighted and unweighted input, and that scaling all weights by 2^k
/// leaves every ProbMinHash signature unchanged.
EquivalenceReport run_equivalence_suite(const EquivalenceConfig& config);

/// Replays a single trial of the suite from its seed.
EquivalenceReport run_equivalence_trial(std::uint64_t trial_seed, std::uint64_t max_size);

// CSV

void write_mse_csv(std::ostream& out, std::span<const MseRow> rows);
void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows);
void write_buffer_csv(std::ostream& out, std::span<const BufferRow> rows);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace probminhash::harness
