#include "probminhash/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_set>

#include "probminhash/errors.hpp"

namespace probminhash::harness {

namespace {

WeightPairMultiset repeat(std::initializer_list<std::pair<WeightPair, int>> groups) {
  WeightPairMultiset result;
  for (const auto& [pair, count] : groups) result.insert(result.end(), count, pair);
  return result;
}

// Skewed fixtures are generated by small integer recurrences so that they
// stay reproducible without listing every pair.
WeightPairMultiset skewed(int n, int a_mod, int b_mul, int b_mod, int zero_every) {
  WeightPairMultiset result;
  for (int i = 0; i < n; ++i) {
    const double a = 1 + i % a_mod;
    double b = 1 + (i * b_mul) % b_mod;
    if (zero_every > 0 && i % zero_every == zero_every - 1) b = 0.0;
    result.push_back({a, b});
  }
  return result;
}

std::vector<Fixture> make_standard_fixtures() {
  return {
      {"v3-20-30-7", {{3, 20}, {30, 7}}},
      {"binary-3", {{0, 1}, {1, 0}, {1, 1}}},
      {"v1-2-2-1", {{1, 2}, {2, 1}}},
      {"binary-2", {{1, 1}, {1, 0}}},
      {"skew-4", {{1, 2}, {4, 1}, {2, 2}, {0, 3}}},
      {"binary-4", {{1, 1}, {1, 1}, {1, 0}, {0, 1}}},
      {"binary-10", repeat({{{1, 1}, 3}, {{1, 0}, 4}, {{0, 1}, 3}})},
      {"skew-16", skewed(16, 16, 7, 16, 0)},
      {"binary-64", repeat({{{1, 1}, 32}, {{1, 0}, 16}, {{0, 1}, 16}})},
      {"skew-64", skewed(64, 8, 5, 13, 8)},
      {"binary-32-high", repeat({{{1, 1}, 29}, {{1, 0}, 2}, {{0, 1}, 1}})},
      {"skew-8-low", {{1, 8}, {8, 1}, {2, 0}, {0, 2}, {1, 1}, {5, 0}, {0, 5}, {3, 1}}},
  };
}

std::vector<Fixture> make_calibration_fixtures() {
  return {
      {"bbit-0.1", repeat({{{1, 1}, 1}, {{1, 0}, 5}, {{0, 1}, 4}})},
      {"bbit-0.5", repeat({{{1, 1}, 2}, {{1, 0}, 1}, {{0, 1}, 1}})},
      {"bbit-0.9", repeat({{{1, 1}, 9}, {{1, 0}, 1}})},
  };
}

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidParamsError("cannot parse number '" + std::string(text) + "' in " +
                             std::string(context));
  }
  return value;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string row_name(Algorithm algorithm, InputMode mode) {
  std::string name(algorithm_name(algorithm));
  if (mode == InputMode::kUnweighted && accepts_weights(algorithm)) name += "-unweighted";
  return name;
}

// Computes a signature with the API matching the input mode.
Signature signature_of(Sketcher& sketcher, const WeightedSet& set, bool unweighted,
                       std::vector<std::uint64_t>& scratch) {
  if (unweighted) {
    scratch.clear();
    for (const auto& e : set) scratch.push_back(e.id);
    return sketcher.compute_unweighted(scratch).signature;
  }
  return sketcher.compute(set).signature;
}

void require_algorithm_mode(Algorithm algorithm, bool unweighted) {
  if (!unweighted && !accepts_weights(algorithm)) {
    throw InvalidParamsError(std::string(algorithm_name(algorithm)) +
                             " needs unweighted input");
  }
}

}  // namespace

std::span<const Fixture> standard_fixtures() {
  static const std::vector<Fixture> fixtures = make_standard_fixtures();
  return fixtures;
}

std::span<const Fixture> calibration_fixtures() {
  static const std::vector<Fixture> fixtures = make_calibration_fixtures();
  return fixtures;
}

std::optional<Fixture> find_fixture(std::string_view name) {
  for (const auto table : {standard_fixtures(), calibration_fixtures()}) {
    for (const auto& f : table) {
      if (f.name == name) return f;
    }
  }
  return std::nullopt;
}

Fixture parse_fixture(std::string_view spec) {
  if (auto named = find_fixture(spec)) return *named;
  if (spec.find(':') == std::string_view::npos) {
    throw InvalidParamsError("unknown fixture '" + std::string(spec) + "'");
  }
  // commas would break the CSV fixture column
  std::string name(spec);
  std::replace(name.begin(), name.end(), ',', ';');
  Fixture fixture{name, {}};
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', start), spec.size());
    const std::string item = trim(spec.substr(start, comma - start));
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw InvalidParamsError("fixture pair '" + item + "' must look like wa:wb");
    }
    fixture.pairs.push_back({parse_number(trim(item.substr(0, colon)), spec),
                             parse_number(trim(item.substr(colon + 1)), spec)});
    start = comma + 1;
  }
  validate(fixture.pairs);
  return fixture;
}

bool is_binary(std::span<const WeightPair> pairs) noexcept {
  return std::all_of(pairs.begin(), pairs.end(), [](const WeightPair& p) {
    return (p.a == 0.0 || p.a == 1.0) && (p.b == 0.0 || p.b == 1.0);
  });
}

SetPair generate_pair(std::span<const WeightPair> pairs, RandomStream& rng) {
  SetPair sets;
  std::unordered_set<std::uint64_t> used;
  for (const auto& p : pairs) {
    std::uint64_t id = rng.next_u64();
    while (!used.insert(id).second) id = rng.next_u64();
    if (p.a > 0.0) sets.a.push_back({id, p.a});
    if (p.b > 0.0) sets.b.push_back({id, p.b});
  }
  return sets;
}

WeightPairMultiset reconstruct_pairs(const SetPair& sets) {
  std::map<std::uint64_t, WeightPair> by_id;
  for (const auto& e : sets.a) by_id[e.id].a = e.weight;
  for (const auto& e : sets.b) by_id[e.id].b = e.weight;
  WeightPairMultiset result;
  result.reserve(by_id.size());
  for (const auto& [id, pair] : by_id) result.push_back(pair);
  return result;
}

std::vector<std::uint64_t> ids_of(std::span<const WeightedElement> set) {
  std::vector<std::uint64_t> ids;
  ids.reserve(set.size());
  for (const auto& e : set) ids.push_back(e.id);
  return ids;
}

std::uint64_t cell_seed(std::uint64_t master, std::string_view key) noexcept {
  return detail::mix64(master ^ detail::mix64(fnv1a(key)));
}

std::string WeightDistribution::name() const {
  if (kind == Kind::kUnweighted) return "unweighted";
  return "pareto:" + format_double(index);
}

WeightDistribution parse_distribution(std::string_view spec) {
  if (spec == "unweighted") return {};
  constexpr std::string_view prefix = "pareto:";
  if (spec.substr(0, prefix.size()) == prefix) {
    const double a = parse_number(spec.substr(prefix.size()), spec);
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidParamsError("Pareto index must be positive, got '" + std::string(spec) + "'");
    }
    return {WeightDistribution::Kind::kPareto, a};
  }
  throw InvalidParamsError("unknown weight distribution '" + std::string(spec) +
                           "' (expected unweighted or pareto:<a>)");
}

WeightedSet generate_set(std::uint64_t n, const WeightDistribution& distribution,
                         RandomStream& rng) {
  WeightedSet set;
  set.reserve(n);
  const double exponent =
      distribution.kind == WeightDistribution::Kind::kPareto ? -1.0 / distribution.index : 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t id = rng.next_u64();
    double weight = 1.0;
    if (distribution.kind == WeightDistribution::Kind::kPareto) {
      weight = std::pow(1.0 - rng.next_uniform01(), exponent);
    }
    set.push_back({id, weight});
  }
  return set;
}

void shuffle_set(WeightedSet& set, RandomStream& rng) {
  for (std::size_t i = set.size(); i > 1; --i) {
    std::swap(set[i - 1], set[rng.next_uniform_int(i)]);
  }
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double expected_mse(double j, std::uint32_t m) noexcept {
  return j * (1.0 - j) / static_cast<double>(m);
}

double mse_variance(double j, std::uint32_t m, std::uint64_t s) noexcept {
  const double md = static_cast<double>(m);
  const double sd = static_cast<double>(s);
  const double q = j * (1.0 - j);
  return q * q / (md * md * sd) * (2.0 - 6.0 / md) + q / (md * md * md * sd);
}

double zscore(double mse, double expected, double variance) noexcept {
  const double diff = mse - expected;
  if (variance > 0.0) return diff / std::sqrt(variance);
  if (diff == 0.0) return 0.0;
  return diff > 0.0 ? HUGE_VAL : -HUGE_VAL;
}

double estimate_from_matches(std::uint32_t matches, std::uint32_t m, int bbit) noexcept {
  const double c = static_cast<double>(matches) / static_cast<double>(m);
  if (bbit <= 0) return c;
  const double floor = std::ldexp(1.0, -bbit);
  return std::clamp((c - floor) / (1.0 - floor), 0.0, 1.0);
}

double empirical_zscore(const MseRow& row, double expected_relative_mse) noexcept {
  const double scale = expected_mse(row.jp, row.m);
  return zscore(row.mse, expected_relative_mse * scale,
                row.squared_error_variance / static_cast<double>(row.pairs));
}

std::vector<MseRow> run_mse_experiment(const MseConfig& config) {
  if (config.pairs == 0) throw InvalidParamsError("number of pairs must be >= 1");
  if (config.bbit < 0 || config.bbit > 16) {
    throw InvalidParamsError("b must be in [1, 16] (or 0 for full signatures)");
  }
  struct Cell {
    const Fixture* fixture;
    std::uint32_t m;
    Algorithm algorithm;
    double jp;
  };
  std::vector<Cell> cells;
  for (const auto& fixture : config.fixtures) {
    const double jp = jaccard_p_exact(fixture.pairs);
    const bool binary = is_binary(fixture.pairs);
    for (const auto m : config.m_values) {
      for (const auto algorithm : config.algorithms) {
        if (m < min_signature_size(algorithm)) {
          throw InvalidParamsError(std::string(algorithm_name(algorithm)) + " requires m >= " +
                                   std::to_string(min_signature_size(algorithm)));
        }
        const bool unweighted =
            config.mode == InputMode::kUnweighted || !accepts_weights(algorithm);
        if (unweighted && !binary) {
          throw InvalidParamsError("unweighted sketching needs a binary fixture, '" +
                                   fixture.name + "' is not");
        }
        cells.push_back({&fixture, m, algorithm, jp});
      }
    }
  }

  std::vector<MseRow> rows(cells.size());
  parallel_for(cells.size(), config.threads, [&](std::size_t index) {
    const Cell& cell = cells[index];
    const bool unweighted =
        config.mode == InputMode::kUnweighted || !accepts_weights(cell.algorithm);
    // pairs depend on fixture and m only, so all algorithms see the same sets
    RandomStream rng(
        cell_seed(config.seed, "mse/" + cell.fixture->name + "/" + std::to_string(cell.m)));
    Sketcher sketcher(cell.algorithm, cell.m);
    std::vector<std::uint64_t> scratch;

    MseRow row;
    row.algorithm = row_name(cell.algorithm, config.mode);
    row.m = cell.m;
    row.fixture = cell.fixture->name;
    row.jp = cell.jp;
    row.pairs = config.pairs;
    row.bbit = config.bbit;
    row.matches.reserve(config.pairs);
    for (std::uint64_t p = 0; p < config.pairs; ++p) {
      const SetPair sets = generate_pair(cell.fixture->pairs, rng);
      const Signature a = signature_of(sketcher, sets.a, unweighted, scratch);
      const Signature b = signature_of(sketcher, sets.b, unweighted, scratch);
      std::uint32_t matches;
      if (config.bbit > 0) {
        const auto ra = bbit_reduce(a, config.bbit);
        const auto rb = bbit_reduce(b, config.bbit);
        matches = 0;
        for (std::size_t k = 0; k < ra.components.size(); ++k) {
          matches += ra.components[k] == rb.components[k];
        }
      } else {
        matches = count_matches(a, b);
      }
      row.matches.push_back(matches);
    }

    // Welford's update for mean and variance of squared errors.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t p = 0; p < config.pairs; ++p) {
      const double error = estimate_from_matches(row.matches[p], cell.m, config.bbit) - cell.jp;
      const double x = error * error;
      const double delta = x - mean;
      mean += delta / static_cast<double>(p + 1);
      m2 += delta * (x - mean);
    }
    row.mse = mean;
    row.squared_error_variance =
        config.pairs > 1 ? m2 / static_cast<double>(config.pairs - 1) : 0.0;
    const double expected = expected_mse(cell.jp, cell.m);
    row.relative_mse = expected > 0.0 ? row.mse / expected : (row.mse == 0.0 ? 1.0 : HUGE_VAL);
    row.zscore = zscore(row.mse, expected, mse_variance(cell.jp, cell.m, config.pairs));
    rows[index] = std::move(row);
  });
  return rows;
}

std::vector<TimingRow> run_timing_experiment(const TimingConfig& config) {
  const bool unweighted = config.distribution.kind == WeightDistribution::Kind::kUnweighted;
  for (const auto algorithm : config.algorithms) {
    for (const auto m : config.m_values) {
      if (m < min_signature_size(algorithm)) {
        throw InvalidParamsError(std::string(algorithm_name(algorithm)) + " requires m >= " +
                                 std::to_string(min_signature_size(algorithm)));
      }
    }
    require_algorithm_mode(algorithm, unweighted);
  }
  if (config.sets == 0) throw InvalidParamsError("number of timed sets must be >= 1");

  std::vector<TimingRow> rows;
  std::uint64_t sink = 0;
  for (const auto n : config.n_values) {
    if (n == 0) throw InvalidParamsError("set size must be >= 1");
    std::uint64_t max_sets = config.sets;
    if (config.sets_for) {
      for (const auto algorithm : config.algorithms) {
        for (const auto m : config.m_values) {
          max_sets = std::max(max_sets, config.sets_for(algorithm, m, n));
        }
      }
    }
    // Sets are generated up front and kept in memory so that only sketching
    // is measured.
    RandomStream rng(cell_seed(config.seed, "timing/" + config.distribution.name() + "/" +
                                                std::to_string(n)));
    std::vector<WeightedSet> sets;
    std::vector<std::vector<std::uint64_t>> id_sets;
    const std::uint64_t total = max_sets + config.warmup;
    for (std::uint64_t i = 0; i < total; ++i) {
      sets.push_back(generate_set(n, config.distribution, rng));
      if (unweighted) id_sets.push_back(ids_of(sets.back()));
    }
    for (const auto m : config.m_values) {
      for (const auto algorithm : config.algorithms) {
        const std::uint64_t count =
            config.sets_for ? std::max<std::uint64_t>(1, config.sets_for(algorithm, m, n))
                            : config.sets;
        Sketcher sketcher(algorithm, m);
        auto run = [&](std::uint64_t i) {
          const SketchResult r = unweighted ? sketcher.compute_unweighted(id_sets[i])
                                            : sketcher.compute(sets[i]);
          sink ^= r.signature[0];
        };
        for (std::uint64_t i = 0; i < config.warmup; ++i) run(max_sets + i);
        const auto start = std::chrono::steady_clock::now();
        for (std::uint64_t i = 0; i < count; ++i) run(i);
        const auto stop = std::chrono::steady_clock::now();
        const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
        rows.push_back({std::string(algorithm_name(algorithm)), m, n,
                        ns / static_cast<double>(count), count});
      }
    }
  }
  // keeps the signatures observable so that sketching is not optimized away
  static volatile std::uint64_t observed = 0;
  observed = observed ^ sink;
  return rows;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InvalidParamsError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double position = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(position));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double fraction = position - static_cast<double>(lo);
  return values[lo] + (values[hi] - values[lo]) * fraction;
}

double expected_buffer_uncorrelated(std::uint64_t n, std::uint32_t m) {
  const double limit = static_cast<double>(m) * harmonic_number(m);
  double sum = 0.0;
  for (std::uint64_t j = n; j >= 1; --j) {
    sum += std::min(1.0, limit / static_cast<double>(j));
  }
  return sum;
}

std::vector<BufferRow> run_buffer_experiment(const BufferConfig& config) {
  for (const auto algorithm : config.algorithms) {
    if (!is_interleaved(algorithm)) {
      throw InvalidParamsError(std::string(algorithm_name(algorithm)) +
                               " does not use an element buffer");
    }
  }
  if (config.m < 2) throw InvalidParamsError("buffer experiment needs m >= 2");
  if (config.runs == 0) throw InvalidParamsError("number of runs must be >= 1");

  struct Cell {
    Algorithm algorithm;
    const WeightDistribution* distribution;
    std::uint64_t n;
  };
  std::vector<Cell> cells;
  for (const auto algorithm : config.algorithms) {
    for (const auto& distribution : config.distributions) {
      for (const auto n : config.n_values) {
        if (n == 0) throw InvalidParamsError("set size must be >= 1");
        cells.push_back({algorithm, &distribution, n});
      }
    }
  }

  // One task per (cell, run) keeps the workers busy even for few cells.
  std::vector<std::uint64_t> samples(cells.size() * config.runs);
  parallel_for(samples.size(), config.threads, [&](std::size_t task) {
    const Cell& cell = cells[task / config.runs];
    const std::uint64_t run = task % config.runs;
    const std::string key = "buffer/" + cell.distribution->name() + "/" +
                            std::to_string(cell.n) + "/" + std::to_string(config.m) + "/" +
                            std::to_string(run);
    // the same sets are used for every algorithm
    RandomStream rng(cell_seed(config.seed, key));
    const WeightedSet set = generate_set(cell.n, *cell.distribution, rng);
    Sketcher sketcher(cell.algorithm, config.m);
    const SketchResult r =
        cell.distribution->kind == WeightDistribution::Kind::kUnweighted
            ? sketcher.compute_unweighted(ids_of(set))
            : sketcher.compute(set);
    samples[task] = r.stats.max_buffer_size;
  });

  std::vector<BufferRow> rows;
  rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    BufferRow row;
    row.algorithm = std::string(algorithm_name(cells[c].algorithm));
    row.distribution = cells[c].distribution->name();
    row.n = cells[c].n;
    row.m = config.m;
    row.samples.assign(samples.begin() + static_cast<std::ptrdiff_t>(c * config.runs),
                       samples.begin() + static_cast<std::ptrdiff_t>((c + 1) * config.runs));
    std::vector<double> values(row.samples.begin(), row.samples.end());
    double sum = 0.0;
    for (const double v : values) sum += v;
    row.mean = sum / static_cast<double>(values.size());
    row.p005 = quantile(values, 0.005);
    row.p995 = quantile(values, 0.995);
    rows.push_back(std::move(row));
  }
  return rows;
}

EquivalenceReport run_equivalence_trial(std::uint64_t trial_seed, std::uint64_t max_size) {
  if (max_size == 0) throw InvalidParamsError("maximum set size must be >= 1");
  static constexpr std::uint32_t kSizes[] = {2, 3, 16, 64, 100, 256};
  static constexpr Algorithm kProbMinHash[] = {
      Algorithm::kProbMinHash1, Algorithm::kProbMinHash1a, Algorithm::kProbMinHash2,
      Algorithm::kProbMinHash3, Algorithm::kProbMinHash3a, Algorithm::kProbMinHash4,
  };

  RandomStream rng(trial_seed);
  const double log_max = std::log(static_cast<double>(max_size));
  const auto n = std::min<std::uint64_t>(
      max_size, 1 + static_cast<std::uint64_t>(std::exp(rng.next_uniform01() * log_max)));
  WeightDistribution distribution;
  switch (rng.next_uniform_int(3)) {
    case 0: break;
    case 1: distribution = {WeightDistribution::Kind::kPareto, 2.0}; break;
    default: distribution = {WeightDistribution::Kind::kPareto, 0.5}; break;
  }
  const std::uint32_t m = kSizes[rng.next_uniform_int(std::size(kSizes))];
  int k = static_cast<int>(rng.next_uniform_int(16)) - 8;
  if (k >= 0) ++k;  // k in [-8, 8] without 0
  const WeightedSet set = generate_set(n, distribution, rng);
  const auto ids = ids_of(set);

  EquivalenceReport report;
  report.trials = 1;
  char context[160];
  std::snprintf(context, sizeof context, "seed=0x%016llx n=%llu m=%u weights=%s",
                static_cast<unsigned long long>(trial_seed), static_cast<unsigned long long>(n),
                m, distribution.name().c_str());
  auto check = [&](bool equal, const std::string& what) {
    ++report.comparisons;
    if (!equal) {
      ++report.mismatches;
      report.failures.push_back(what + " (" + context + ")");
    }
  };

  const auto weighted = [&](Algorithm a) { return Sketcher(a, m).compute(set).signature; };
  const auto unweighted = [&](Algorithm a) {
    return Sketcher(a, m).compute_unweighted(ids).signature;
  };
  check(weighted(Algorithm::kProbMinHash1) == weighted(Algorithm::kProbMinHash1a),
        "probminhash1 != probminhash1a");
  check(weighted(Algorithm::kProbMinHash3) == weighted(Algorithm::kProbMinHash3a),
        "probminhash3 != probminhash3a");
  check(unweighted(Algorithm::kProbMinHash1) == unweighted(Algorithm::kProbMinHash1a),
        "unweighted probminhash1 != probminhash1a");
  check(unweighted(Algorithm::kProbMinHash3) == unweighted(Algorithm::kProbMinHash3a),
        "unweighted probminhash3 != probminhash3a");

  WeightedSet scaled = set;
  for (auto& e : scaled) e.weight = std::ldexp(e.weight, k);
  for (const auto algorithm : kProbMinHash) {
    Sketcher sketcher(algorithm, m);
    const Signature original = sketcher.compute(set).signature;
    check(original == sketcher.compute(scaled).signature,
          std::string(algorithm_name(algorithm)) + " changed under scaling by 2^" +
              std::to_string(k));
  }
  return report;
}

EquivalenceReport run_equivalence_suite(const EquivalenceConfig& config) {
  if (config.trials == 0) throw InvalidParamsError("number of trials must be >= 1");
  std::vector<EquivalenceReport> reports(config.trials);
  parallel_for(config.trials, config.threads, [&](std::size_t t) {
    reports[t] = run_equivalence_trial(cell_seed(config.seed, "equivalence/" + std::to_string(t)),
                                       config.max_size);
  });
  EquivalenceReport total;
  for (auto& r : reports) {
    total.trials += r.trials;
    total.comparisons += r.comparisons;
    total.mismatches += r.mismatches;
    for (auto& f : r.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_mse_csv(std::ostream& out, std::span<const MseRow> rows) {
  out << "algorithm,m,fixture,jp,mse,relative_mse,zscore,pairs\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.m << ',' << r.fixture << ',' << format_double(r.jp) << ','
        << format_double(r.mse) << ',' << format_double(r.relative_mse) << ','
        << format_double(r.zscore) << ',' << r.pairs << '\n';
  }
}

void write_timing_csv(std::ostream& out, std::span<const TimingRow> rows) {
  out << "algorithm,m,n,mean_ns\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.m << ',' << r.n << ',' << format_double(r.mean_ns) << '\n';
  }
}

void write_buffer_csv(std::ostream& out, std::span<const BufferRow> rows) {
  out << "algorithm,distribution,n,mean,p005,p995\n";
  for (const auto& r : rows) {
    out << r.algorithm << ',' << r.distribution << ',' << r.n << ',' << format_double(r.mean)
        << ',' << format_double(r.p005) << ',' << format_double(r.p995) << '\n';
  }
}

}  // namespace probminhash::harness
