#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "probminhash/errors.hpp"
#include "probminhash/estimate.hpp"
#include "probminhash/harness.hpp"

namespace probminhash::harness {
namespace {

TEST(Fixtures, StandardTable) {
  const auto fixtures = standard_fixtures();
  ASSERT_EQ(fixtures.size(), 12u);
  std::set<std::string> names;
  for (const auto& f : fixtures) {
    names.insert(f.name);
    EXPECT_NO_THROW(validate(f.pairs)) << f.name;
  }
  EXPECT_EQ(names.size(), 12u);

  // frozen from tests/oracles/exact_values.py
  const std::pair<const char*, double> jp[] = {
      {"v3-20-30-7", 0.3501683501683502}, {"binary-3", 1.0 / 3.0},
      {"v1-2-2-1", 0.6666666666666666},   {"binary-2", 0.5},
      {"skew-4", 0.4244652406417112},     {"binary-4", 0.5},
      {"binary-10", 0.3},                 {"skew-16", 0.6294702420020343},
      {"binary-64", 0.5},                 {"skew-64", 0.5276985427288491},
      {"binary-32-high", 0.90625},        {"skew-8-low", 0.1757506342275254},
  };
  for (const auto& [name, value] : jp) {
    const auto f = find_fixture(name);
    ASSERT_TRUE(f.has_value()) << name;
    EXPECT_NEAR(jaccard_p_exact(f->pairs), value, 1e-15) << name;
  }
  EXPECT_EQ(find_fixture("skew-64")->pairs.size(), 64u);
  EXPECT_EQ(find_fixture("skew-16")->pairs.size(), 16u);
  EXPECT_FALSE(find_fixture("nope").has_value());
}

TEST(Fixtures, WeightedJaccardOfSkewedFixtures) {
  EXPECT_NEAR(jaccard_w_exact(find_fixture("skew-64")->pairs), 0.40372670807453415, 1e-15);
  EXPECT_NEAR(jaccard_n_exact(find_fixture("skew-64")->pairs), 0.446229913473424, 1e-15);
  EXPECT_NEAR(jaccard_w_exact(find_fixture("skew-8-low")->pairs), 0.11764705882352941, 1e-15);
}

TEST(Fixtures, CalibrationTable) {
  const auto fixtures = calibration_fixtures();
  ASSERT_EQ(fixtures.size(), 3u);
  const double expected[] = {0.1, 0.5, 0.9};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(is_binary(fixtures[i].pairs));
    EXPECT_NEAR(jaccard_w_exact(fixtures[i].pairs), expected[i], 1e-15);
  }
}

TEST(Fixtures, ParseInline) {
  const auto f = parse_fixture("3:20,30:7");
  EXPECT_EQ(f.pairs, (WeightPairMultiset{{3, 20}, {30, 7}}));
  EXPECT_EQ(f.name, "3:20;30:7");
  EXPECT_EQ(parse_fixture("binary-3").pairs, find_fixture("binary-3")->pairs);
  EXPECT_EQ(parse_fixture("0.5:1").pairs, (WeightPairMultiset{{0.5, 1}}));
  for (const char* bad : {"", "nope", "1:", "1:2,", "a:b", "-1:2", "0:0", "1:2:3"}) {
    EXPECT_THROW(parse_fixture(bad), InvalidParamsError) << bad;
  }
}

TEST(Fixtures, IsBinary) {
  EXPECT_TRUE(is_binary(WeightPairMultiset{{1, 0}, {1, 1}}));
  EXPECT_FALSE(is_binary(WeightPairMultiset{{1, 2}}));
}

TEST(Generation, PairRealizesFixture) {
  RandomStream rng(1);
  const auto f = *find_fixture("skew-8-low");
  for (int t = 0; t < 100; ++t) {
    const auto sets = generate_pair(f.pairs, rng);
    auto rebuilt = reconstruct_pairs(sets);
    auto original = f.pairs;
    const auto order = [](const WeightPair& x, const WeightPair& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    };
    std::sort(rebuilt.begin(), rebuilt.end(), order);
    std::sort(original.begin(), original.end(), order);
    EXPECT_EQ(rebuilt, original);
  }
}

TEST(Generation, ExampleLayout) {
  RandomStream rng(2);
  const auto sets = generate_pair(WeightPairMultiset{{3, 20}, {30, 7}}, rng);
  ASSERT_EQ(sets.a.size(), 2u);
  ASSERT_EQ(sets.b.size(), 2u);
  EXPECT_EQ(sets.a[0].id, sets.b[0].id);
  EXPECT_EQ(sets.a[0].weight, 3.0);
  EXPECT_EQ(sets.b[0].weight, 20.0);
  EXPECT_EQ(sets.a[1].weight, 30.0);
  EXPECT_EQ(sets.b[1].weight, 7.0);
  EXPECT_NE(sets.a[0].id, sets.a[1].id);

  const auto disjoint = generate_pair(WeightPairMultiset{{1, 0}, {0, 1}}, rng);
  ASSERT_EQ(disjoint.a.size(), 1u);
  ASSERT_EQ(disjoint.b.size(), 1u);
  EXPECT_NE(disjoint.a[0].id, disjoint.b[0].id);
}

TEST(Generation, ParetoMean) {
  RandomStream rng(3);
  const WeightDistribution d{WeightDistribution::Kind::kPareto, 3.0};
  const auto set = generate_set(200000, d, rng);
  double sum = 0.0;
  for (const auto& e : set) {
    ASSERT_GE(e.weight, 1.0);
    sum += e.weight;
  }
  // mean a / (a - 1) = 1.5, variance a / ((a-1)^2 (a-2)) = 0.75
  EXPECT_NEAR(sum / set.size(), 1.5, 5 * std::sqrt(0.75 / set.size()));

  const auto unit = generate_set(100, WeightDistribution{}, rng);
  for (const auto& e : unit) EXPECT_EQ(e.weight, 1.0);
  std::set<std::uint64_t> ids;
  for (const auto& e : set) ids.insert(e.id);
  EXPECT_EQ(ids.size(), set.size());
}

TEST(Generation, ShuffleKeepsElements) {
  RandomStream rng(4);
  auto set = generate_set(1000, WeightDistribution{}, rng);
  auto shuffled = set;
  shuffle_set(shuffled, rng);
  EXPECT_NE(set, shuffled);
  std::sort(set.begin(), set.end(), [](auto& x, auto& y) { return x.id < y.id; });
  std::sort(shuffled.begin(), shuffled.end(), [](auto& x, auto& y) { return x.id < y.id; });
  EXPECT_EQ(set, shuffled);
}

TEST(Distribution, Parse) {
  EXPECT_EQ(parse_distribution("unweighted").kind, WeightDistribution::Kind::kUnweighted);
  const auto p = parse_distribution("pareto:0.5");
  EXPECT_EQ(p.kind, WeightDistribution::Kind::kPareto);
  EXPECT_EQ(p.index, 0.5);
  EXPECT_EQ(p.name(), "pareto:0.5");
  for (const char* bad : {"", "pareto", "pareto:", "pareto:-1", "pareto:x", "normal"}) {
    EXPECT_THROW(parse_distribution(bad), InvalidParamsError) << bad;
  }
}

TEST(Seeds, CellSeedsAreDistinctAndStable) {
  EXPECT_EQ(cell_seed(1, "a"), cell_seed(1, "a"));
  EXPECT_NE(cell_seed(1, "a"), cell_seed(1, "b"));
  EXPECT_NE(cell_seed(1, "a"), cell_seed(2, "a"));
}

TEST(Statistics, Quantile) {
  EXPECT_EQ(quantile({3, 1, 2}, 0.5), 2.0);
  EXPECT_EQ(quantile({1, 2}, 0.5), 1.5);
  EXPECT_EQ(quantile({5}, 0.995), 5.0);
  EXPECT_EQ(quantile({1, 2, 3, 4, 5}, 0.0), 1.0);
  EXPECT_EQ(quantile({1, 2, 3, 4, 5}, 1.0), 5.0);
  EXPECT_THROW(quantile({}, 0.5), InvalidParamsError);
}

TEST(Statistics, MseFormulas) {
  EXPECT_DOUBLE_EQ(expected_mse(0.5, 100), 0.0025);
  const double j = 0.3;
  const double m = 64;
  const double s = 1000;
  const double v = j * j * (1 - j) * (1 - j) / (m * m * s) * (2 - 6 / m) + j * (1 - j) / (m * m * m * s);
  EXPECT_DOUBLE_EQ(mse_variance(j, 64, 1000), v);
  EXPECT_EQ(zscore(0.0, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(zscore(3.0, 1.0, 4.0), 1.0);
}

TEST(Statistics, EstimateFromMatches) {
  EXPECT_EQ(estimate_from_matches(32, 64, 0), 0.5);
  // b = 1: (C - 1/2) / (1/2)
  EXPECT_DOUBLE_EQ(estimate_from_matches(48, 64, 1), 0.5);
  EXPECT_EQ(estimate_from_matches(0, 64, 1), 0.0);
}

TEST(MseExperiment, RowMatchesRecomputation) {
  MseConfig config;
  config.algorithms = {Algorithm::kProbMinHash2, Algorithm::kProbMinHash4};
  config.m_values = {16};
  config.fixtures = {*find_fixture("v3-20-30-7")};
  config.pairs = 300;
  const auto rows = run_mse_experiment(config);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.matches.size(), 300u);
    double sse = 0.0;
    for (const auto k : row.matches) {
      const double e = k / 16.0 - row.jp;
      sse += e * e;
    }
    const double mse = sse / 300.0;
    EXPECT_NEAR(row.mse, mse, 1e-15);
    const double expected = expected_mse(row.jp, 16);
    EXPECT_NEAR(row.relative_mse, mse / expected, 1e-12);
    EXPECT_NEAR(row.zscore, (mse - expected) / std::sqrt(mse_variance(row.jp, 16, 300)), 1e-9);
    EXPECT_EQ(row.fixture, "v3-20-30-7");
    EXPECT_EQ(row.pairs, 300u);
  }
  EXPECT_EQ(rows[0].algorithm, "probminhash2");
}

TEST(MseExperiment, DeterministicAcrossThreadCounts) {
  MseConfig config;
  config.algorithms = {Algorithm::kProbMinHash1, Algorithm::kSuperMinHash};
  config.m_values = {8, 32};
  config.fixtures = {*find_fixture("binary-10"), *find_fixture("binary-3")};
  config.pairs = 200;
  config.threads = 1;
  const auto one = run_mse_experiment(config);
  config.threads = 4;
  const auto four = run_mse_experiment(config);
  std::ostringstream a;
  std::ostringstream b;
  write_mse_csv(a, one);
  write_mse_csv(b, four);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')),
            "algorithm,m,fixture,jp,mse,relative_mse,zscore,pairs");
  // the cell key depends on fixture and m only, so adding an algorithm
  // does not change the pairs another algorithm sees
  config.algorithms = {Algorithm::kProbMinHash1};
  const auto alone = run_mse_experiment(config);
  EXPECT_EQ(alone[0].matches, one[0].matches);
}

TEST(MseExperiment, UnweightedModeRequiresBinaryFixtures) {
  MseConfig config;
  config.algorithms = {Algorithm::kProbMinHash4};
  config.m_values = {16};
  config.fixtures = {*find_fixture("skew-4")};
  config.pairs = 10;
  config.mode = InputMode::kUnweighted;
  EXPECT_THROW(run_mse_experiment(config), InvalidParamsError);
  config.fixtures = {*find_fixture("binary-4")};
  const auto rows = run_mse_experiment(config);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].algorithm, "probminhash4-unweighted");
}

TEST(MseExperiment, BaselinesRejectWeightedFixtures) {
  MseConfig config;
  config.algorithms = {Algorithm::kMinHash};
  config.m_values = {16};
  config.fixtures = {*find_fixture("skew-4")};
  config.pairs = 10;
  EXPECT_THROW(run_mse_experiment(config), InvalidParamsError);
}

TEST(Csv, FormatDouble) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(Timing, RowShape) {
  TimingConfig config;
  config.algorithms = {Algorithm::kProbMinHash2};
  config.m_values = {16};
  config.n_values = {10, 100};
  config.sets = 5;
  config.warmup = 1;
  const auto rows = run_timing_experiment(config);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].n, 100u);
  EXPECT_GT(rows[1].mean_ns, 0.0);
  std::ostringstream out;
  write_timing_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "algorithm,m,n,mean_ns");
}

TEST(Buffer, RowShapeAndBounds) {
  BufferConfig config;
  config.algorithms = {Algorithm::kProbMinHash1a};
  config.distributions = {WeightDistribution{}};
  config.n_values = {50, 2000};
  config.m = 32;
  config.runs = 20;
  const auto rows = run_buffer_experiment(config);
  ASSERT_EQ(rows.size(), 2u);
  // every element is buffered while the signature is still incomplete
  EXPECT_EQ(rows[0].samples.size(), 20u);
  EXPECT_LE(rows[0].p995, 50.0);
  EXPECT_LE(rows[0].p005, rows[0].mean);
  EXPECT_LE(rows[0].mean, rows[0].p995);
  std::ostringstream out;
  write_buffer_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
            "algorithm,distribution,n,mean,p005,p995");

  config.algorithms = {Algorithm::kProbMinHash2};
  EXPECT_THROW(run_buffer_experiment(config), InvalidParamsError);
}

TEST(Buffer, ExpectedUncorrelated) {
  // n <= m H_m: every element is buffered
  EXPECT_DOUBLE_EQ(expected_buffer_uncorrelated(100, 64), 100.0);
  EXPECT_NEAR(expected_buffer_uncorrelated(100000, 256), 8082.4300329902935, 1e-6);
}

TEST(Equivalence, SmallSuitePasses) {
  EquivalenceConfig config;
  config.trials = 30;
  config.max_size = 300;
  const auto report = run_equivalence_suite(config);
  EXPECT_EQ(report.trials, 30u);
  EXPECT_GT(report.comparisons, 30u);
  EXPECT_TRUE(report.ok()) << (report.failures.empty() ? "" : report.failures[0]);
}

TEST(ParallelFor, CoversRangeAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 3, [&](std::size_t i) { hits[i] += 1; });
  EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
  EXPECT_THROW(parallel_for(10, 2,
                            [](std::size_t i) {
                              if (i == 7) throw InvalidParamsError("boom");
                            }),
               InvalidParamsError);
}

}  // namespace
}  // namespace probminhash::harness
