#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "probminhash/errors.hpp"
#include "probminhash/lazy_permutation.hpp"
#include "probminhash/random_stream.hpp"
#include "statistics.hpp"

namespace probminhash {
namespace {

using testing::chi_square_uniform_pvalue;

std::vector<std::uint32_t> full_epoch(LazyPermutation& p, RandomStream& rng) {
  p.reset();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < p.size(); ++i) out.push_back(p.next(rng));
  return out;
}

TEST(LazyPermutation, SingleLabel) {
  LazyPermutation p(1);
  RandomStream rng(1);
  for (int e = 0; e < 10; ++e) {
    p.reset();
    EXPECT_EQ(p.next(rng), 0u);
  }
}

TEST(LazyPermutation, RejectsEmpty) { EXPECT_THROW(LazyPermutation(0), InvalidParamsError); }

TEST(LazyPermutation, ValidBeforeFirstReset) {
  LazyPermutation p(5);
  RandomStream rng(2);
  std::vector<std::uint32_t> out;
  for (int i = 0; i < 5; ++i) out.push_back(p.next(rng));
  std::sort(out.begin(), out.end());
  EXPECT_EQ(out, (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
}

TEST(LazyPermutation, EveryEpochIsAPermutation) {
  LazyPermutation p(37);
  RandomStream rng(3);
  std::vector<std::uint32_t> identity(37);
  std::iota(identity.begin(), identity.end(), 0u);
  for (int e = 0; e < 1000; ++e) {
    auto out = full_epoch(p, rng);
    std::sort(out.begin(), out.end());
    ASSERT_EQ(out, identity);
  }
}

TEST(LazyPermutation, ResetOnlyBumpsEpoch) {
  LazyPermutation p(4);
  RandomStream rng(4);
  p.next(rng);
  const auto epoch = p.epoch();
  p.reset();
  EXPECT_EQ(p.epoch(), epoch + 1);
  EXPECT_EQ(p.emitted(), 0u);
  for (int i = 0; i < 1'000'000; ++i) p.reset();
  EXPECT_EQ(p.epoch(), epoch + 1'000'001);
}

TEST(LazyPermutation, Deterministic) {
  LazyPermutation a(20);
  LazyPermutation b(20);
  RandomStream ra(5);
  RandomStream rb(5);
  for (int e = 0; e < 50; ++e) ASSERT_EQ(full_epoch(a, ra), full_epoch(b, rb));
}

TEST(LazyPermutation, TwoLabelsEquallyLikely) {
  LazyPermutation p(2);
  RandomStream rng(6);
  std::vector<std::uint64_t> counts(2, 0);
  for (int e = 0; e < 100'000; ++e) ++counts[full_epoch(p, rng)[0]];
  EXPECT_GT(chi_square_uniform_pvalue(counts), 0.001);
}

TEST(LazyPermutation, AllOrdersOfThreeEquallyLikely) {
  LazyPermutation p(3);
  RandomStream rng(7);
  std::map<std::vector<std::uint32_t>, std::uint64_t> freq;
  for (int e = 0; e < 60'000; ++e) ++freq[full_epoch(p, rng)];
  ASSERT_EQ(freq.size(), 6u);
  std::vector<std::uint64_t> counts;
  for (const auto& [order, c] : freq) counts.push_back(c);
  EXPECT_GT(chi_square_uniform_pvalue(counts), 0.001);
}

TEST(LazyPermutation, ConsecutiveEpochsIndependent) {
  // joint distribution of the first labels of two consecutive epochs
  LazyPermutation p(3);
  RandomStream rng(8);
  std::vector<std::uint64_t> counts(9, 0);
  for (int e = 0; e < 90'000; ++e) {
    const auto first = full_epoch(p, rng)[0];
    const auto second = full_epoch(p, rng)[0];
    ++counts[3 * first + second];
  }
  EXPECT_GT(chi_square_uniform_pvalue(counts), 0.001);
}

TEST(LazyPermutation, PrefixesAreUniform) {
  // 2-prefixes of a permutation of 5: 20 equally likely ordered pairs
  LazyPermutation p(5);
  RandomStream rng(9);
  std::vector<std::uint64_t> counts(25, 0);
  for (int e = 0; e < 100'000; ++e) {
    p.reset();
    const auto a = p.next(rng);
    const auto b = p.next(rng);
    ++counts[5 * a + b];
  }
  std::vector<std::uint64_t> off_diagonal;
  for (std::uint32_t a = 0; a < 5; ++a) {
    EXPECT_EQ(counts[5 * a + a], 0u);
    for (std::uint32_t b = 0; b < 5; ++b) {
      if (a != b) off_diagonal.push_back(counts[5 * a + b]);
    }
  }
  EXPECT_GT(chi_square_uniform_pvalue(off_diagonal), 0.001);
}

}  // namespace
}  // namespace probminhash
