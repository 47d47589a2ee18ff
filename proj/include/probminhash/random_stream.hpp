#pragma once

#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>

#include "probminhash/errors.hpp"

namespace probminhash {

namespace detail {

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mum(std::uint64_t a, std::uint64_t b) noexcept {
  const uint128 r = static_cast<uint128>(a) * b;
  return static_cast<std::uint64_t>(r) ^ static_cast<std::uint64_t>(r >> 64);
}

// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline constexpr int kMaxRejectionRounds = 4096;

struct ExpZigguratTables {
  double x[257];
  double f[257];
};

// Tables for the 256-layer exponential ziggurat, built once at load time.
extern const ExpZigguratTables kExpZiggurat;
inline constexpr double kExpZigguratR = 7.697117470131487;

}  // namespace detail

/// Precomputed constants for sampling Exp(lambda) truncated to [0, 1).
///
/// c1 = (e^lambda - 1) / lambda is the area ratio used by the fast path,
/// c2 = log(2 / (1 + e^-lambda)) / lambda bounds the region that is accepted
/// without a height coordinate, and c3 = (1 - e^-lambda) / lambda is the
/// slope term of the tangent at zero.
class TruncExpParams {
 public:
  explicit TruncExpParams(double lambda);

  double lambda() const noexcept { return lambda_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }
  double c3() const noexcept { return c3_; }

 private:
  double lambda_;
  double c1_;
  double c2_;
  double c3_;
};

/// Per-branch counters for the truncated exponential sampler.
struct TruncExpCounters {
  std::uint64_t calls = 0;
  std::uint64_t fast_path = 0;       // accepted in the rectangle below e^-lambda
  std::uint64_t flat_region = 0;     // accepted without a height coordinate
  std::uint64_t tangent_zero = 0;    // accepted below the tangent at 0
  std::uint64_t tangent_one = 0;     // accepted below the tangent at 1
  std::uint64_t exp_evaluations = 0; // exponential function evaluated
  std::uint64_t exp_accepted = 0;    // accepted by the exact density test
  std::uint64_t rejections = 0;
};

/// Deterministic 64-bit random stream with economical bit consumption.
///
/// The generator is wyrand; its state is initialized from the seed through
/// the splitmix64 finalizer so that structured seeds (small integers,
/// consecutive ids) still give unrelated streams. Random bits are handed out
/// from a 64-bit buffer least-significant bit first, and a new word is only
/// generated once every bit of the previous one has been consumed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) noexcept : state_(detail::mix64(seed)) {}

  /// Next raw 64-bit word of the underlying generator, bypassing the bit buffer.
  std::uint64_t next_word() noexcept {
    state_ += 0xa0761d6478bd642fULL;
    ++words_generated_;
    return detail::mum(state_, state_ ^ 0xe7037ed1a0b428dbULL);
  }

  /// Takes the next `count` bits (0..64) from the bit buffer.
  std::uint64_t next_bits(int count) noexcept {
    assert(count >= 0 && count <= 64);
    if (count <= available_) {
      const std::uint64_t result = buffer_ & low_mask(count);
      buffer_ = count == 64 ? 0 : buffer_ >> count;
      available_ -= count;
      return result;
    }
    const int missing = count - available_;
    const std::uint64_t word = next_word();
    const std::uint64_t result = buffer_ | ((word & low_mask(missing)) << available_);
    buffer_ = missing == 64 ? 0 : word >> missing;
    available_ = 64 - missing;
    return result;
  }

  std::uint64_t next_u64() noexcept { return next_bits(64); }

  /// Uniform real in [0, 1) built from exactly 53 random bits.
  double next_uniform01() noexcept {
    return static_cast<double>(next_bits(53)) * 0x1.0p-53;
  }

  /// Uniform integer in {0, ..., n - 1}. Draws ceil(log2 n) bits per round and
  /// rejects values >= n, so there is no modulo bias.
  std::uint64_t next_uniform_int(std::uint64_t n) {
    assert(n >= 1);
    const int bits = std::bit_width(n - 1);
    for (int round = 0; round < detail::kMaxRejectionRounds; ++round) {
      const std::uint64_t candidate = next_bits(bits);
      if (candidate < n) return candidate;
    }
    throw RandomnessFailure("uniform integer sampling did not terminate");
  }

  /// Exp(1) variate, strictly positive.
  double next_exp1();

  /// Exp(lambda) conditioned on [0, 1).
  double next_trunc_exp(const TruncExpParams& params) {
    TruncExpCounters* none = nullptr;
    return trunc_exp_impl(params, none);
  }

  /// Same as next_trunc_exp, recording which branch produced the value.
  double next_trunc_exp(const TruncExpParams& params, TruncExpCounters& counters) {
    TruncExpCounters* c = &counters;
    return trunc_exp_impl(params, c);
  }

  /// Total number of bits handed out so far.
  std::uint64_t bits_consumed() const noexcept {
    return words_generated_ * 64 - static_cast<std::uint64_t>(available_);
  }
  std::uint64_t words_generated() const noexcept { return words_generated_; }

 private:
  static constexpr std::uint64_t low_mask(int count) noexcept {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  }

  double trunc_exp_impl(const TruncExpParams& params, TruncExpCounters* counters);

  std::uint64_t state_;
  std::uint64_t buffer_ = 0;
  int available_ = 0;
  std::uint64_t words_generated_ = 0;
};

inline double RandomStream::next_exp1() {
#ifdef PROBMINHASH_EXP_INVERSION
  // 1 - U lies in (0, 1], so the result is finite; it is 0 only for U = 0.
  double x = -std::log1p(-next_uniform01());
  while (x == 0.0) x = -std::log1p(-next_uniform01());
  return x;
#else
  const auto& table = detail::kExpZiggurat;
  double offset = 0.0;
  for (int round = 0; round < detail::kMaxRejectionRounds; ++round) {
    const auto layer = static_cast<unsigned>(next_bits(8));
    // (0, 1] so that the result is never zero
    const double u = static_cast<double>(next_bits(53) + 1) * 0x1.0p-53;
    const double x = u * table.x[layer];
    if (x < table.x[layer + 1]) return offset + x;
    if (layer == 0) {
      // tail beyond r: memoryless, restart shifted by r
      offset += detail::kExpZigguratR;
      continue;
    }
    const double y = table.f[layer + 1] + (table.f[layer] - table.f[layer + 1]) * next_uniform01();
    if (y < std::exp(-x)) return offset + x;
  }
  throw RandomnessFailure("exponential sampling did not terminate");
#endif
}

inline double RandomStream::trunc_exp_impl(const TruncExpParams& params,
                                           TruncExpCounters* counters) {
  if (counters) ++counters->calls;
  double x = params.c1() * next_uniform01();
  if (x < 1.0) {
    if (counters) ++counters->fast_path;
    return x;
  }
  for (int round = 0; round < detail::kMaxRejectionRounds; ++round) {
    x = next_uniform01();
    if (x < params.c2()) {
      if (counters) ++counters->flat_region;
      return x;
    }
    double y = 0.5 * next_uniform01();
    if (y > 1.0 - x) {
      // reflect at (0.5, 0.5) into the upper triangle
      x = 1.0 - x;
      y = 1.0 - y;
    }
    if (x <= params.c3() * (1.0 - y)) {
      if (counters) ++counters->tangent_zero;
      return x;
    }
    if (y * params.c1() <= 1.0 - x) {
      if (counters) ++counters->tangent_one;
      return x;
    }
    if (counters) ++counters->exp_evaluations;
    if (y * params.c1() * params.lambda() <= std::expm1(params.lambda() * (1.0 - x))) {
      if (counters) ++counters->exp_accepted;
      return x;
    }
    if (counters) ++counters->rejections;
  }
  throw RandomnessFailure("truncated exponential sampling did not terminate");
}

}  // namespace probminhash
