#include "probminhash/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "probminhash/errors.hpp"
#include "probminhash/random_stream.hpp"

namespace probminhash {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InvalidParamsError("signature sizes differ: " + std::to_string(a) + " vs " +
                             std::to_string(b));
  }
  if (a == 0) throw InvalidParamsError("signatures must not be empty");
}

}  // namespace

void validate(std::span<const WeightPair> pairs) {
  if (pairs.empty()) throw InvalidParamsError("weight pair multiset is empty");
  for (const auto& p : pairs) {
    const bool finite = std::isfinite(p.a) && std::isfinite(p.b);
    if (!finite || p.a < 0.0 || p.b < 0.0 || (p.a == 0.0 && p.b == 0.0)) {
      throw InvalidParamsError("invalid weight pair (" + std::to_string(p.a) + ", " +
                               std::to_string(p.b) + ")");
    }
  }
}

double jaccard_exact(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::unordered_set<std::uint64_t> set_a(a.begin(), a.end());
  const std::unordered_set<std::uint64_t> set_b(b.begin(), b.end());
  std::size_t intersection = 0;
  for (const auto id : set_b) intersection += set_a.count(id);
  const std::size_t union_size = set_a.size() + set_b.size() - intersection;
  if (union_size == 0) throw InvalidParamsError("Jaccard similarity of two empty sets");
  return static_cast<double>(intersection) / static_cast<double>(union_size);
}

double jaccard_p_exact(std::span<const WeightPair> pairs) {
  validate(pairs);
  CompensatedSum result;
  for (const auto& d : pairs) {
    if (d.a == 0.0 || d.b == 0.0) continue;
    CompensatedSum denominator;
    for (const auto& e : pairs) {
      denominator.add(std::max(e.a / d.a, e.b / d.b));
    }
    result.add(1.0 / denominator.value());
  }
  return std::clamp(result.value(), 0.0, 1.0);
}

double jaccard_w_exact(std::span<const WeightPair> pairs) {
  validate(pairs);
  CompensatedSum lo;
  CompensatedSum hi;
  for (const auto& p : pairs) {
    lo.add(std::min(p.a, p.b));
    hi.add(std::max(p.a, p.b));
  }
  return lo.value() / hi.value();
}

double jaccard_n_exact(std::span<const WeightPair> pairs) {
  validate(pairs);
  CompensatedSum total_a;
  CompensatedSum total_b;
  for (const auto& p : pairs) {
    total_a.add(p.a);
    total_b.add(p.b);
  }
  if (total_a.value() == 0.0 || total_b.value() == 0.0) return 0.0;
  CompensatedSum lo;
  CompensatedSum hi;
  for (const auto& p : pairs) {
    const double x = p.a / total_a.value();
    const double y = p.b / total_b.value();
    lo.add(std::min(x, y));
    hi.add(std::max(x, y));
  }
  return std::clamp(lo.value() / hi.value(), 0.0, 1.0);
}

std::uint32_t count_matches(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  check_same_size(a.size(), b.size());
  std::uint32_t matches = 0;
  for (std::size_t k = 0; k < a.size(); ++k) matches += a[k] == b[k];
  return matches;
}

double estimate_similarity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return static_cast<double>(count_matches(a, b)) / static_cast<double>(a.size());
}

std::uint64_t bbit_component_hash(std::uint64_t value, std::uint64_t index) noexcept {
  return detail::mix64(detail::mix64(value) ^ (index * 0x9E3779B97F4A7C15ULL));
}

BBitSignature bbit_reduce(std::span<const std::uint64_t> signature, int bits) {
  if (bits < 1 || bits > 16) {
    throw InvalidParamsError("b-bit reduction needs 1 <= b <= 16, got " + std::to_string(bits));
  }
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  BBitSignature result;
  result.bits = bits;
  result.components.resize(signature.size());
  for (std::size_t k = 0; k < signature.size(); ++k) {
    result.components[k] = static_cast<std::uint16_t>(bbit_component_hash(signature[k], k) & mask);
  }
  return result;
}

double estimate_similarity_bbit(const BBitSignature& a, const BBitSignature& b) {
  if (a.bits != b.bits) {
    throw InvalidParamsError("b-bit signatures use different bit counts: " +
                             std::to_string(a.bits) + " vs " + std::to_string(b.bits));
  }
  if (a.bits < 1 || a.bits > 16) throw InvalidParamsError("invalid b-bit signature");
  check_same_size(a.components.size(), b.components.size());
  std::size_t matches = 0;
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    matches += a.components[k] == b.components[k];
  }
  const double c = static_cast<double>(matches) / static_cast<double>(a.components.size());
  const double floor = std::ldexp(1.0, -a.bits);
  return std::clamp((c - floor) / (1.0 - floor), 0.0, 1.0);
}

double improvement_factor(std::uint64_t m, std::uint64_t u) {
  if (m < 2 || u < 2) {
    throw InvalidParamsError("improvement factor needs m >= 2 and u >= 2, got m=" +
                             std::to_string(m) + ", u=" + std::to_string(u));
  }
  const double md = static_cast<double>(m);
  const double ud = static_cast<double>(u);
  // Each summand l^u ((l+1)^u + (l-1)^u - 2 l^u) divided by the common
  // denominator (m-1)^(u-1) m^u, written as l^2u ((1+1/l)^u - 1 + (1-1/l)^u - 1)
  // so that the bracket is formed from two expm1 terms without cancellation.
  const double log_denominator = (ud - 1.0) * std::log(md - 1.0) + ud * std::log(md);
  CompensatedSum sum;
  for (std::uint64_t l = 1; l < m; ++l) {
    const double ld = static_cast<double>(l);
    const double base = 2.0 * ud * std::log(ld) - log_denominator;
    const double up = ud * std::log1p(1.0 / ld);
    const double down = ud * std::log1p(-1.0 / ld);  // -inf for l = 1
    if (up < 700.0) {
      sum.add(std::exp(base) * (std::expm1(up) + std::expm1(down)));
    } else {
      sum.add(std::exp(base + up));
      sum.add(std::exp(base + down));
      sum.add(-2.0 * std::exp(base));
    }
  }
  return 1.0 - sum.value() / (ud - 1.0);
}

double estimator_variance(double j, std::uint64_t m) {
  if (m == 0) throw InvalidParamsError("signature size must be >= 1");
  return j * (1.0 - j) / static_cast<double>(m);
}

double superminhash_variance(double j, std::uint64_t m, std::uint64_t u) {
  return estimator_variance(j, m) * improvement_factor(m, u);
}

double harmonic_number(std::uint64_t n) noexcept {
  CompensatedSum sum;
  for (std::uint64_t i = n; i >= 1; --i) sum.add(1.0 / static_cast<double>(i));
  return sum.value();
}

}  // namespace probminhash
