#include "probminhash/random_stream.hpp"

#include <cmath>
#include <string>

namespace probminhash {

namespace detail {

namespace {

ExpZigguratTables make_exp_ziggurat() {
  // Marsaglia & Tsang layout: x[0] is the width of the base strip (which
  // includes the tail), x[1] = r, and every layer has area v.
  constexpr double v = 3.949659822581572e-3;
  ExpZigguratTables t{};
  t.x[0] = v / std::exp(-kExpZigguratR);
  t.x[1] = kExpZigguratR;
  for (int i = 1; i < 255; ++i) {
    t.x[i + 1] = -std::log(std::exp(-t.x[i]) + v / t.x[i]);
  }
  t.x[256] = 0.0;
  for (int i = 0; i <= 256; ++i) t.f[i] = std::exp(-t.x[i]);
  return t;
}

}  // namespace

const ExpZigguratTables kExpZiggurat = make_exp_ziggurat();

}  // namespace detail

TruncExpParams::TruncExpParams(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidParamsError("truncated exponential rate must be positive and finite, got " +
                             std::to_string(lambda));
  }
  c1_ = std::expm1(lambda) / lambda;
  c2_ = std::log(2.0 / (1.0 + std::exp(-lambda))) / lambda;
  c3_ = -std::expm1(-lambda) / lambda;
}

}  // namespace probminhash
