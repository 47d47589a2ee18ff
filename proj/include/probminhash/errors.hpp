#pragma once

#include <stdexcept>
#include <string>

namespace probminhash {

// Thrown when a sketch is requested for a set without any positive-weight element.
class EmptyInputError : public std::invalid_argument {
 public:
  explicit EmptyInputError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown for out-of-range parameters (signature size, bit count, weights, ...).
class InvalidParamsError : public std::invalid_argument {
 public:
  explicit InvalidParamsError(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a sampling loop exceeds its iteration cap. With a sound
// generator this has negligible probability; hitting it means the random
// stream is broken.
class RandomnessFailure : public std::runtime_error {
 public:
  explicit RandomnessFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace probminhash
