#pragma once

#include <cstdint>

#include "latscale/errors.hpp"

namespace latscale {

/// A validated prime, passed by value to every operation that needs the
/// residue characteristic. Scalars and matrices do not carry p themselves.
class Prime {
 public:
  explicit Prime(std::uint32_t value) : value_(value) {
    if (!is_prime(value)) throw Error("not a prime: " + std::to_string(value));
  }

  std::uint32_t value() const { return value_; }

  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }
  friend bool operator!=(Prime a, Prime b) { return a.value_ != b.value_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t value_;
};

}  // namespace latscale
