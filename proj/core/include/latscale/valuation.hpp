#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "latscale/errors.hpp"

namespace latscale {

/// p-adic valuation value: a finite integer, or +infinity (valuation of 0).
/// Infinity is a distinct state, never an integer sentinel.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation of(long long v) { return Valuation(false, v); }

  bool is_infinity() const { return infinite_; }

  long long value() const {
    if (infinite_) throw Error("valuation is +infinity");
    return v_;
  }

  Valuation operator+(Valuation o) const {
    if (infinite_ || o.infinite_) return infinity();
    return of(v_ + o.v_);
  }

  friend bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(Valuation a, Valuation b) { return !(a == b); }
  friend bool operator<(Valuation a, Valuation b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(Valuation a, Valuation b) { return a < b || a == b; }
  friend bool operator>(Valuation a, Valuation b) { return b < a; }
  friend bool operator>=(Valuation a, Valuation b) { return b <= a; }

  std::string to_string() const { return infinite_ ? "+inf" : std::to_string(v_); }

  friend std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

 private:
  Valuation(bool infinite, long long v) : infinite_(infinite), v_(v) {}

  bool infinite_;
  long long v_;
};

}  // namespace latscale
