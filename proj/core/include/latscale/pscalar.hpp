#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "latscale/prime.hpp"
#include "latscale/valuation.hpp"

namespace latscale {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[1/p]: value = num * p^(-pexp), kept normalized so that
/// p does not divide num unless num = 0, and zero is (0, 0).
/// Equality of values is therefore equality of representations.
class PScalar {
 public:
  PScalar() : num_(0), pexp_(0) {}

  static PScalar from_integer(BigInt n, Prime p) { return make(std::move(n), 0, p); }

  /// Builds num * p^(-pexp) and normalizes.
  static PScalar make(BigInt num, long long pexp, Prime p);

  /// p^k for k of either sign.
  static PScalar p_power(long long k) {
    PScalar s;
    s.num_ = 1;
    s.pexp_ = -k;
    return s;
  }

  static PScalar zero() { return PScalar(); }
  static PScalar one() { return p_power(0); }

  const BigInt& num() const { return num_; }
  long long pexp() const { return pexp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && pexp_ == 0; }

  /// v_p: -pexp for nonzero values (num is prime to p), +infinity for 0.
  Valuation val() const {
    return is_zero() ? Valuation::infinity() : Valuation::of(-pexp_);
  }

  friend bool operator==(const PScalar& a, const PScalar& b) {
    return a.pexp_ == b.pexp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const PScalar& a, const PScalar& b) { return !(a == b); }

  /// Canonical text form: an integer, or "a/b" with b = p^k.
  std::string to_string(Prime p) const;

 private:
  // Preserves an already-normalized representation; callers must guarantee
  // p does not divide num.
  static PScalar raw(BigInt num, long long pexp) {
    PScalar s;
    if (num == 0) return s;
    s.num_ = std::move(num);
    s.pexp_ = pexp;
    return s;
  }

  friend PScalar neg(const PScalar& a);
  friend PScalar div_by_unit(const PScalar& a, const PScalar& unit);

  BigInt num_;
  long long pexp_;
};

PScalar add(const PScalar& a, const PScalar& b, Prime p);
PScalar sub(const PScalar& a, const PScalar& b, Prime p);
PScalar mul(const PScalar& a, const PScalar& b, Prime p);
PScalar neg(const PScalar& a);

/// Exact division; the divisor must be a unit of Z[1/p], i.e. +-p^k.
PScalar div_by_unit(const PScalar& a, const PScalar& unit);

inline Valuation val(const PScalar& x) { return x.val(); }

/// v_p of an integer; n must be nonzero.
long long int_valuation(const BigInt& n, Prime p);

BigInt big_p_power(Prime p, long long k);

}  // namespace latscale
