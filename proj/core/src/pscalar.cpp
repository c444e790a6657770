#include "latscale/pscalar.hpp"

namespace latscale {

long long int_valuation(const BigInt& n, Prime p) {
  if (n == 0) throw Error("int_valuation of zero");
  BigInt m = n;
  const BigInt pv = p.value();
  long long v = 0;
  while (m % pv == 0) {
    m /= pv;
    ++v;
  }
  return v;
}

BigInt big_p_power(Prime p, long long k) {
  if (k < 0) throw Error("big_p_power: negative exponent");
  BigInt r = 1;
  BigInt base = p.value();
  long long e = k;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

PScalar PScalar::make(BigInt num, long long pexp, Prime p) {
  PScalar s;
  if (num == 0) return s;
  const BigInt pv = p.value();
  while (num % pv == 0) {
    num /= pv;
    --pexp;
  }
  s.num_ = std::move(num);
  s.pexp_ = pexp;
  return s;
}

std::string PScalar::to_string(Prime p) const {
  if (is_zero()) return "0";
  if (pexp_ <= 0) {
    BigInt v = num_ * big_p_power(p, -pexp_);
    return v.str();
  }
  return num_.str() + "/" + big_p_power(p, pexp_).str();
}

PScalar add(const PScalar& a, const PScalar& b, Prime p) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long long k = std::max(a.pexp(), b.pexp());
  BigInt n = a.num() * big_p_power(p, k - a.pexp()) + b.num() * big_p_power(p, k - b.pexp());
  return PScalar::make(std::move(n), k, p);
}

PScalar sub(const PScalar& a, const PScalar& b, Prime p) { return add(a, neg(b), p); }

PScalar mul(const PScalar& a, const PScalar& b, Prime p) {
  if (a.is_zero() || b.is_zero()) return PScalar::zero();
  // p is prime, so the product of two numerators prime to p stays prime to p.
  return PScalar::make(a.num() * b.num(), a.pexp() + b.pexp(), p);
}

PScalar neg(const PScalar& a) { return PScalar::raw(-a.num(), a.pexp()); }

PScalar div_by_unit(const PScalar& a, const PScalar& unit) {
  if (unit.num() != 1 && unit.num() != -1) throw Error("div_by_unit: divisor is not +-p^k");
  if (a.is_zero()) return a;
  return PScalar::raw(a.num() * unit.num(), a.pexp() - unit.pexp());
}

}  // namespace latscale
