#include "latscale/rmatrix.hpp"

#include "latscale/errors.hpp"

namespace latscale {

RMatrix RMatrix::identity(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RMatrix RMatrix::from_pmatrix(const PMatrix& m, Prime p) {
  RMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const PScalar& e = m.at(i, j);
      if (e.is_zero()) continue;
      BigRat v(e.num());
      long long pe = e.pexp();
      if (pe > 0)
        v /= big_p_power(p, pe);
      else if (pe < 0)
        v *= big_p_power(p, -pe);
      r.at(i, j) = v;
    }
  return r;
}

RMatrix mul(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatchError();
  RMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      BigRat s = 0;
      for (int k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

BigRat det(const RMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError();
  RMatrix w = m;
  const int n = w.rows();
  BigRat d = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (w.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (w.at(r, c) == 0) continue;
      BigRat f = w.at(r, c) / w.at(c, c);
      for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
    }
  }
  return d;
}

RMatrix solve(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw DimensionMismatchError();
  const int n = a.rows(), m = b.cols();
  RMatrix w = a, x = b;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (w.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrixError();
    if (pivot != c)
      for (int j = 0; j < std::max(n, m); ++j) {
        if (j < n) std::swap(w.at(pivot, j), w.at(c, j));
        if (j < m) std::swap(x.at(pivot, j), x.at(c, j));
      }
    for (int r = 0; r < n; ++r) {
      if (r == c || w.at(r, c) == 0) continue;
      BigRat f = w.at(r, c) / w.at(c, c);
      for (int j = 0; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
      for (int j = 0; j < m; ++j) x.at(r, j) -= f * x.at(c, j);
    }
  }
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < m; ++j) x.at(r, j) /= w.at(r, r);
  return x;
}

Valuation rat_valuation(const BigRat& x, Prime p) {
  if (x == 0) return Valuation::infinity();
  return Valuation::of(int_valuation(numerator(x), p) - int_valuation(denominator(x), p));
}

bool is_zp_unimodular(const RMatrix& m, Prime p) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Valuation v = rat_valuation(m.at(i, j), p);
      if (!v.is_infinity() && v.value() < 0) return false;
    }
  BigRat d = det(m);
  return d != 0 && rat_valuation(d, p) == Valuation::of(0);
}

}  // namespace latscale
