#include "latscale/normal_forms.hpp"

#include <algorithm>

#include "latscale/errors.hpp"

namespace latscale {

namespace {

struct BigMat {
  int n = 0, m = 0;
  std::vector<BigInt> e;

  BigMat(int rows, int cols) : n(rows), m(cols), e(std::size_t(rows) * cols) {}
  BigInt& at(int r, int c) { return e[std::size_t(r) * m + c]; }
  const BigInt& at(int r, int c) const { return e[std::size_t(r) * m + c]; }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < n; ++r) std::swap(at(r, a), at(r, b));
  }
  void negate_col(int c) {
    for (int r = 0; r < n; ++r) at(r, c) = -at(r, c);
  }
  // col_j -= q * col_i
  void axpy_col(int j, const BigInt& q, int i) {
    if (q == 0) return;
    for (int r = 0; r < n; ++r) at(r, j) -= q * at(r, i);
  }
};

BigInt floordiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

// Column-style Hermite normal form of the Z-span of the columns of A
// (m >= n, full row rank). Upper triangular, positive diagonal, entries of
// row i right of the diagonal reduced into [0, diag).
BigMat hnf_cols(BigMat a) {
  const int n = a.n, m = a.m;
  for (int i = n - 1; i >= 0; --i) {
    int k = m - (n - 1 - i);  // columns [0, k) still active; pivots parked right
    while (true) {
      int count = 0, jmin = -1;
      for (int j = 0; j < k; ++j) {
        if (a.at(i, j) == 0) continue;
        ++count;
        if (jmin < 0 || abs(a.at(i, j)) < abs(a.at(i, jmin))) jmin = j;
      }
      if (count == 0) throw SingularMatrixError("column span has deficient rank");
      if (count == 1) {
        a.swap_cols(jmin, k - 1);
        if (a.at(i, k - 1) < 0) a.negate_col(k - 1);
        break;
      }
      for (int j = 0; j < k; ++j) {
        if (j == jmin || a.at(i, j) == 0) continue;
        a.axpy_col(j, a.at(i, j) / a.at(i, jmin), jmin);
      }
    }
  }
  BigMat h(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h.at(r, c) = a.at(r, m - n + c);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j) h.axpy_col(j, floordiv(h.at(i, j), h.at(i, i)), i);
  return h;
}

// p^K * M as an integer matrix, K = max(0, max pexp).
std::pair<BigMat, long long> scale_to_integer(const PMatrix& m, Prime p) {
  long long k = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) k = std::max(k, m.at(r, c).pexp());
  BigMat a(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const PScalar& s = m.at(r, c);
      if (!s.is_zero()) a.at(r, c) = s.num() * big_p_power(p, k - s.pexp());
    }
  return {std::move(a), k};
}

}  // namespace

PMatrix canonical_span_basis(const PMatrix& cols, Prime p) {
  const int n = cols.rows(), m = cols.cols();
  if (m < n) throw SingularMatrixError("fewer columns than rows");
  auto [a, k] = scale_to_integer(cols, p);

  // Z-span basis first; its determinant bounds the p-saturation depth.
  BigMat h0 = hnf_cols(std::move(a));
  long long nsat = 0;
  for (int i = 0; i < n; ++i) nsat += int_valuation(h0.at(i, i), p);

  // Adjoin p^nsat * I: the Z-span of the widened matrix equals the Z_p-span
  // of the input intersected with Z^n-coordinates, so its HNF is canonical
  // for the lattice and has p-power diagonal.
  BigMat wide(n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) wide.at(r, c) = h0.at(r, c);
  const BigInt psat = big_p_power(p, nsat);
  for (int i = 0; i < n; ++i) wide.at(i, n + i) = psat;
  BigMat h = hnf_cols(std::move(wide));

  PMatrix t(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (h.at(r, c) != 0) t.at(r, c) = PScalar::make(h.at(r, c), k, p);
  for (int i = 0; i < n; ++i)
    if (t.at(i, i).num() != 1) throw Error("canonical_span_basis: non p-power pivot");
  return t;
}

EchelonResult echelon_localized(const PMatrix& m, Prime p) {
  if (!m.is_square()) throw DimensionMismatchError();
  PMatrix t = canonical_span_basis(m, p);
  RMatrix u = solve(RMatrix::from_pmatrix(m, p), RMatrix::from_pmatrix(t, p));
  return {std::move(t), std::move(u)};
}

std::vector<long long> smith_exponents(const PMatrix& m, Prime p) {
  if (!m.is_square()) throw DimensionMismatchError();
  const int n = m.rows();
  auto [a, k] = scale_to_integer(m, p);
  const BigInt pv = p.value();

  std::vector<long long> exps;
  exps.reserve(n);
  for (int t = 0; t < n; ++t) {
    long long best_val = -1;
    int br = -1, bc = -1;
    for (int r = t; r < n; ++r)
      for (int c = t; c < n; ++c) {
        if (a.at(r, c) == 0) continue;
        long long v = int_valuation(a.at(r, c), p);
        if (br < 0 || v < best_val) {
          best_val = v;
          br = r;
          bc = c;
        }
      }
    if (br < 0) throw SingularMatrixError();
    for (int c = 0; c < n; ++c) std::swap(a.at(t, c), a.at(br, c));
    a.swap_cols(t, bc);

    const long long alpha = best_val;
    const BigInt unit = a.at(t, t) / big_p_power(p, alpha);
    for (int r = t + 1; r < n; ++r) {
      if (a.at(r, t) == 0) continue;
      long long beta = int_valuation(a.at(r, t), p);
      BigInt v = a.at(r, t) / big_p_power(p, beta);
      BigInt shift = v * big_p_power(p, beta - alpha);
      for (int c = t; c < n; ++c) a.at(r, c) = unit * a.at(r, c) - shift * a.at(t, c);
    }
    for (int c = t + 1; c < n; ++c) {
      if (a.at(t, c) == 0) continue;
      long long beta = int_valuation(a.at(t, c), p);
      BigInt v = a.at(t, c) / big_p_power(p, beta);
      BigInt shift = v * big_p_power(p, beta - alpha);
      for (int r = t; r < n; ++r) a.at(r, c) = unit * a.at(r, c) - shift * a.at(r, t);
    }
    exps.push_back(alpha - k);
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

}  // namespace latscale
