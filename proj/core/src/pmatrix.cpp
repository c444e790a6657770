#include "latscale/pmatrix.hpp"

#include "latscale/errors.hpp"

namespace latscale {

bool PMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && !at(r, c).is_zero()) return false;
  return true;
}

bool PMatrix::is_upper_triangular() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < r && c < cols_; ++c)
      if (!at(r, c).is_zero()) return false;
  return true;
}

PMatrix mul(const PMatrix& a, const PMatrix& b, Prime p) {
  if (a.cols() != b.rows()) throw DimensionMismatchError();
  PMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      PScalar s;
      for (int k = 0; k < a.cols(); ++k) s = add(s, mul(a.at(i, k), b.at(k, j), p), p);
      r.at(i, j) = s;
    }
  return r;
}

PMatrix mul_scalar(const PMatrix& a, const PScalar& s, Prime p) {
  PMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = mul(a.at(i, j), s, p);
  return r;
}

PMatrix add(const PMatrix& a, const PMatrix& b, Prime p) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatchError();
  PMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = add(a.at(i, j), b.at(i, j), p);
  return r;
}

PMatrix transpose(const PMatrix& a) {
  PMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

PMatrix matrix_power(const PMatrix& a, long long k, Prime p) {
  if (!a.is_square()) throw DimensionMismatchError();
  if (k < 0) throw Error("matrix_power: negative exponent");
  PMatrix r = PMatrix::identity(a.rows());
  PMatrix base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    k >>= 1;
  }
  return r;
}

namespace {

// Determinant of the submatrix picking `rows` (ascending) against the first
// |rows| columns of the column subset encoded in `colmask`, by expansion along
// the first chosen row, memoized per top-level call through recursion depth.
PScalar det_rec(const PMatrix& m, const std::vector<int>& rows, unsigned colmask, int row_idx,
                Prime p) {
  if (row_idx == int(rows.size())) return PScalar::one();
  PScalar acc;
  int picked = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (!(colmask & (1u << c))) continue;
    const PScalar& e = m.at(rows[row_idx], c);
    if (!e.is_zero()) {
      PScalar sub = det_rec(m, rows, colmask & ~(1u << c), row_idx + 1, p);
      PScalar term = mul(e, sub, p);
      acc = add(acc, picked % 2 == 0 ? term : neg(term), p);
    }
    ++picked;
  }
  return acc;
}

PScalar minor_det(const PMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols,
                  Prime p) {
  unsigned mask = 0;
  for (int c : cols) mask |= 1u << c;
  return det_rec(m, rows, mask, 0, p);
}

}  // namespace

PScalar det(const PMatrix& m, Prime p) {
  if (!m.is_square()) throw DimensionMismatchError();
  if (m.rows() > 12) throw Error("det: matrix too large for expansion");
  std::vector<int> idx(m.rows());
  for (int i = 0; i < m.rows(); ++i) idx[i] = i;
  return minor_det(m, idx, idx, p);
}

std::vector<PScalar> char_poly(const PMatrix& m, Prime p) {
  if (!m.is_square()) throw DimensionMismatchError();
  const int n = m.rows();
  // c_{n-k} = (-1)^k * e_k, where e_k is the sum of principal k x k minors.
  std::vector<PScalar> coeffs(std::size_t(n) + 1);
  coeffs[n] = PScalar::one();
  for (int k = 1; k <= n; ++k) {
    PScalar ek;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      ek = add(ek, minor_det(m, subset, subset, p), p);
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    coeffs[n - k] = (k % 2 == 0) ? ek : neg(ek);
  }
  return coeffs;
}

std::optional<PMatrix> inverse_over_z1p(const PMatrix& m, Prime p) {
  if (!m.is_square()) throw DimensionMismatchError();
  const int n = m.rows();
  PScalar d = det(m, p);
  if (d.is_zero()) throw SingularMatrixError();
  if (d.num() != 1 && d.num() != -1) return std::nullopt;  // 1/det leaves Z[1/p]
  PMatrix inv(n, n);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (int c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      PScalar cof = (n == 1) ? PScalar::one() : minor_det(m, rows, cols, p);
      if ((i + j) % 2 == 1) cof = neg(cof);
      inv.at(i, j) = div_by_unit(cof, d);
    }
  return inv;
}

PMatrix triangular_inverse(const PMatrix& t, Prime p) {
  if (!t.is_square() || !t.is_upper_triangular()) throw Error("triangular_inverse: bad input");
  const int n = t.rows();
  PMatrix inv(n, n);
  for (int j = n - 1; j >= 0; --j) {
    const PScalar& dj = t.at(j, j);
    if (dj.is_zero()) throw SingularMatrixError();
    inv.at(j, j) = div_by_unit(PScalar::one(), dj);
    for (int i = j - 1; i >= 0; --i) {
      PScalar s;
      for (int k = i + 1; k <= j; ++k) s = add(s, mul(t.at(i, k), inv.at(k, j), p), p);
      inv.at(i, j) = div_by_unit(neg(s), t.at(i, i));
    }
  }
  return inv;
}

}  // namespace latscale
