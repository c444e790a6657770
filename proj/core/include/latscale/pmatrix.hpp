#pragma once

#include <optional>
#include <vector>

#include "latscale/pscalar.hpp"

namespace latscale {

/// Dense matrix over Z[1/p].
class PMatrix {
 public:
  PMatrix() : rows_(0), cols_(0) {}
  PMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(std::size_t(rows) * cols) {}

  static PMatrix identity(int n) {
    PMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = PScalar::one();
    return m;
  }

  static PMatrix diagonal(const std::vector<PScalar>& d) {
    PMatrix m(int(d.size()), int(d.size()));
    for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  PScalar& at(int r, int c) { return entries_[std::size_t(r) * cols_ + c]; }
  const PScalar& at(int r, int c) const { return entries_[std::size_t(r) * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;
  bool is_upper_triangular() const;

  friend bool operator==(const PMatrix& a, const PMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const PMatrix& a, const PMatrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<PScalar> entries_;
};

PMatrix mul(const PMatrix& a, const PMatrix& b, Prime p);
PMatrix mul_scalar(const PMatrix& a, const PScalar& s, Prime p);
PMatrix add(const PMatrix& a, const PMatrix& b, Prime p);
PMatrix transpose(const PMatrix& a);
PMatrix matrix_power(const PMatrix& a, long long k, Prime p);  // k >= 0

PScalar det(const PMatrix& m, Prime p);

/// Monic characteristic polynomial of a square matrix, coefficients
/// c[0] + c[1] x + ... + c[n] x^n with c[n] = 1.
std::vector<PScalar> char_poly(const PMatrix& m, Prime p);

/// Exact inverse, available iff det = +-p^k (the units of Z[1/p]).
std::optional<PMatrix> inverse_over_z1p(const PMatrix& m, Prime p);

/// Inverse of an upper-triangular matrix whose diagonal entries are +-p^k.
PMatrix triangular_inverse(const PMatrix& t, Prime p);

}  // namespace latscale
