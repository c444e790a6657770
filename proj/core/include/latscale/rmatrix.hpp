#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "latscale/pmatrix.hpp"

namespace latscale {

using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational matrix. Transition matrices between lattice bases live over
/// the localization Z_(p), which is larger than Z[1/p]; this type holds them.
class RMatrix {
 public:
  RMatrix() : rows_(0), cols_(0) {}
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(std::size_t(rows) * cols) {}

  static RMatrix identity(int n);
  static RMatrix from_pmatrix(const PMatrix& m, Prime p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigRat& at(int r, int c) { return entries_[std::size_t(r) * cols_ + c]; }
  const BigRat& at(int r, int c) const { return entries_[std::size_t(r) * cols_ + c]; }

 private:
  int rows_, cols_;
  std::vector<BigRat> entries_;
};

RMatrix mul(const RMatrix& a, const RMatrix& b);
BigRat det(const RMatrix& m);

/// Solves A X = B exactly over Q (A square invertible).
RMatrix solve(const RMatrix& a, const RMatrix& b);

Valuation rat_valuation(const BigRat& x, Prime p);

/// True iff every entry has valuation >= 0 and det has valuation 0,
/// i.e. the matrix is invertible over Z_(p).
bool is_zp_unimodular(const RMatrix& m, Prime p);

}  // namespace latscale
