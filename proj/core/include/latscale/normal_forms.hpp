#pragma once

#include <vector>

#include "latscale/pmatrix.hpp"
#include "latscale/rmatrix.hpp"

namespace latscale {

struct EchelonResult {
  PMatrix t;  // canonical upper-triangular basis, diagonal entries exactly p^{a_i}
  RMatrix u;  // transition with T = M * U, invertible over Z_(p)
};

/// Canonical echelon form of an invertible matrix over the localization at p.
/// T depends only on the Z_p-column-span of M: diagonal entries are p^{a_i},
/// the entry in row i, column j > i is the unique representative m/p^k of its
/// residue class mod p^{a_i} with 0 <= m < p^{a_i+k} and (p does not divide m,
/// or k = 0).
EchelonResult echelon_localized(const PMatrix& m, Prime p);

/// Canonical basis of the Z_p-span of the columns (n x m, m >= n, full row
/// rank). Same normal form as echelon_localized without the transition.
PMatrix canonical_span_basis(const PMatrix& cols, Prime p);

/// Exponents of the elementary divisors p^{d_i} of a square invertible matrix
/// over Z_(p), sorted descending. Their sum is val(det).
std::vector<long long> smith_exponents(const PMatrix& m, Prime p);

}  // namespace latscale
