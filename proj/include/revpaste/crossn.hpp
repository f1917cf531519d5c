#pragma once

#include "revpaste/matrix.hpp"

namespace rp {

// (n-1)x(n-1) matrix obtained by deleting column k (1-based) of M.
Matrix minor_drop_col(const Matrix& M, std::size_t k);

// (n-1)-ary product in K^n: entry k is (-1)^{1+k} det of the input matrix
// with column k deleted.  Rows must be n-1 vectors of length n, n >= 2.
Vector generalized_cross(const std::vector<Vector>& rows);

// (-1)^ceil(3n/2): the factor relating the product of row-reversed inputs to
// the reversed product.
int cross_reversal_sign(std::size_t n);

}  // namespace rp
