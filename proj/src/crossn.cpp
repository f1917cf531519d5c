#include "revpaste/crossn.hpp"

namespace rp {

Matrix minor_drop_col(const Matrix& M, std::size_t k) {
    if (k < 1 || k > M.cols()) throw IndexOutOfRange("column to delete");
    Matrix R(M.tag(), M.rows(), M.cols() - 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        std::size_t out = 0;
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j == k - 1) continue;
            R.at(i, out++) = M.at(i, j);
        }
    }
    return R;
}

Vector generalized_cross(const std::vector<Vector>& rows) {
    if (rows.empty()) throw DimensionMismatch("generalized cross needs at least one vector");
    const std::size_t n = rows.size() + 1;
    for (const Vector& r : rows)
        if (r.size() != n) throw DimensionMismatch("expected " + std::to_string(rows.size()) +
                                                   " vectors of length " + std::to_string(n));
    const Matrix M = Matrix::from_rows(rows);
    std::vector<Scalar> e;
    e.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar d = det(minor_drop_col(M, k));
        e.push_back(k % 2 == 1 ? d : -d);
    }
    return Vector(M.tag(), std::move(e));
}

int cross_reversal_sign(std::size_t n) {
    if (n < 2) throw DimensionMismatch("sign defined for n >= 2");
    const std::size_t exponent = (3 * n + 1) / 2;  // ceil(3n/2)
    return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace rp
