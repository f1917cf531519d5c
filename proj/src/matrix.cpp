#include "revpaste/matrix.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace rp {

Matrix::Matrix(FieldTag tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(tag)) {}

Matrix::Matrix(FieldTag tag, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : tag_(tag), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DimensionMismatch("entry count");
    for (const Scalar& s : entries_)
        if (s.tag() != tag_) throw IncompatibleField();
}

Matrix Matrix::identity(const FieldTag& tag, std::size_t n) {
    Matrix I(tag, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = Scalar::one(tag);
    return I;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) throw DimensionMismatch("from_rows needs at least one row");
    const FieldTag tag = rows[0].tag();
    const std::size_t m = rows[0].size();
    std::vector<Scalar> e;
    e.reserve(rows.size() * m);
    for (const Vector& r : rows) {
        if (r.size() != m) throw DimensionMismatch("ragged rows");
        e.insert(e.end(), r.entries().begin(), r.entries().end());
    }
    return Matrix(tag, rows.size(), m, std::move(e));
}

Matrix Matrix::from_ints(const FieldTag& tag, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t n = rows.size();
    const std::size_t m = n ? rows[0].size() : 0;
    std::vector<Scalar> e;
    e.reserve(n * m);
    for (const auto& r : rows) {
        if (r.size() != m) throw DimensionMismatch("ragged rows");
        for (std::int64_t k : r) e.push_back(Scalar::from_int(tag, k));
    }
    return Matrix(tag, n, m, std::move(e));
}

Vector Matrix::row(std::size_t i) const {
    if (i >= rows_) throw IndexOutOfRange("row");
    std::vector<Scalar> e(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return Vector(tag_, std::move(e));
}

Vector Matrix::col(std::size_t j) const {
    if (j >= cols_) throw IndexOutOfRange("column");
    std::vector<Scalar> e;
    e.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) e.push_back(at(i, j));
    return Vector(tag_, std::move(e));
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (tag_ != o.tag_) throw IncompatibleField();
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
    std::vector<Scalar> e;
    e.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) e.push_back(entries_[i] + o.entries_[i]);
    return Matrix(tag_, rows_, cols_, std::move(e));
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    std::vector<Scalar> e;
    e.reserve(entries_.size());
    for (const Scalar& s : entries_) e.push_back(-s);
    return Matrix(tag_, rows_, cols_, std::move(e));
}

Matrix Matrix::scaled(const Scalar& a) const {
    std::vector<Scalar> e;
    e.reserve(entries_.size());
    for (const Scalar& s : entries_) e.push_back(a * s);
    return Matrix(tag_, rows_, cols_, std::move(e));
}

bool Matrix::operator==(const Matrix& o) const {
    if (tag_ != o.tag_) throw IncompatibleField();
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : entries_)
        if (!s.is_zero()) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ';';
        os << row(i).to_string();
    }
    return os.str();
}

Matrix reverse_rows(const Matrix& A) {
    Matrix R(A.tag(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, A.cols() - 1 - j);
    return R;
}

Matrix reverse_cols(const Matrix& A) {
    Matrix R(A.tag(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(A.rows() - 1 - i, j);
    return R;
}

Matrix reverse_full(const Matrix& A) {
    Matrix R(A.tag(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            R.at(i, j) = A.at(A.rows() - 1 - i, A.cols() - 1 - j);
    return R;
}

Matrix paste_rows(const Matrix& A, const Matrix& C) {
    if (A.tag() != C.tag()) throw IncompatibleField();
    if (A.rows() != C.rows()) throw DimensionMismatch("paste by rows needs equal row counts");
    Matrix R(A.tag(), A.rows(), A.cols() + C.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
        for (std::size_t j = 0; j < C.cols(); ++j) R.at(i, A.cols() + j) = C.at(i, j);
    }
    return R;
}

Matrix paste_cols(const Matrix& A, const Matrix& B) {
    if (A.tag() != B.tag()) throw IncompatibleField();
    if (A.cols() != B.cols()) throw DimensionMismatch("paste by columns needs equal column counts");
    Matrix R(A.tag(), A.rows() + B.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) R.at(A.rows() + i, j) = B.at(i, j);
    return R;
}

Matrix paste_blocks(const Matrix& A, const Matrix& B) {
    if (A.tag() != B.tag()) throw IncompatibleField();
    Matrix R(A.tag(), A.rows() + B.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) R.at(A.rows() + i, A.cols() + j) = B.at(i, j);
    return R;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.tag() != B.tag()) throw IncompatibleField();
    if (A.cols() != B.rows()) throw DimensionMismatch("matrix product");
    Matrix C(A.tag(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Scalar& a = A.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = C.at(i, j) + a * B.at(k, j);
        }
    return C;
}

Vector apply(const Matrix& A, const Vector& v) {
    if (A.tag() != v.tag()) throw IncompatibleField();
    if (A.cols() != v.size()) throw DimensionMismatch("matrix-vector product");
    std::vector<Scalar> e;
    e.reserve(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) e.push_back(dot(A.row(i), v));
    return Vector(A.tag(), std::move(e));
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.tag(), A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Scalar trace(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("trace of non-square matrix");
    Scalar acc = Scalar::zero(A.tag());
    for (std::size_t i = 0; i < A.rows(); ++i) acc = acc + A.at(i, i);
    return acc;
}

namespace {

// Bareiss fraction-free elimination; every division is exact.
Scalar det_exact(Matrix M) {
    const std::size_t n = M.rows();
    if (n == 0) return Scalar::one(M.tag());
    int sign = 1;
    Scalar prev = Scalar::one(M.tag());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && M.at(piv, k).is_zero()) ++piv;
            if (piv == n) return Scalar::zero(M.tag());
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    Scalar d = M.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Scalar det_float(Matrix M) {
    const std::size_t n = M.rows();
    const FieldTag& tag = M.tag();
    if (n == 0) return Scalar::one(tag);
    double sign = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(M.at(k, k).float_value());
        for (std::size_t i = k + 1; i < n; ++i) {
            double cand = std::abs(M.at(i, k).float_value());
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best <= tag.tolerance()) return Scalar::zero(tag);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = M.at(i, k) / M.at(k, k);
            for (std::size_t j = k; j < n; ++j) M.at(i, j) = M.at(i, j) - f * M.at(k, j);
        }
    }
    Scalar d = Scalar::from_double(tag, sign);
    for (std::size_t k = 0; k < n; ++k) d = d * M.at(k, k);
    return d;
}

bool pivot_usable(const Scalar& s) { return !s.is_zero(); }

}  // namespace

Scalar det(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("determinant of non-square matrix");
    return A.tag().is_exact() ? det_exact(A) : det_float(A);
}

Matrix inverse(const Matrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = A.rows();
    Matrix M = A;
    Matrix I = Matrix::identity(A.tag(), n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        if (A.tag().is_exact()) {
            while (piv < n && !pivot_usable(M.at(piv, k))) ++piv;
            if (piv == n) throw Singular();
        } else {
            double best = std::abs(M.at(k, k).float_value());
            for (std::size_t i = k + 1; i < n; ++i) {
                double cand = std::abs(M.at(i, k).float_value());
                if (cand > best) {
                    best = cand;
                    piv = i;
                }
            }
            if (best <= A.tag().tolerance()) throw Singular();
        }
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(M.at(k, j), M.at(piv, j));
                std::swap(I.at(k, j), I.at(piv, j));
            }
        Scalar inv_piv = M.at(k, k).inv();
        for (std::size_t j = 0; j < n; ++j) {
            M.at(k, j) = M.at(k, j) * inv_piv;
            I.at(k, j) = I.at(k, j) * inv_piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || M.at(i, k).is_zero()) continue;
            Scalar f = M.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                M.at(i, j) = M.at(i, j) - f * M.at(k, j);
                I.at(i, j) = I.at(i, j) - f * I.at(k, j);
            }
        }
    }
    return I;
}

std::size_t rank(const Matrix& A) {
    Matrix M = A;
    const std::size_t n = M.rows(), m = M.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < m && r < n; ++j) {
        std::size_t piv = r;
        if (A.tag().is_exact()) {
            while (piv < n && M.at(piv, j).is_zero()) ++piv;
            if (piv == n) continue;
        } else {
            double best = 0;
            piv = n;
            for (std::size_t i = r; i < n; ++i) {
                double cand = std::abs(M.at(i, j).float_value());
                if (cand > best) {
                    best = cand;
                    piv = i;
                }
            }
            if (piv == n || best <= A.tag().tolerance()) continue;
        }
        if (piv != r)
            for (std::size_t c = 0; c < m; ++c) std::swap(M.at(r, c), M.at(piv, c));
        Scalar inv_piv = M.at(r, j).inv();
        for (std::size_t i = r + 1; i < n; ++i) {
            if (M.at(i, j).is_zero()) continue;
            Scalar f = M.at(i, j) * inv_piv;
            for (std::size_t c = j; c < m; ++c) M.at(i, c) = M.at(i, c) - f * M.at(r, c);
        }
        ++r;
    }
    return r;
}

namespace {

bool all_rows(const Matrix& A, bool (*pred)(const Vector&)) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        if (!pred(A.row(i))) return false;
    return true;
}

bool all_cols(const Matrix& A, bool (*pred)(const Vector&)) {
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (!pred(A.col(j))) return false;
    return true;
}

}  // namespace

bool is_row_palindromic(const Matrix& A) { return all_rows(A, is_palindromic); }
bool is_row_antipalindromic(const Matrix& A) { return all_rows(A, is_antipalindromic); }
bool is_col_palindromic(const Matrix& A) { return all_cols(A, is_palindromic); }
bool is_col_antipalindromic(const Matrix& A) { return all_cols(A, is_antipalindromic); }
bool is_full_palindromic(const Matrix& A) { return reverse_full(A) == A; }
bool is_full_antipalindromic(const Matrix& A) { return reverse_full(A) == -A; }

SymmetryMode parse_symmetry_mode(const std::string& name) {
    if (name == "row-pal") return SymmetryMode::RowPal;
    if (name == "row-anti") return SymmetryMode::RowAnti;
    if (name == "col-pal") return SymmetryMode::ColPal;
    if (name == "col-anti") return SymmetryMode::ColAnti;
    if (name == "pp") return SymmetryMode::PP;
    if (name == "pa") return SymmetryMode::PA;
    if (name == "ap") return SymmetryMode::AP;
    if (name == "aa") return SymmetryMode::AA;
    if (name == "full-pal") return SymmetryMode::FullPal;
    if (name == "full-anti") return SymmetryMode::FullAnti;
    throw ParseError("unknown symmetry mode '" + name + "'");
}

std::string symmetry_mode_name(SymmetryMode mode) {
    switch (mode) {
        case SymmetryMode::RowPal: return "row-pal";
        case SymmetryMode::RowAnti: return "row-anti";
        case SymmetryMode::ColPal: return "col-pal";
        case SymmetryMode::ColAnti: return "col-anti";
        case SymmetryMode::PP: return "pp";
        case SymmetryMode::PA: return "pa";
        case SymmetryMode::AP: return "ap";
        case SymmetryMode::AA: return "aa";
        case SymmetryMode::FullPal: return "full-pal";
        case SymmetryMode::FullAnti: return "full-anti";
    }
    return "?";
}

bool satisfies_symmetry(const Matrix& A, SymmetryMode mode) {
    switch (mode) {
        case SymmetryMode::RowPal: return is_row_palindromic(A);
        case SymmetryMode::RowAnti: return is_row_antipalindromic(A);
        case SymmetryMode::ColPal: return is_col_palindromic(A);
        case SymmetryMode::ColAnti: return is_col_antipalindromic(A);
        case SymmetryMode::PP: return is_row_palindromic(A) && is_col_palindromic(A);
        case SymmetryMode::PA: return is_row_palindromic(A) && is_col_antipalindromic(A);
        case SymmetryMode::AP: return is_row_antipalindromic(A) && is_col_palindromic(A);
        case SymmetryMode::AA: return is_row_antipalindromic(A) && is_col_antipalindromic(A);
        case SymmetryMode::FullPal: return is_full_palindromic(A);
        case SymmetryMode::FullAnti: return is_full_antipalindromic(A);
    }
    return false;
}

namespace {

// entry (i,j) = u_i * v_j
Matrix outer(const Vector& u, const Vector& v) {
    Matrix M(u.tag(), u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) M.at(i, j) = u[i] * v[j];
    return M;
}

std::vector<Matrix> single_row_family(std::size_t n, const std::vector<Vector>& row_patterns) {
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (const Vector& b : row_patterns) {
            Matrix M(b.tag(), n, b.size());
            for (std::size_t j = 0; j < b.size(); ++j) M.at(i, j) = b[j];
            basis.push_back(std::move(M));
        }
    return basis;
}

std::vector<Matrix> outer_family(const std::vector<Vector>& us, const std::vector<Vector>& vs) {
    std::vector<Matrix> basis;
    for (const Vector& u : us)
        for (const Vector& v : vs) basis.push_back(outer(u, v));
    return basis;
}

Matrix reshape(const Vector& flat, std::size_t n, std::size_t m) {
    return Matrix(flat.tag(), n, m, flat.entries());
}

}  // namespace

std::vector<Matrix> symmetry_basis(std::size_t n, std::size_t m, SymmetryMode mode,
                                   const FieldTag& tag) {
    switch (mode) {
        case SymmetryMode::RowPal: return single_row_family(n, palindromic_basis(m, tag));
        case SymmetryMode::RowAnti: return single_row_family(n, antipalindromic_basis(m, tag));
        case SymmetryMode::ColPal: {
            std::vector<Matrix> basis;
            for (const Matrix& M : single_row_family(m, palindromic_basis(n, tag)))
                basis.push_back(transpose(M));
            return basis;
        }
        case SymmetryMode::ColAnti: {
            std::vector<Matrix> basis;
            for (const Matrix& M : single_row_family(m, antipalindromic_basis(n, tag)))
                basis.push_back(transpose(M));
            return basis;
        }
        case SymmetryMode::PP: return outer_family(palindromic_basis(n, tag), palindromic_basis(m, tag));
        case SymmetryMode::PA:
            return outer_family(antipalindromic_basis(n, tag), palindromic_basis(m, tag));
        case SymmetryMode::AP:
            return outer_family(palindromic_basis(n, tag), antipalindromic_basis(m, tag));
        case SymmetryMode::AA:
            return outer_family(antipalindromic_basis(n, tag), antipalindromic_basis(m, tag));
        case SymmetryMode::FullPal: {
            std::vector<Matrix> basis;
            for (const Vector& b : palindromic_basis(n * m, tag)) basis.push_back(reshape(b, n, m));
            return basis;
        }
        case SymmetryMode::FullAnti: {
            std::vector<Matrix> basis;
            for (const Vector& b : antipalindromic_basis(n * m, tag)) basis.push_back(reshape(b, n, m));
            return basis;
        }
    }
    throw Error("bad symmetry mode");
}

QuadDecomposition decompose_rc(const Matrix& A) {
    if (A.tag().characteristic() == 2) throw CharacteristicTwo();
    const Scalar quarter = Scalar::from_int(A.tag(), 4).inv();
    const Matrix ar = reverse_rows(A);
    const Matrix ac = reverse_cols(A);
    const Matrix arc = reverse_full(A);
    return QuadDecomposition{
        (A + ar + ac + arc).scaled(quarter),
        (A + ar - ac - arc).scaled(quarter),
        (A - ar + ac - arc).scaled(quarter),
        (A - ar - ac + arc).scaled(quarter),
    };
}

std::pair<Matrix, Matrix> decompose_full(const Matrix& A) {
    if (A.tag().characteristic() == 2) throw CharacteristicTwo();
    const Scalar half = Scalar::from_int(A.tag(), 2).inv();
    const Matrix r = reverse_full(A);
    return {(A + r).scaled(half), (A - r).scaled(half)};
}

}  // namespace rp
