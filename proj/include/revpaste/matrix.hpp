#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "revpaste/vec.hpp"

namespace rp {

/// Dense row-major matrix over one field.  Empty shapes (0 rows or 0
/// columns) are admitted; they are the pasting identities.
class Matrix {
public:
    Matrix(FieldTag tag, std::size_t rows, std::size_t cols);
    Matrix(FieldTag tag, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const FieldTag& tag, std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_ints(const FieldTag& tag, const std::vector<std::vector<std::int64_t>>& rows);

    const FieldTag& tag() const { return tag_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& a) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;

    std::string to_string() const;  // rows joined by ';', entries by ','

private:
    FieldTag tag_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct QuadDecomposition {
    Matrix pp;  // row- and column-palindromic
    Matrix pa;  // row-palindromic, column-antipalindromic
    Matrix ap;  // row-antipalindromic, column-palindromic
    Matrix aa;  // row- and column-antipalindromic
};

// Reversing per row / per column / both; reverse_full(A)(i,j) = A(n-1-i, m-1-j).
Matrix reverse_rows(const Matrix& A);
Matrix reverse_cols(const Matrix& A);
Matrix reverse_full(const Matrix& A);

// Pasting: side by side / stacked / block diagonal.
Matrix paste_rows(const Matrix& A, const Matrix& C);
Matrix paste_cols(const Matrix& A, const Matrix& B);
Matrix paste_blocks(const Matrix& A, const Matrix& B);

Matrix matmul(const Matrix& A, const Matrix& B);
Vector apply(const Matrix& A, const Vector& v);  // column-vector convention
Matrix transpose(const Matrix& A);
Scalar trace(const Matrix& A);

// Exact Bareiss elimination for rational/prime-field tags; partial pivoting
// for floats with the tag tolerance deciding singularity.
Scalar det(const Matrix& A);
Matrix inverse(const Matrix& A);
std::size_t rank(const Matrix& A);

bool is_row_palindromic(const Matrix& A);
bool is_row_antipalindromic(const Matrix& A);
bool is_col_palindromic(const Matrix& A);
bool is_col_antipalindromic(const Matrix& A);
bool is_full_palindromic(const Matrix& A);
bool is_full_antipalindromic(const Matrix& A);

enum class SymmetryMode {
    RowPal,
    RowAnti,
    ColPal,
    ColAnti,
    PP,
    PA,
    AP,
    AA,
    FullPal,
    FullAnti,
};

SymmetryMode parse_symmetry_mode(const std::string& name);  // "row-pal", "pp", ...
std::string symmetry_mode_name(SymmetryMode mode);
bool satisfies_symmetry(const Matrix& A, SymmetryMode mode);

std::vector<Matrix> symmetry_basis(std::size_t n, std::size_t m, SymmetryMode mode,
                                   const FieldTag& tag);

// Commuting projector components (A +- A*J +- J*A +- J*A*J)/4.
QuadDecomposition decompose_rc(const Matrix& A);

// ((A + reverse_full(A))/2, (A - reverse_full(A))/2)
std::pair<Matrix, Matrix> decompose_full(const Matrix& A);

}  // namespace rp
