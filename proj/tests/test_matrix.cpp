#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "revpaste/matrix.hpp"

using namespace rp;
using th::mat;
using th::vec;

namespace {

// cofactor-expansion determinant, the independent oracle for the Bareiss path
Scalar cofactor_det(const Matrix& A) {
    const std::size_t n = A.rows();
    if (n == 0) return Scalar::one(A.tag());
    if (n == 1) return A.at(0, 0);
    Scalar acc = Scalar::zero(A.tag());
    for (std::size_t j = 0; j < n; ++j) {
        Matrix sub(A.tag(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) sub.at(r - 1, cc++) = A.at(r, c);
        }
        Scalar term = A.at(0, j) * cofactor_det(sub);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

Matrix rnd_mat(th::Rng& rng, std::size_t n, std::size_t m) { return rng.next_mat(th::Q, n, m); }

}  // namespace

TEST_CASE("reversing pinned cases") {
    Matrix A = mat({{1, 2}, {3, 4}});
    CHECK(reverse_rows(A) == mat({{2, 1}, {4, 3}}));
    CHECK(reverse_cols(A) == mat({{3, 4}, {1, 2}}));
    CHECK(reverse_full(A) == mat({{4, 3}, {2, 1}}));
    CHECK(reverse_full(Matrix::identity(th::Q, 3)) == Matrix::identity(th::Q, 3));
}

TEST_CASE("reversing involutions and factorization") {
    th::Rng rng{31, 0};
    const FieldTag gf5 = FieldTag::prime_field(5);
    for (int t = 0; t < 100; ++t) {
        Matrix A = rng.next_mat(gf5, 3, 4);
        CHECK(reverse_rows(reverse_rows(A)) == A);
        CHECK(reverse_cols(reverse_cols(A)) == A);
        CHECK(reverse_full(A) == reverse_rows(reverse_cols(A)));
        CHECK(reverse_full(A) == reverse_cols(reverse_rows(A)));
    }
}

TEST_CASE("pasting pinned cases") {
    Matrix A = mat({{1, 2}, {3, 4}});
    Matrix B = mat({{5}, {6}});
    CHECK(paste_rows(A, B) == mat({{1, 2, 5}, {3, 4, 6}}));
    CHECK(reverse_rows(paste_rows(A, B)) == paste_rows(reverse_rows(B), reverse_rows(A)));
    CHECK(paste_cols(mat({{1, 2}}), mat({{3, 4}})) == mat({{1, 2}, {3, 4}}));
    CHECK(transpose(paste_cols(mat({{1, 2}}), mat({{3, 4}}))) ==
          paste_rows(transpose(mat({{1, 2}})), transpose(mat({{3, 4}}))));
    CHECK(paste_blocks(mat({{1}}), mat({{2}})) == mat({{1, 0}, {0, 2}}));
    CHECK_THROWS_AS(paste_rows(A, mat({{1, 2}})), DimensionMismatch);
    CHECK_THROWS_AS(paste_cols(A, mat({{1}, {2}})), DimensionMismatch);
}

TEST_CASE("block paste laws") {
    th::Rng rng{32, 0};
    for (std::size_t n : {2u, 3u}) {
        for (int t = 0; t < 50; ++t) {
            Matrix A = rnd_mat(rng, n, n), B = rnd_mat(rng, n, n);
            CHECK(det(paste_blocks(A, B)) == det(A) * det(B));
            CHECK(trace(paste_blocks(A, B)) == trace(A) + trace(B));
        }
    }
}

TEST_CASE("matmul, transpose, trace pinned cases") {
    Matrix A = mat({{1, 2}, {3, 4}});
    CHECK(matmul(A, Matrix::identity(th::Q, 2)) == A);
    CHECK(trace(A) == Scalar::from_int(th::Q, 5));
    th::Rng rng{33, 0};
    Matrix B = rnd_mat(rng, 3, 4);
    CHECK(transpose(transpose(B)) == B);
    CHECK(apply(mat({{0, 1}, {1, 0}}), vec({7, 9})) == vec({9, 7}));
    CHECK_THROWS_AS(matmul(A, mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), DimensionMismatch);
}

TEST_CASE("determinant pinned cases") {
    CHECK(det(mat({{1, 2}, {3, 4}})) == Scalar::from_int(th::Q, -2));
    CHECK(det(reverse_rows(mat({{1, 2}, {3, 4}}))) == Scalar::from_int(th::Q, 2));
    CHECK(det(Matrix(th::Q, 0, 0)) == Scalar::one(th::Q));
    CHECK_THROWS_AS(det(mat({{1, 2}})), DimensionMismatch);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    th::Rng rng{34, 0};
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 40; ++t) {
            Matrix A = rnd_mat(rng, n, n);
            CHECK(det(A) == cofactor_det(A));
        }
    const FieldTag gf7 = FieldTag::prime_field(7);
    for (int t = 0; t < 100; ++t) {
        Matrix A = rng.next_mat(gf7, 4, 4);
        CHECK(det(A) == cofactor_det(A));
    }
}

TEST_CASE("determinant sign under row/column reversal") {
    th::Rng rng{35, 0};
    for (std::size_t n = 2; n <= 6; ++n) {
        const int sign = (n / 2) % 2 == 0 ? 1 : -1;
        const Scalar s = Scalar::from_int(th::Q, sign);
        for (int t = 0; t < 200; ++t) {
            Matrix A = rnd_mat(rng, n, n);
            Scalar d = det(A);
            CHECK(det(reverse_rows(A)) == s * d);
            CHECK(det(reverse_cols(A)) == s * d);
        }
    }
}

TEST_CASE("float determinant uses pivoting") {
    const FieldTag f = FieldTag::float64(1e-9);
    Matrix A(f, 2, 2,
             {Scalar::from_double(f, 0.0), Scalar::from_double(f, 1.0),
              Scalar::from_double(f, 1.0), Scalar::from_double(f, 0.0)});
    CHECK(det(A) == Scalar::from_double(f, -1.0));
}

TEST_CASE("inverse pinned cases") {
    CHECK(inverse(Matrix::identity(th::Q, 3)) == Matrix::identity(th::Q, 3));
    Matrix A = mat({{1, 2}, {3, 4}});
    Matrix Ai = inverse(A);
    CHECK(matmul(A, Ai) == Matrix::identity(th::Q, 2));
    CHECK(inverse(reverse_cols(A)) == reverse_rows(Ai));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), Singular);
    th::Rng rng{36, 0};
    for (int t = 0; t < 50; ++t) {
        Matrix P = rnd_mat(rng, 2, 2), Q = rnd_mat(rng, 2, 2);
        if (det(P).is_zero() || det(Q).is_zero()) continue;
        CHECK(inverse(paste_blocks(P, Q)) == paste_blocks(inverse(P), inverse(Q)));
    }
}

TEST_CASE("rank") {
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix::identity(th::Q, 4)) == 4);
    CHECK(rank(Matrix(th::Q, 2, 3)) == 0);
    CHECK(rank(mat({{1, 2, 3}, {4, 5, 6}})) == 2);
}

TEST_CASE("symmetry predicates") {
    CHECK(is_row_palindromic(mat({{1, 2, 1}, {3, 0, 3}})));
    CHECK_FALSE(is_row_palindromic(mat({{1, 2, 3}})));
    CHECK(is_col_palindromic(mat({{1, 2}, {5, 6}, {1, 2}})));
    CHECK(is_row_antipalindromic(mat({{1, -1}, {2, -2}})));
    CHECK(is_col_antipalindromic(mat({{1, 2}, {-1, -2}})));
    CHECK(is_full_palindromic(mat({{1, 2}, {2, 1}})));
    CHECK(is_full_antipalindromic(mat({{1, 2}, {-2, -1}})));
}

TEST_CASE("symmetry basis dimensions") {
    auto count = [](std::size_t n, std::size_t m, const char* mode) {
        return symmetry_basis(n, m, parse_symmetry_mode(mode), th::Q).size();
    };
    CHECK(count(2, 3, "row-pal") == 4);   // n*ceil(m/2)
    CHECK(count(2, 3, "row-anti") == 2);  // n*floor(m/2)
    CHECK(count(2, 3, "col-pal") == 3);   // ceil(n/2)*m
    CHECK(count(2, 3, "col-anti") == 3);  // floor(n/2)*m
    CHECK(count(2, 2, "pp") == 1);
    CHECK(count(2, 3, "pp") == 2);  // ceil(2/2)*ceil(3/2)
    CHECK(count(2, 3, "pa") == 2);  // floor(2/2)*ceil(3/2)
    CHECK(count(2, 3, "ap") == 1);  // ceil(2/2)*floor(3/2)
    CHECK(count(2, 3, "aa") == 1);  // floor(2/2)*floor(3/2)
    CHECK(count(2, 3, "full-pal") == 3);   // ceil(6/2)
    CHECK(count(2, 3, "full-anti") == 3);  // floor(6/2)
    CHECK(symmetry_basis(2, 2, SymmetryMode::PP, th::Q)[0] == mat({{1, 1}, {1, 1}}));

    // each basis element satisfies its own symmetry; family spans are disjoint by construction
    for (const char* mode : {"row-pal", "row-anti", "col-pal", "col-anti", "pp", "pa", "ap", "aa",
                             "full-pal", "full-anti"}) {
        for (const auto& B : symmetry_basis(3, 4, parse_symmetry_mode(mode), th::Q))
            CHECK(satisfies_symmetry(B, parse_symmetry_mode(mode)));
    }
}

TEST_CASE("quad basis dimensions sum to n*m") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m) {
            std::size_t total = 0;
            for (const char* mode : {"pp", "pa", "ap", "aa"})
                total += symmetry_basis(n, m, parse_symmetry_mode(mode), th::Q).size();
            CHECK(total == n * m);
        }
    // the row-anti/col-pal and row-pal/col-anti corners have the asymmetric dims
    CHECK(symmetry_basis(2, 3, SymmetryMode::PA, th::Q).size() == 1 * 2);
    CHECK(symmetry_basis(3, 2, SymmetryMode::PA, th::Q).size() == 1 * 1);
    CHECK(symmetry_basis(3, 3, SymmetryMode::PA, th::Q).size() == 1 * 2);
    CHECK(symmetry_basis(3, 3, SymmetryMode::AP, th::Q).size() == 2 * 1);
}

TEST_CASE("decompose_rc pinned case") {
    QuadDecomposition q = decompose_rc(mat({{1, 2}, {3, 4}}));
    const FieldTag& Q = th::Q;
    auto half = [&](std::int64_t num, std::int64_t den) {
        return Scalar::from_rational(Rational(num, den));
    };
    Matrix pp(Q, 2, 2, {half(5, 2), half(5, 2), half(5, 2), half(5, 2)});
    Matrix ap(Q, 2, 2, {half(-1, 2), half(1, 2), half(-1, 2), half(1, 2)});
    CHECK(q.pp == pp);
    CHECK(q.pa == mat({{-1, -1}, {1, 1}}));
    CHECK(q.ap == ap);
    CHECK(q.aa.is_zero());
    QuadDecomposition z = decompose_rc(Matrix(Q, 2, 2));
    CHECK(z.pp.is_zero());
    CHECK(z.pa.is_zero());
    CHECK(z.ap.is_zero());
    CHECK(z.aa.is_zero());
}

TEST_CASE("decompose_rc round trips with the right symmetries") {
    th::Rng rng{37, 0};
    for (int t = 0; t < 500; ++t) {
        Matrix A = rnd_mat(rng, 1 + t % 4, 1 + (t / 7) % 4);
        QuadDecomposition q = decompose_rc(A);
        CHECK(q.pp + q.pa + q.ap + q.aa == A);
        CHECK(satisfies_symmetry(q.pp, SymmetryMode::PP));
        CHECK(satisfies_symmetry(q.pa, SymmetryMode::PA));
        CHECK(satisfies_symmetry(q.ap, SymmetryMode::AP));
        CHECK(satisfies_symmetry(q.aa, SymmetryMode::AA));
    }
}

TEST_CASE("quad splitting is unique, exhaustively over GF(3) 2x2") {
    const FieldTag gf3 = FieldTag::prime_field(3);
    for (int code = 0; code < 81; ++code) {
        Matrix A(gf3, 2, 2,
                 {Scalar::from_residue(gf3, code % 3), Scalar::from_residue(gf3, (code / 3) % 3),
                  Scalar::from_residue(gf3, (code / 9) % 3),
                  Scalar::from_residue(gf3, code / 27)});
        QuadDecomposition q = decompose_rc(A);
        CHECK(q.pp + q.pa + q.ap + q.aa == A);
        // a second splitting with the same symmetries would make some
        // difference lie in two distinct corners at once; corners meet in 0
        if (satisfies_symmetry(A, SymmetryMode::PP)) CHECK(q.pp == A);
        if (satisfies_symmetry(A, SymmetryMode::AA)) CHECK(q.aa == A);
    }
}

TEST_CASE("decompose_full pinned case and round trips") {
    auto [pal, anti] = decompose_full(mat({{1, 2}, {3, 4}}));
    auto half = [](std::int64_t num) { return Scalar::from_rational(Rational(num, 2)); };
    CHECK(pal == Matrix(th::Q, 2, 2, {half(5), half(5), half(5), half(5)}));
    CHECK(anti == Matrix(th::Q, 2, 2, {half(-3), half(-1), half(1), half(3)}));
    Matrix P = mat({{1, 2}, {2, 1}});
    auto [p2, a2] = decompose_full(P);
    CHECK(p2 == P);
    CHECK(a2.is_zero());
    th::Rng rng{38, 0};
    for (int t = 0; t < 500; ++t) {
        Matrix A = rnd_mat(rng, 1 + t % 3, 1 + (t / 5) % 4);
        auto [p, a] = decompose_full(A);
        CHECK(p + a == A);
        CHECK(is_full_palindromic(p));
        CHECK(is_full_antipalindromic(a));
    }
}

TEST_CASE("matrix decompositions reject characteristic 2") {
    const FieldTag gf2 = FieldTag::prime_field(2);
    Matrix A = mat({{1, 0}, {0, 1}}, gf2);
    CHECK_THROWS_AS(decompose_rc(A), CharacteristicTwo);
    CHECK_THROWS_AS(decompose_full(A), CharacteristicTwo);
}

TEST_CASE("row reversal is right-multiplication by the exchange pattern") {
    // R_r(AB) = A R_r(B) and R_c(AB) = R_c(A) B
    th::Rng rng{39, 0};
    for (int t = 0; t < 100; ++t) {
        Matrix A = rnd_mat(rng, 2, 3), B = rnd_mat(rng, 3, 4);
        CHECK(reverse_rows(matmul(A, B)) == matmul(A, reverse_rows(B)));
        CHECK(reverse_cols(matmul(A, B)) == matmul(reverse_cols(A), B));
        CHECK(reverse_full(matmul(A, B)) == matmul(reverse_cols(A), reverse_rows(B)));
    }
}

TEST_CASE("to_string") {
    CHECK(mat({{1, 2}, {3, 4}}).to_string() == "1,2;3,4");
}
