#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "revpaste/transform.hpp"

using namespace rp;
using th::vec;

namespace {

// Symbolic polynomials with rational coefficients, ascending powers.  Used
// only here, to expand det(xI - J) independently of the closed form.
using SymPoly = std::vector<Rational>;

SymPoly sym_add(const SymPoly& a, const SymPoly& b) {
    SymPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    if (a.empty() || b.empty()) return {};
    SymPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

SymPoly sym_neg(const SymPoly& a) {
    SymPoly r = a;
    for (auto& c : r) c = -c;
    return r;
}

// cofactor expansion over polynomial entries
SymPoly sym_det(const std::vector<std::vector<SymPoly>>& M) {
    const std::size_t n = M.size();
    if (n == 0) return {Rational(1)};
    if (n == 1) return M[0][0];
    SymPoly acc{Rational(0)};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<SymPoly>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<SymPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(M[r][c]);
            sub.push_back(std::move(row));
        }
        SymPoly term = sym_mul(M[0][j], sym_det(sub));
        acc = sym_add(acc, j % 2 == 0 ? term : sym_neg(term));
    }
    return acc;
}

// det(xI - exchange), the charpoly oracle
SymPoly charpoly_oracle(std::size_t n) {
    std::vector<std::vector<SymPoly>> M(n, std::vector<SymPoly>(n, SymPoly{Rational(0)}));
    for (std::size_t i = 0; i < n; ++i) {
        M[i][i] = SymPoly{Rational(0), Rational(1)};  // x
        M[i][n - 1 - i] = sym_add(M[i][n - 1 - i], SymPoly{Rational(-1)});
    }
    return sym_det(M);
}

}  // namespace

TEST_CASE("exchange matrix pinned cases") {
    CHECK(exchange_matrix(2, th::Q) == th::mat({{0, 1}, {1, 0}}));
    CHECK(exchange_matrix(1, th::Q) == th::mat({{1}}));
    CHECK(exchange_matrix(3, th::Q) == th::mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("exchange matrix involution and determinant sign") {
    for (std::size_t n = 1; n <= 8; ++n) {
        Matrix J = exchange_matrix(n, th::Q);
        CHECK(matmul(J, J) == Matrix::identity(th::Q, n));
        const int sign = (n / 2) % 2 == 0 ? 1 : -1;
        CHECK(det(J) == Scalar::from_int(th::Q, sign));
    }
    // n = 1..6 signs: +1,-1,-1,+1,+1,-1
    CHECK(det(exchange_matrix(4, th::Q)) == Scalar::one(th::Q));
}

TEST_CASE("applying the exchange matrix reverses") {
    th::Rng rng{41, 0};
    for (std::size_t n = 1; n <= 6; ++n) {
        Vector v = rng.next_vec(th::Q, n);
        CHECK(apply(exchange_matrix(n, th::Q), v) == reverse_vector(v));
    }
}

TEST_CASE("permutations") {
    Permutation rev = Permutation::reversal(3);
    CHECK(apply_permutation(rev, vec({1, 2, 3})) == vec({3, 2, 1}));
    CHECK(apply_permutation(Permutation::identity(4), vec({1, 2, 3, 4})) == vec({1, 2, 3, 4}));
    Permutation cyc({2, 3, 1});
    CHECK(apply_permutation(cyc, vec({5, 6, 7})) == vec({6, 7, 5}));
    CHECK(permutation_matrix(rev, th::Q) == exchange_matrix(3, th::Q));
    th::Rng rng{42, 0};
    Vector v = rng.next_vec(th::Q, 3);
    CHECK(apply(permutation_matrix(cyc, th::Q), v) == apply_permutation(cyc, v));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), rp::Error);  // not a bijection
}

TEST_CASE("charpoly pinned cases") {
    CHECK(reversing_char_poly(2, th::Q) == Poly::from_ints(th::Q, {-1, 0, 1}));
    CHECK(reversing_char_poly(3, th::Q) == Poly::from_ints(th::Q, {1, -1, -1, 1}));
    CHECK(reversing_char_poly(1, th::Q) == Poly::from_ints(th::Q, {-1, 1}));
}

TEST_CASE("charpoly agrees with the symbolic determinant oracle") {
    for (std::size_t n = 1; n <= 8; ++n) {
        Poly P = reversing_char_poly(n, th::Q);
        SymPoly oracle = charpoly_oracle(n);
        REQUIRE(P.ambient() == n);
        REQUIRE(oracle.size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(P.coeff(k) == Scalar::from_rational(oracle[k]));
    }
}

TEST_CASE("minpoly annihilates the exchange matrix and divides the charpoly") {
    CHECK(reversing_min_poly(5, th::Q) == Poly::from_ints(th::Q, {-1, 0, 1}));
    CHECK(reversing_min_poly(1, th::Q) == Poly::from_ints(th::Q, {-1, 1}));
    for (std::size_t n = 2; n <= 8; ++n) {
        CHECK(reversing_min_poly(n, th::Q) == Poly::from_ints(th::Q, {-1, 0, 1}));
        Matrix J = exchange_matrix(n, th::Q);
        // Q(J) = J^2 - I = 0
        Matrix val = matmul(J, J) - Matrix::identity(th::Q, n);
        CHECK(val.is_zero());
        // Q | P: long division of the charpoly by x^2 - 1 leaves remainder 0
        SymPoly rem = charpoly_oracle(n);
        for (std::size_t d = rem.size(); d-- > 2;) {
            Rational c = rem[d];
            rem[d] = 0;
            rem[d - 2] += c;
        }
        CHECK(rem[0] == 0);
        CHECK(rem[1] == 0);
    }
}

TEST_CASE("eigenspace bases") {
    CHECK(eigenspace_basis(4, +1, th::Q).size() == 2);
    CHECK(eigenspace_basis(4, -1, th::Q).size() == 2);
    auto neg3 = eigenspace_basis(3, -1, th::Q);
    REQUIRE(neg3.size() == 1);
    CHECK(neg3[0] == vec({1, 0, -1}));
    for (std::size_t n = 1; n <= 6; ++n) {
        Matrix J = exchange_matrix(n, th::Q);
        for (const Vector& b : eigenspace_basis(n, +1, th::Q)) CHECK(apply(J, b) == b);
        for (const Vector& b : eigenspace_basis(n, -1, th::Q)) CHECK(apply(J, b) == -b);
    }
}

TEST_CASE("projections") {
    th::Rng rng{43, 0};
    for (int t = 0; t < 200; ++t) {
        Vector v = rng.next_vec(th::Q, 1 + t % 5);
        Vector p = palindromicing(v), a = antipalindromicing(v);
        CHECK(p + a == v);
        CHECK(is_palindromic(p));
        CHECK(is_antipalindromic(a));
        CHECK(palindromicing(p) == p);    // idempotent
        CHECK(palindromicing(a) == Vector::zero(th::Q, a.size()));
    }
    // the projection is not injective: any antipalindromic vector dies
    CHECK(palindromicing(vec({1, -1})) == Vector::zero(th::Q, 2));
}
