#include "revpaste/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "revpaste/crossn.hpp"
#include "revpaste/json_io.hpp"
#include "revpaste/poly.hpp"
#include "revpaste/transform.hpp"

namespace rp {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {

Vector as_vec(const Matrix& M) { return M.row(0); }
Scalar as_sc(const Matrix& M) { return M.at(0, 0); }

// Horner evaluation of an ascending-coefficient polynomial at a square matrix.
Matrix eval_poly_at(const Poly& P, const Matrix& A) {
    const std::size_t n = A.rows();
    Matrix acc(A.tag(), n, n);
    for (std::size_t k = P.ambient() + 1; k-- > 0;) {
        acc = matmul(acc, A);
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) = acc.at(i, i) + P.coeff(k);
    }
    return acc;
}

// remainder of a / b for monic b, on ascending coefficient vectors
std::vector<Scalar> poly_rem(std::vector<Scalar> a, const std::vector<Scalar>& b,
                             const FieldTag& tag) {
    while (a.size() >= b.size()) {
        Scalar lead = a.back();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[a.size() - b.size() + i] = a[a.size() - b.size() + i] - lead * b[i];
        a.pop_back();
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

Matrix stack_rows(const std::vector<Vector>& rows) { return Matrix::from_rows(rows); }

std::vector<Shape> no_inputs(std::size_t, std::size_t) { return {}; }

bool objects_equal(const Matrix& A, const Matrix& B) { return A == B; }

std::vector<Law> build_catalog() {
    std::vector<Law> laws;
    auto add = [&laws](Law law) { laws.push_back(std::move(law)); };

    // ---- vectors -----------------------------------------------------------

    add({"V1", "V-involution", "reverse(reverse(v)) = v", LawClass::Proved, 5, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]);
             return reverse_vector(reverse_vector(v)) == v;
         }});

    add({"V2", "V-linearity", "reverse(a*v + b*w) = a*reverse(v) + b*reverse(w)",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) {
             return std::vector<Shape>{{1, 1}, {1, 1}, {1, n}, {1, n}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Scalar a = as_sc(o[0]), b = as_sc(o[1]);
             Vector v = as_vec(o[2]), w = as_vec(o[3]);
             return reverse_vector(v.scaled(a) + w.scaled(b)) ==
                    reverse_vector(v).scaled(a) + reverse_vector(w).scaled(b);
         }});

    add({"V3", "V-dot-invariance", "dot(v, w) = dot(reverse(v), reverse(w))",
         LawClass::Proved, 5, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n}, {1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]), w = as_vec(o[1]);
             return dot(v, w) == dot(reverse_vector(v), reverse_vector(w));
         }});

    add({"V4", "V-cross-antihom", "reverse(cross3(v, w)) = cross3(reverse(w), reverse(v))",
         LawClass::Proved, 3, 0,
         [](std::size_t, std::size_t) { return std::vector<Shape>{{1, 3}, {1, 3}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]), w = as_vec(o[1]);
             return reverse_vector(cross3(v, w)) == cross3(reverse_vector(w), reverse_vector(v));
         }});

    add({"V5", "V-reverse-paste", "reverse(v+w pasted) = reverse(w) pasted with reverse(v)",
         LawClass::Proved, 3, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{1, n}, {1, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]), w = as_vec(o[1]);
             return reverse_vector(paste_vectors(v, w)) ==
                    paste_vectors(reverse_vector(w), reverse_vector(v));
         }});

    add({"V6", "V-paste-assoc", "(u|v)|w = u|(v|w)", LawClass::Proved, 3, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{1, n}, {1, m}, {1, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector u = as_vec(o[0]), v = as_vec(o[1]), w = as_vec(o[2]);
             return paste_vectors(paste_vectors(u, v), w) == paste_vectors(u, paste_vectors(v, w));
         }});

    add({"V7", "V-pal-closure", "a*v + b*w palindromic when v, w palindromic",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) {
             return std::vector<Shape>{{1, 1}, {1, 1}, {1, n}, {1, n}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[2]), w = as_vec(o[3]);
             if (!is_palindromic(v) || !is_palindromic(w)) return true;
             return is_palindromic(v.scaled(as_sc(o[0])) + w.scaled(as_sc(o[1])));
         }});

    add({"V8", "V-anti-closure", "a*v + b*w antipalindromic when v, w antipalindromic",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) {
             return std::vector<Shape>{{1, 1}, {1, 1}, {1, n}, {1, n}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[2]), w = as_vec(o[3]);
             if (!is_antipalindromic(v) || !is_antipalindromic(w)) return true;
             return is_antipalindromic(v.scaled(as_sc(o[0])) + w.scaled(as_sc(o[1])));
         }});

    add({"V9", "V-cross-symmetry", "pal x pal anti; anti x anti = 0; pal x anti pal",
         LawClass::Proved, 3, 0,
         [](std::size_t, std::size_t) { return std::vector<Shape>{{1, 3}, {1, 3}}; },
         [](const std::vector<Matrix>& o, const FieldTag& tag, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]), w = as_vec(o[1]);
             Vector c = cross3(v, w);
             const bool vp = is_palindromic(v), va = is_antipalindromic(v);
             const bool wp = is_palindromic(w), wa = is_antipalindromic(w);
             if (vp && wp && !is_antipalindromic(c)) return false;
             if (va && wa && c != Vector::zero(tag, 3)) return false;
             if (((vp && wa) || (va && wp)) && !is_palindromic(c)) return false;
             return true;
         }});

    add({"V10", "V-decompose", "decompose splits v into its unique pal + anti parts",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n}, {1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]), w = as_vec(o[1]);
             PalAntiPair d = decompose(v);
             if (!is_palindromic(d.pal) || !is_antipalindromic(d.anti)) return false;
             if (d.pal + d.anti != v) return false;
             if (is_palindromic(v) && is_antipalindromic(w)) {
                 PalAntiPair u = decompose(v + w);
                 if (u.pal != v || u.anti != w) return false;
             }
             return true;
         }});

    // ---- transform ---------------------------------------------------------

    add({"T1", "T-exchange-involution", "exchange matrix squared is the identity",
         LawClass::Proved, 5, 0, no_inputs,
         [](const std::vector<Matrix>&, const FieldTag& tag, std::size_t n, std::size_t) {
             Matrix J = exchange_matrix(n, tag);
             return matmul(J, J) == Matrix::identity(tag, n);
         }});

    add({"T2", "T-charpoly", "char poly is monic of degree n and annihilates the exchange matrix",
         LawClass::Proved, 5, 0, no_inputs,
         [](const std::vector<Matrix>&, const FieldTag& tag, std::size_t n, std::size_t) {
             Poly P = reversing_char_poly(n, tag);
             if (P.ambient() != n || P.coeff(n) != Scalar::one(tag)) return false;
             return eval_poly_at(P, exchange_matrix(n, tag)).is_zero();
         }});

    add({"T3", "T-minpoly", "min poly annihilates the exchange matrix and divides the char poly",
         LawClass::Proved, 5, 0, no_inputs,
         [](const std::vector<Matrix>&, const FieldTag& tag, std::size_t n, std::size_t) {
             Poly Q = reversing_min_poly(n, tag);
             if (!eval_poly_at(Q, exchange_matrix(n, tag)).is_zero()) return false;
             Poly P = reversing_char_poly(n, tag);
             return poly_rem(P.coeffs().entries(), Q.coeffs().entries(), tag).empty();
         }});

    add({"T4", "T-eigenspaces", "eigenspace bases have ranks ceil(n/2), floor(n/2) summing to n",
         LawClass::Proved, 5, 0, no_inputs,
         [](const std::vector<Matrix>&, const FieldTag& tag, std::size_t n, std::size_t) {
             Matrix J = exchange_matrix(n, tag);
             auto plus = eigenspace_basis(n, +1, tag);
             auto minus = eigenspace_basis(n, -1, tag);
             for (const Vector& b : plus)
                 if (apply(J, b) != b) return false;
             for (const Vector& b : minus)
                 if (apply(J, b) != -b) return false;
             if (plus.size() != (n + 1) / 2 || minus.size() != n / 2) return false;
             if (rank(stack_rows(plus)) != plus.size()) return false;
             if (!minus.empty() && rank(stack_rows(minus)) != minus.size()) return false;
             return plus.size() + minus.size() == n;
         }});

    add({"T5", "T-projectors", "(id+R)/2 and (id-R)/2 are complementary projections",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag& tag, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]);
             Vector p = palindromicing(v), a = antipalindromicing(v);
             if (p + a != v) return false;
             if (palindromicing(p) != p || antipalindromicing(a) != a) return false;
             if (palindromicing(a) != Vector::zero(tag, v.size())) return false;
             return is_palindromic(p) && is_antipalindromic(a);
         }});

    // ---- polynomials -------------------------------------------------------

    add({"P1", "P-involution", "reverse(reverse(P)) = P", LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n + 1}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             Poly P(n, as_vec(o[0]));
             return reverse_poly(reverse_poly(P)) == P;
         }});

    add({"P2", "P-reverse-paste", "reverse(P|Q) = reverse(Q)|reverse(P)", LawClass::Proved, 2, 1,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{1, n + 1}, {1, m + 1}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t m) {
             Poly P(n, as_vec(o[0])), Q(m, as_vec(o[1]));
             return reverse_poly(paste_poly(P, Q)) == paste_poly(reverse_poly(Q), reverse_poly(P));
         }});

    add({"P3", "P-paste-assoc", "(P|Q)|S = P|(Q|S)", LawClass::Proved, 2, 1,
         [](std::size_t n, std::size_t m) {
             return std::vector<Shape>{{1, n + 1}, {1, m + 1}, {1, 2}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t m) {
             Poly P(n, as_vec(o[0])), Q(m, as_vec(o[1])), S(1, as_vec(o[2]));
             return paste_poly(paste_poly(P, Q), S) == paste_poly(P, paste_poly(Q, S));
         }});

    add({"P4", "P-linearity", "reverse(a*P + b*Q) = a*reverse(P) + b*reverse(Q)",
         LawClass::Proved, 3, 0,
         [](std::size_t n, std::size_t) {
             return std::vector<Shape>{{1, 1}, {1, 1}, {1, n + 1}, {1, n + 1}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             Scalar a = as_sc(o[0]), b = as_sc(o[1]);
             Poly P(n, as_vec(o[2])), Q(n, as_vec(o[3]));
             return reverse_poly(P.scaled(a) + Q.scaled(b)) ==
                    reverse_poly(P).scaled(a) + reverse_poly(Q).scaled(b);
         }});

    add({"P5", "P-closure", "sums of (anti)palindromic polynomials keep the symmetry",
         LawClass::Proved, 3, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n + 1}, {1, n + 1}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             Poly P(n, as_vec(o[0])), Q(n, as_vec(o[1]));
             if (is_palindromic(P) && is_palindromic(Q) && !is_palindromic(P + Q)) return false;
             if (is_antipalindromic(P) && is_antipalindromic(Q) && !is_antipalindromic(P + Q))
                 return false;
             return true;
         }});

    add({"P6", "P-paste-ambient", "P|Q lives at ambient n+m+1 with concatenated coefficients",
         LawClass::Proved, 2, 1,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{1, n + 1}, {1, m + 1}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t m) {
             Poly P(n, as_vec(o[0])), Q(m, as_vec(o[1]));
             Poly Z = paste_poly(P, Q);
             return Z.ambient() == n + m + 1 &&
                    Z.coeffs() == paste_vectors(P.coeffs(), Q.coeffs());
         }});

    add({"P7", "P-decompose", "decompose_poly splits P into its unique pal + anti parts",
         LawClass::Proved, 3, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n + 1}, {1, n + 1}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             Poly P(n, as_vec(o[0])), W(n, as_vec(o[1]));
             auto [pal, anti] = decompose_poly(P);
             if (!is_palindromic(pal) || !is_antipalindromic(anti)) return false;
             if (pal + anti != P) return false;
             if (is_palindromic(P) && is_antipalindromic(W)) {
                 auto [p2, a2] = decompose_poly(P + W);
                 if (p2 != P || a2 != W) return false;
             }
             return true;
         }});

    // ---- matrices ----------------------------------------------------------

    add({"M1", "M-rowrev-involution", "reverse_rows is an involution", LawClass::Proved, 2, 3,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_rows(reverse_rows(o[0])) == o[0];
         }});

    add({"M2", "M-colrev-involution", "reverse_cols is an involution", LawClass::Proved, 2, 3,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_cols(reverse_cols(o[0])) == o[0];
         }});

    add({"M3", "M-full-factorizes", "reverse_full = reverse_rows o reverse_cols, both orders",
         LawClass::Proved, 2, 3,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_full(o[0]) == reverse_rows(reverse_cols(o[0])) &&
                    reverse_full(o[0]) == reverse_cols(reverse_rows(o[0]));
         }});

    add({"M4", "M-rowrev-paste", "reverse_rows(A|B) = reverse_rows(B)|reverse_rows(A)",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {n, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_rows(paste_rows(o[0], o[1])) ==
                    paste_rows(reverse_rows(o[1]), reverse_rows(o[0]));
         }});

    add({"M5", "M-colrev-paste", "reverse_cols of stacked = stacked reversed in swapped order",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {2, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_cols(paste_cols(o[0], o[1])) ==
                    paste_cols(reverse_cols(o[1]), reverse_cols(o[0]));
         }});

    add({"M6", "M-rowpaste-assoc", "pasting by rows is associative", LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) {
             return std::vector<Shape>{{n, m}, {n, 1}, {n, 2}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return paste_rows(paste_rows(o[0], o[1]), o[2]) ==
                    paste_rows(o[0], paste_rows(o[1], o[2]));
         }});

    add({"M7", "M-colpaste-assoc", "pasting by columns is associative", LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) {
             return std::vector<Shape>{{n, m}, {1, m}, {2, m}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return paste_cols(paste_cols(o[0], o[1]), o[2]) ==
                    paste_cols(o[0], paste_cols(o[1], o[2]));
         }});

    add({"M8", "M-rev-linearity", "row/col/full reversing are linear", LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) {
             return std::vector<Shape>{{1, 1}, {1, 1}, {n, m}, {n, m}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Scalar a = as_sc(o[0]), b = as_sc(o[1]);
             Matrix Z = o[2].scaled(a) + o[3].scaled(b);
             if (reverse_rows(Z) != reverse_rows(o[2]).scaled(a) + reverse_rows(o[3]).scaled(b))
                 return false;
             if (reverse_cols(Z) != reverse_cols(o[2]).scaled(a) + reverse_cols(o[3]).scaled(b))
                 return false;
             return reverse_full(Z) == reverse_full(o[2]).scaled(a) + reverse_full(o[3]).scaled(b);
         }});

    add({"M9", "M-transpose-exchange", "transpose swaps row and column reversing",
         LawClass::Proved, 2, 3,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             const Matrix& A = o[0];
             if (transpose(reverse_rows(A)) != reverse_cols(transpose(A))) return false;
             if (transpose(reverse_cols(A)) != reverse_rows(transpose(A))) return false;
             return reverse_full(transpose(A)) == transpose(reverse_full(A));
         }});

    add({"M10", "M-transpose-paste", "transpose turns column pasting into row pasting",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {2, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             if (transpose(paste_cols(o[0], o[1])) != paste_rows(transpose(o[0]), transpose(o[1])))
                 return false;
             return transpose(paste_rows(transpose(o[0]), transpose(o[1]))) ==
                    paste_cols(o[0], o[1]);
         }});

    add({"M11", "M-product-partial", "reverse_rows(AB) = A reverse_rows(B); dually for columns",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {m, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Matrix AB = matmul(o[0], o[1]);
             if (reverse_rows(AB) != matmul(o[0], reverse_rows(o[1]))) return false;
             return reverse_cols(AB) == matmul(reverse_cols(o[0]), o[1]);
         }});

    add({"M12", "M-product-full", "reverse_full(AB) = reverse_full(A) reverse_full(B)",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {m, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_full(matmul(o[0], o[1])) ==
                    matmul(reverse_full(o[0]), reverse_full(o[1]));
         }});

    add({"M13", "M-det-sign", "det of row- or col-reversed A is (-1)^floor(n/2) det A",
         LawClass::Proved, 3, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             Scalar d = det(o[0]);
             if ((n / 2) % 2 == 1) d = -d;
             return det(reverse_rows(o[0])) == d && det(reverse_cols(o[0])) == d;
         }});

    add({"M14", "M-det-trace-full", "full reversing preserves determinant and trace",
         LawClass::Proved, 3, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Matrix R = reverse_full(o[0]);
             return det(R) == det(o[0]) && trace(R) == trace(o[0]);
         }});

    add({"M15", "M-inverse-laws", "reversing commutes with inversion, swapping rows and columns",
         LawClass::Proved, 2, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             if (det(o[0]).is_zero()) return true;
             Matrix inv = inverse(o[0]);
             if (inverse(reverse_cols(o[0])) != reverse_rows(inv)) return false;
             if (inverse(reverse_rows(o[0])) != reverse_cols(inv)) return false;
             return inverse(reverse_full(o[0])) == reverse_full(inv);
         }});

    add({"M16", "M-pal-product", "row symmetry of B (col symmetry of A) transfers to AB",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {m, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Matrix AB = matmul(o[0], o[1]);
             if (is_row_palindromic(o[1]) && !is_row_palindromic(AB)) return false;
             if (is_row_antipalindromic(o[1]) && !is_row_antipalindromic(AB)) return false;
             if (is_col_palindromic(o[0]) && !is_col_palindromic(AB)) return false;
             if (is_col_antipalindromic(o[0]) && !is_col_antipalindromic(AB)) return false;
             return true;
         }});

    add({"M17", "M-pal-product-converse-rank",
         "symmetry of AB forces it on the factor, given full rank of the other factor",
         LawClass::Conditional, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {m, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             const Matrix& A = o[0];
             const Matrix& B = o[1];
             Matrix AB = matmul(A, B);
             if (AB.is_zero()) return true;
             if (rank(A) == A.cols()) {
                 if (is_row_palindromic(AB) && !is_row_palindromic(B)) return false;
                 if (is_row_antipalindromic(AB) && !is_row_antipalindromic(B)) return false;
             }
             if (rank(B) == B.rows()) {
                 if (is_col_palindromic(AB) && !is_col_palindromic(A)) return false;
                 if (is_col_antipalindromic(AB) && !is_col_antipalindromic(A)) return false;
             }
             return true;
         }});

    add({"M18", "M-full-symmetry-product", "full symmetry multiplies with signs: p*p=p, a*a=p, p*a=a",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {m, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Matrix AB = matmul(o[0], o[1]);
             const bool ap = is_full_palindromic(o[0]), aa = is_full_antipalindromic(o[0]);
             const bool bp = is_full_palindromic(o[1]), ba = is_full_antipalindromic(o[1]);
             if (ap && bp && !is_full_palindromic(AB)) return false;
             if (aa && ba && !is_full_palindromic(AB)) return false;
             if (((ap && ba) || (aa && bp)) && !is_full_antipalindromic(AB)) return false;
             return true;
         }});

    add({"M19", "M-quad-decompose", "the four row/column symmetry components reconstruct A",
         LawClass::Proved, 2, 3,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             QuadDecomposition q = decompose_rc(o[0]);
             if (!satisfies_symmetry(q.pp, SymmetryMode::PP)) return false;
             if (!satisfies_symmetry(q.pa, SymmetryMode::PA)) return false;
             if (!satisfies_symmetry(q.ap, SymmetryMode::AP)) return false;
             if (!satisfies_symmetry(q.aa, SymmetryMode::AA)) return false;
             return q.pp + q.pa + q.ap + q.aa == o[0];
         }});

    add({"M20", "M-full-decompose", "matrix-as-vector decomposition reconstructs A uniquely",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {n, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             auto [pal, anti] = decompose_full(o[0]);
             if (!is_full_palindromic(pal) || !is_full_antipalindromic(anti)) return false;
             if (pal + anti != o[0]) return false;
             if (is_full_palindromic(o[0]) && is_full_antipalindromic(o[1])) {
                 auto [p2, a2] = decompose_full(o[0] + o[1]);
                 if (p2 != o[0] || a2 != o[1]) return false;
             }
             return true;
         }});

    // ---- generalized cross product ----------------------------------------

    add({"X1", "X-cross3-agreement", "the 2-ary product in K^3 is the classical cross product",
         LawClass::Proved, 3, 0,
         [](std::size_t, std::size_t) { return std::vector<Shape>{{1, 3}, {1, 3}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]), w = as_vec(o[1]);
             return generalized_cross({v, w}) == cross3(v, w);
         }});

    add({"X2", "X-minor-reversal",
         "deleting column k of the row-reversed matrix reverses the (n-k+1)-minor",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n - 1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             Matrix R = reverse_rows(o[0]);
             for (std::size_t k = 1; k <= n; ++k)
                 if (minor_drop_col(R, k) != reverse_rows(minor_drop_col(o[0], n - k + 1)))
                     return false;
             return true;
         }});

    add({"X3", "X-reversal-sign",
         "product of row-reversed inputs is (-1)^ceil(3n/2) times the reversed product",
         LawClass::Proved, 3, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n - 1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t n, std::size_t) {
             std::vector<Vector> rows, rev_rows;
             for (std::size_t i = 0; i + 1 < n; ++i) {
                 rows.push_back(o[0].row(i));
                 rev_rows.push_back(reverse_vector(o[0].row(i)));
             }
             Vector lhs = generalized_cross(rev_rows);
             Vector rhs = reverse_vector(generalized_cross(rows));
             if (cross_reversal_sign(n) < 0) rhs = -rhs;
             return lhs == rhs;
         }});

    add({"X4", "X-vanishing", "the product of n-1 all-pal or all-anti rows vanishes for n >= 4",
         LawClass::Proved, 4, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n - 1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag& tag, std::size_t n, std::size_t) {
             if (n < 4) return true;
             if (!is_row_palindromic(o[0]) && !is_row_antipalindromic(o[0])) return true;
             std::vector<Vector> rows;
             for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(o[0].row(i));
             return generalized_cross(rows) == Vector::zero(tag, n);
         }});

    // ---- pasting by blocks -------------------------------------------------

    add({"B1", "B-reversal", "reverse_full(A diag B) = reverse_full(B) diag reverse_full(A)",
         LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {2, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return reverse_full(paste_blocks(o[0], o[1])) ==
                    paste_blocks(reverse_full(o[1]), reverse_full(o[0]));
         }});

    add({"B2", "B-assoc", "block pasting is associative", LawClass::Proved, 1, 2,
         [](std::size_t n, std::size_t m) {
             return std::vector<Shape>{{n, m}, {2, 1}, {1, 1}};
         },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return paste_blocks(paste_blocks(o[0], o[1]), o[2]) ==
                    paste_blocks(o[0], paste_blocks(o[1], o[2]));
         }});

    add({"B3", "B-transpose", "(A diag B)^T = A^T diag B^T", LawClass::Proved, 2, 2,
         [](std::size_t n, std::size_t m) { return std::vector<Shape>{{n, m}, {2, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return transpose(paste_blocks(o[0], o[1])) ==
                    paste_blocks(transpose(o[0]), transpose(o[1]));
         }});

    add({"B4", "B-det", "det(A diag B) = det A det B", LawClass::Proved, 2, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n, n}, {2, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return det(paste_blocks(o[0], o[1])) == det(o[0]) * det(o[1]);
         }});

    add({"B5", "B-trace", "Tr(A diag B) = Tr A + Tr B", LawClass::Proved, 2, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n, n}, {2, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             return trace(paste_blocks(o[0], o[1])) == trace(o[0]) + trace(o[1]);
         }});

    add({"B6", "B-inverse", "(A diag B)^{-1} = A^{-1} diag B^{-1} for invertible blocks",
         LawClass::Proved, 2, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{n, n}, {2, 2}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             if (det(o[0]).is_zero() || det(o[1]).is_zero()) return true;
             return inverse(paste_blocks(o[0], o[1])) ==
                    paste_blocks(inverse(o[0]), inverse(o[1]));
         }});

    // ---- claims refuted as stated -----------------------------------------

    add({"R1", "M-pal-product-converse",
         "claim: AB nonzero and row-palindromic forces B row-palindromic (no rank hypothesis)",
         LawClass::Refuted, 0, 2,
         [](std::size_t, std::size_t m) { return std::vector<Shape>{{1, m}, {m, m}}; },
         [](const std::vector<Matrix>& o, const FieldTag&, std::size_t, std::size_t) {
             Matrix AB = matmul(o[0], o[1]);
             if (AB.is_zero() || !is_row_palindromic(AB)) return true;
             return is_row_palindromic(o[1]);
         }});

    add({"R2", "T-fp-injective",
         "claim: the palindromicing projection has trivial kernel",
         LawClass::Refuted, 2, 0,
         [](std::size_t n, std::size_t) { return std::vector<Shape>{{1, n}}; },
         [](const std::vector<Matrix>& o, const FieldTag& tag, std::size_t, std::size_t) {
             Vector v = as_vec(o[0]);
             if (palindromicing(v) != Vector::zero(tag, v.size())) return true;
             return v == Vector::zero(tag, v.size());
         }});

    return laws;
}

struct ResolvedDomain {
    DomainSpec domain;
    std::vector<Shape> shapes;
    std::size_t slots = 0;
};

ResolvedDomain resolve(const Law& law, const DomainSpec& domain) {
    if (!domain.field.is_exact()) throw Error("verifier domains must use exact fields");
    ResolvedDomain r;
    r.domain = domain;
    if (r.domain.n == 0) r.domain.n = law.default_n;
    if (r.domain.m == 0) r.domain.m = law.default_m;
    r.shapes = law.shapes(r.domain.n, r.domain.m);
    for (const Shape& s : r.shapes) r.slots += s.rows * s.cols;
    return r;
}

std::vector<Matrix> build_objects(const std::vector<Shape>& shapes, const FieldTag& tag,
                                  const std::function<Scalar()>& next) {
    std::vector<Matrix> objs;
    objs.reserve(shapes.size());
    for (const Shape& s : shapes) {
        std::vector<Scalar> e;
        e.reserve(s.rows * s.cols);
        for (std::size_t i = 0; i < s.rows * s.cols; ++i) e.push_back(next());
        objs.emplace_back(tag, s.rows, s.cols, std::move(e));
    }
    return objs;
}

json witness_json(const std::vector<Matrix>& objs) {
    json arr = json::array();
    for (const Matrix& M : objs) arr.push_back(to_json(M));
    return arr;
}

Scalar random_scalar(const FieldTag& tag, std::uint64_t seed, std::uint64_t& counter) {
    const std::uint64_t v = splitmix64(seed + counter++);
    if (tag.kind() == FieldKind::PrimeField)
        return Scalar::from_residue(tag, static_cast<std::int64_t>(v % tag.modulus()));
    const std::int64_t num = static_cast<std::int64_t>(v % 19) - 9;
    const std::int64_t den = static_cast<std::int64_t>((v >> 32) % 9) + 1;
    return Scalar::from_rational(Rational(num, den));
}

// Runs the case sweep; on failure fills witness/cases and stops.
LawReport sweep(const Law& law, const ResolvedDomain& r) {
    LawReport report;
    report.law = law.id;
    report.domain = r.domain;
    const FieldTag& tag = r.domain.field;

    auto run_case = [&](const std::function<Scalar()>& next) -> bool {
        std::vector<Matrix> objs = build_objects(r.shapes, tag, next);
        ++report.cases_checked;
        if (!law.holds(objs, tag, r.domain.n, r.domain.m)) {
            report.status = LawStatus::Fail;
            report.witness = witness_json(objs);
            return false;
        }
        return true;
    };

    try {
        if (r.slots == 0) {
            std::function<Scalar()> none = []() -> Scalar { throw Error("no slots"); };
            run_case(none);
        } else if (r.domain.strategy == DomainSpec::Strategy::Exhaustive) {
            if (tag.kind() != FieldKind::PrimeField)
                throw Error("exhaustive strategy requires a prime field");
            const std::uint64_t p = static_cast<std::uint64_t>(tag.modulus());
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < r.slots; ++i) {
                if (total > r.domain.budget / p)
                    throw BudgetExceeded(std::to_string(r.slots) + " slots over GF(" +
                                         std::to_string(p) + ")");
                total *= p;
            }
            std::vector<std::int64_t> digits(r.slots, 0);
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                std::size_t pos = 0;
                auto next = [&]() { return Scalar::from_residue(tag, digits[pos++]); };
                if (!run_case(next)) break;
                // increment least-significant-last so tuples appear in
                // lexicographic order
                for (std::size_t d = r.slots; d-- > 0;) {
                    if (++digits[d] < static_cast<std::int64_t>(p)) break;
                    digits[d] = 0;
                }
            }
        } else {
            std::uint64_t counter = 0;
            for (std::uint64_t t = 0; t < r.domain.trials; ++t) {
                auto next = [&]() { return random_scalar(tag, r.domain.seed, counter); };
                if (!run_case(next)) break;
            }
        }
    } catch (const CharacteristicTwo&) {
        report.status = LawStatus::Skipped;
        report.skip_reason = "characteristic 2: decomposition undefined";
        report.witness.reset();
        return report;
    }

    if (report.status != LawStatus::Fail) report.status = LawStatus::Pass;
    return report;
}

}  // namespace

const std::vector<Law>& law_catalog() {
    static const std::vector<Law> catalog = build_catalog();
    return catalog;
}

const Law& find_law(const std::string& id_or_alias) {
    for (const Law& law : law_catalog())
        if (law.id == id_or_alias || law.alias == id_or_alias) return law;
    throw UnknownLaw(id_or_alias);
}

LawReport check_law(const std::string& id_or_alias, const DomainSpec& domain) {
    const Law& law = find_law(id_or_alias);
    LawReport report = sweep(law, resolve(law, domain));
    // Random sampling can only ever exhibit a counterexample; absence of one
    // is not evidence that a refuted claim holds.
    if (law.cls == LawClass::Refuted && report.status == LawStatus::Pass &&
        report.domain.strategy == DomainSpec::Strategy::Random) {
        report.status = LawStatus::Skipped;
        report.skip_reason = "no counterexample in random sample; use exhaustive search";
    }
    return report;
}

std::optional<json> find_counterexample(const std::string& id_or_alias, const DomainSpec& bounds) {
    LawReport report = check_law(id_or_alias, bounds);
    return report.witness;
}

std::vector<LawReport> run_suite(const DomainSpec& defaults) {
    std::vector<LawReport> reports;
    for (const Law& law : law_catalog()) {
        DomainSpec d = defaults;
        d.n = 0;  // per-law defaults
        d.m = 0;
        d.strategy = defaults.field.kind() == FieldKind::PrimeField
                         ? DomainSpec::Strategy::Exhaustive
                         : DomainSpec::Strategy::Random;
        reports.push_back(check_law(law.id, d));
    }
    return reports;
}

bool suite_ok(const std::vector<LawReport>& reports) {
    for (const LawReport& r : reports) {
        const Law& law = find_law(r.law);
        if (r.status == LawStatus::Skipped) continue;  // explicitly flagged, not a verdict
        if (law.cls == LawClass::Refuted) {
            if (r.status != LawStatus::Fail) return false;
        } else {
            if (r.status != LawStatus::Pass) return false;
        }
    }
    return true;
}

namespace {

std::string status_name(LawStatus s) {
    switch (s) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "fail";
        case LawStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string class_name(LawClass c) {
    switch (c) {
        case LawClass::Proved: return "proved";
        case LawClass::Refuted: return "refuted";
        case LawClass::Conditional: return "conditional";
    }
    return "?";
}

}  // namespace

json report_to_json(const LawReport& r) {
    json domain{{"field", r.domain.field.to_string()},
                {"n", r.domain.n},
                {"m", r.domain.m},
                {"strategy",
                 r.domain.strategy == DomainSpec::Strategy::Exhaustive ? "exhaustive" : "random"},
                {"trials", r.domain.trials},
                {"seed", r.domain.seed}};
    json out{{"law", r.law},
             {"domain", std::move(domain)},
             {"cases_checked", r.cases_checked},
             {"status", status_name(r.status)}};
    if (!r.skip_reason.empty()) out["reason"] = r.skip_reason;
    if (r.witness) out["witness"] = *r.witness;
    return out;
}

std::string summary_table(const std::vector<LawReport>& reports) {
    std::ostringstream os;
    std::size_t expected = 0, unexpected = 0;
    for (const LawReport& r : reports) {
        const Law& law = find_law(r.law);
        const bool as_expected =
            r.status == LawStatus::Skipped ||
            (law.cls == LawClass::Refuted ? r.status == LawStatus::Fail
                                          : r.status == LawStatus::Pass);
        (as_expected ? expected : unexpected)++;
        os << (as_expected ? "ok  " : "BAD ") << r.law;
        if (!law.alias.empty()) os << " (" << law.alias << ")";
        os << "  [" << class_name(law.cls) << "]  " << status_name(r.status) << "  "
           << r.cases_checked << " cases\n";
    }
    os << expected << " as expected, " << unexpected << " unexpected\n";
    return os.str();
}

}  // namespace rp
