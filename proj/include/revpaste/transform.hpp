#pragma once

#include "revpaste/matrix.hpp"
#include "revpaste/poly.hpp"

namespace rp {

/// Bijection of {1,...,n}, stored as the image sequence sigma(1..n).
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);  // 1-based images

    static Permutation identity(std::size_t n);
    static Permutation reversal(std::size_t n);

    std::size_t size() const { return images_.size(); }
    std::size_t image(std::size_t i) const { return images_[i - 1]; }  // 1-based
    const std::vector<std::size_t>& images() const { return images_; }

private:
    std::vector<std::size_t> images_;
};

// Anti-diagonal matrix; left-multiplying a column vector reverses it.
Matrix exchange_matrix(std::size_t n, const FieldTag& tag);

// (v_{sigma(1)}, ..., v_{sigma(n)})
Vector apply_permutation(const Permutation& sigma, const Vector& v);

// A_sigma with apply(A_sigma, v) = apply_permutation(sigma, v); the full
// reversal gives exchange_matrix(n).
Matrix permutation_matrix(const Permutation& sigma, const FieldTag& tag);

// Monic char poly of the reversing transform: (x-1)^ceil(n/2) (x+1)^floor(n/2),
// ambient degree n.
Poly reversing_char_poly(std::size_t n, const FieldTag& tag);

// x^2 - 1 for n >= 2, x - 1 for n = 1.
Poly reversing_min_poly(std::size_t n, const FieldTag& tag);

// +1: palindromic basis; -1: antipalindromic basis.
std::vector<Vector> eigenspace_basis(std::size_t n, int sign, const FieldTag& tag);

// Projections (id + R)/2 and (id - R)/2 applied to v.
Vector palindromicing(const Vector& v);
Vector antipalindromicing(const Vector& v);

}  // namespace rp
