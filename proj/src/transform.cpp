#include "revpaste/transform.hpp"

#include <algorithm>

namespace rp {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t img : images_) {
        if (img < 1 || img > images_.size() || seen[img - 1])
            throw Error("permutation images are not a bijection of {1..n}");
        seen[img - 1] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::reversal(std::size_t n) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
}

Matrix exchange_matrix(std::size_t n, const FieldTag& tag) {
    Matrix J(tag, n, n);
    for (std::size_t i = 0; i < n; ++i) J.at(i, n - 1 - i) = Scalar::one(tag);
    return J;
}

Vector apply_permutation(const Permutation& sigma, const Vector& v) {
    if (v.size() != sigma.size()) throw DimensionMismatch("permutation length");
    std::vector<Scalar> e;
    e.reserve(v.size());
    for (std::size_t i = 1; i <= sigma.size(); ++i) e.push_back(v[sigma.image(i) - 1]);
    return Vector(v.tag(), std::move(e));
}

Matrix permutation_matrix(const Permutation& sigma, const FieldTag& tag) {
    const std::size_t n = sigma.size();
    Matrix A(tag, n, n);
    for (std::size_t i = 1; i <= n; ++i) A.at(i - 1, sigma.image(i) - 1) = Scalar::one(tag);
    return A;
}

namespace {

// ascending coefficient convolution
std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                             const FieldTag& tag) {
    std::vector<Scalar> c(a.size() + b.size() - 1, Scalar::zero(tag));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

}  // namespace

Poly reversing_char_poly(std::size_t n, const FieldTag& tag) {
    if (n < 1) throw DimensionMismatch("char poly needs n >= 1");
    const Scalar one = Scalar::one(tag);
    std::vector<Scalar> acc{one};
    const std::vector<Scalar> x_minus_1{-one, one};
    const std::vector<Scalar> x_plus_1{one, one};
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) acc = poly_mul(acc, x_minus_1, tag);
    for (std::size_t i = 0; i < n / 2; ++i) acc = poly_mul(acc, x_plus_1, tag);
    return Poly(n, Vector(tag, std::move(acc)));
}

Poly reversing_min_poly(std::size_t n, const FieldTag& tag) {
    if (n < 1) throw DimensionMismatch("min poly needs n >= 1");
    if (n == 1) return Poly(1, Vector(tag, {-Scalar::one(tag), Scalar::one(tag)}));
    return Poly(2, Vector(tag, {-Scalar::one(tag), Scalar::zero(tag), Scalar::one(tag)}));
}

std::vector<Vector> eigenspace_basis(std::size_t n, int sign, const FieldTag& tag) {
    if (sign == 1) return palindromic_basis(n, tag);
    if (sign == -1) return antipalindromic_basis(n, tag);
    throw Error("eigenspace sign must be +1 or -1");
}

Vector palindromicing(const Vector& v) { return palindromic_part(v); }

Vector antipalindromicing(const Vector& v) { return antipalindromic_part(v); }

}  // namespace rp
