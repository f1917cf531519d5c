#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "revpaste/scalar.hpp"

namespace rp {

/// Finite ordered sequence of scalars over one field.  Empty vectors are
/// admitted and act as the two-sided identity of pasting.
class Vector {
public:
    explicit Vector(FieldTag tag) : tag_(tag) {}
    Vector(FieldTag tag, std::vector<Scalar> entries);

    static Vector zero(const FieldTag& tag, std::size_t n);
    static Vector unit(const FieldTag& tag, std::size_t n, std::size_t i);  // 0-based e_i
    static Vector from_ints(const FieldTag& tag, const std::vector<std::int64_t>& ks);

    const FieldTag& tag() const { return tag_; }
    std::size_t size() const { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator-() const;
    Vector scaled(const Scalar& a) const;

    bool operator==(const Vector& o) const;
    bool operator!=(const Vector& o) const { return !(*this == o); }

    std::string to_string() const;  // comma-separated entries

private:
    FieldTag tag_;
    std::vector<Scalar> entries_;
};

struct PalAntiPair {
    Vector pal;
    Vector anti;
};

Vector reverse_vector(const Vector& v);
Vector paste_vectors(const Vector& v, const Vector& w);
Scalar dot(const Vector& v, const Vector& w);
Vector cross3(const Vector& v, const Vector& w);

bool is_palindromic(const Vector& v);
bool is_antipalindromic(const Vector& v);

// (v ± reverse(v))/2; CharacteristicTwo over GF(2)
Vector palindromic_part(const Vector& v);
Vector antipalindromic_part(const Vector& v);
PalAntiPair decompose(const Vector& v);

// e_i + e_{n-1-i} family (middle singleton when n odd), size ceil(n/2);
// e_i - e_{n-1-i} family, size floor(n/2).  Deterministic order i = 0, 1, ...
std::vector<Vector> palindromic_basis(std::size_t n, const FieldTag& tag);
std::vector<Vector> antipalindromic_basis(std::size_t n, const FieldTag& tag);

}  // namespace rp
