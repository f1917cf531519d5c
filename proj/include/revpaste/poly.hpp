#pragma once

#include <utility>

#include "revpaste/vec.hpp"

namespace rp {

/// Polynomial with a declared degree bound ("ambient" degree n), stored as
/// its coefficient vector of length n+1, ascending powers.  The actual degree
/// may be lower; trailing zero coefficients are significant for reversing and
/// pasting.
class Poly {
public:
    Poly(FieldTag tag, std::size_t ambient);
    Poly(std::size_t ambient, Vector coeffs);  // coeffs.size() must be ambient+1

    static Poly from_ints(const FieldTag& tag, const std::vector<std::int64_t>& ascending);

    const FieldTag& tag() const { return coeffs_.tag(); }
    std::size_t ambient() const { return ambient_; }
    const Vector& coeffs() const { return coeffs_; }
    const Scalar& coeff(std::size_t k) const { return coeffs_[k]; }

    Poly operator+(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Scalar& a) const;

    bool operator==(const Poly& o) const;  // same ambient and coefficients
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;  // "c0 + c1*x + ..." with zero terms kept

private:
    std::size_t ambient_;
    Vector coeffs_;
};

Poly reverse_poly(const Poly& P);

// ambient n+m+1; as polynomials, result(x) = P(x) + x^{n+1} Q(x)
Poly paste_poly(const Poly& P, const Poly& Q);

bool is_palindromic(const Poly& P);
bool is_antipalindromic(const Poly& P);

// (palindromic part, antipalindromic part), both at P's ambient
std::pair<Poly, Poly> decompose_poly(const Poly& P);

}  // namespace rp
