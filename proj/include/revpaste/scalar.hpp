#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "revpaste/errors.hpp"

namespace rp {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, PrimeField, Float64 };

/// Identifies the field a value lives in.  Scalars with different tags never
/// mix; every container carries the tag of its entries.
class FieldTag {
public:
    static FieldTag rational();
    static FieldTag prime_field(std::int64_t p);  // p checked prime by trial division
    static FieldTag float64(double tolerance = 1e-9);

    static FieldTag parse(const std::string& selector);  // "q", "gf:p", "f64"

    FieldKind kind() const { return kind_; }
    std::int64_t modulus() const { return modulus_; }
    double tolerance() const { return tolerance_; }

    // 0 for rational/float, p for GF(p)
    std::int64_t characteristic() const;

    bool is_exact() const { return kind_ != FieldKind::Float64; }

    std::string to_string() const;

    bool operator==(const FieldTag& o) const;
    bool operator!=(const FieldTag& o) const { return !(*this == o); }

private:
    FieldTag(FieldKind k, std::int64_t m, double tol) : kind_(k), modulus_(m), tolerance_(tol) {}

    FieldKind kind_;
    std::int64_t modulus_;
    double tolerance_;
};

/// One field element.  Rationals are kept in lowest terms with positive
/// denominator (cpp_rational maintains that); prime-field residues lie in
/// [0, p); floats are plain doubles compared within the tag tolerance.
class Scalar {
public:
    static Scalar zero(const FieldTag& tag);
    static Scalar one(const FieldTag& tag);
    static Scalar from_int(const FieldTag& tag, std::int64_t k);
    static Scalar from_rational(const Rational& q);           // rational tag
    static Scalar from_residue(const FieldTag& tag, std::int64_t r);  // prime-field tag
    static Scalar from_double(const FieldTag& tag, double x);         // float tag

    static Scalar parse(const FieldTag& tag, const std::string& text);

    const FieldTag& tag() const { return tag_; }

    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;                         // throws DivisionByZero on 0
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    bool operator==(const Scalar& o) const;     // float: within tag tolerance
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const Rational& rational_value() const { return std::get<Rational>(value_); }
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    double float_value() const { return std::get<double>(value_); }

    std::string to_string() const;

private:
    Scalar(FieldTag tag, std::variant<Rational, std::int64_t, double> v)
        : tag_(tag), value_(std::move(v)) {}

    void require_same_tag(const Scalar& o) const {
        if (tag_ != o.tag_) throw IncompatibleField();
    }

    FieldTag tag_;
    std::variant<Rational, std::int64_t, double> value_;
};

}  // namespace rp
