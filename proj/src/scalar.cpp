#include "revpaste/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace rp {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t k, std::int64_t p) {
    std::int64_t r = k % p;
    return r < 0 ? r + p : r;
}

// extended Euclid; a in [1, p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_reduce(t, p);
}

}  // namespace

FieldTag FieldTag::rational() { return FieldTag(FieldKind::Rational, 0, 0.0); }

FieldTag FieldTag::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t{1} << 31)) throw Error("modulus too large");
    return FieldTag(FieldKind::PrimeField, p, 0.0);
}

FieldTag FieldTag::float64(double tolerance) {
    if (tolerance < 0) throw Error("tolerance must be non-negative");
    return FieldTag(FieldKind::Float64, 0, tolerance);
}

FieldTag FieldTag::parse(const std::string& selector) {
    if (selector == "q") return rational();
    if (selector == "f64") return float64();
    if (selector.rfind("gf:", 0) == 0) {
        std::size_t pos = 0;
        const std::string body = selector.substr(3);
        std::int64_t p = 0;
        try {
            p = std::stoll(body, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad field selector '" + selector + "'");
        }
        if (pos != body.size()) throw ParseError("bad field selector '" + selector + "'");
        return prime_field(p);
    }
    throw ParseError("unknown field selector '" + selector + "' (expected q, gf:p or f64)");
}

std::int64_t FieldTag::characteristic() const {
    return kind_ == FieldKind::PrimeField ? modulus_ : 0;
}

std::string FieldTag::to_string() const {
    switch (kind_) {
        case FieldKind::Rational: return "q";
        case FieldKind::PrimeField: return "gf:" + std::to_string(modulus_);
        case FieldKind::Float64: return "f64";
    }
    return "?";
}

bool FieldTag::operator==(const FieldTag& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_ && tolerance_ == o.tolerance_;
}

Scalar Scalar::zero(const FieldTag& tag) { return from_int(tag, 0); }
Scalar Scalar::one(const FieldTag& tag) { return from_int(tag, 1); }

Scalar Scalar::from_int(const FieldTag& tag, std::int64_t k) {
    switch (tag.kind()) {
        case FieldKind::Rational: return Scalar(tag, Rational(k));
        case FieldKind::PrimeField: return Scalar(tag, mod_reduce(k, tag.modulus()));
        case FieldKind::Float64: return Scalar(tag, static_cast<double>(k));
    }
    throw Error("bad field kind");
}

Scalar Scalar::from_rational(const Rational& q) {
    return Scalar(FieldTag::rational(), q);
}

Scalar Scalar::from_residue(const FieldTag& tag, std::int64_t r) {
    if (tag.kind() != FieldKind::PrimeField) throw Error("from_residue requires a prime field tag");
    return Scalar(tag, mod_reduce(r, tag.modulus()));
}

Scalar Scalar::from_double(const FieldTag& tag, double x) {
    if (tag.kind() != FieldKind::Float64) throw Error("from_double requires a float tag");
    return Scalar(tag, x);
}

Scalar Scalar::parse(const FieldTag& tag, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    switch (tag.kind()) {
        case FieldKind::Rational: {
            try {
                return Scalar(tag, Rational(text));
            } catch (const std::exception&) {
                throw ParseError("bad rational '" + text + "'");
            }
        }
        case FieldKind::PrimeField: {
            std::size_t pos = 0;
            std::int64_t r = 0;
            try {
                r = std::stoll(text, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad residue '" + text + "'");
            }
            if (pos != text.size()) throw ParseError("bad residue '" + text + "'");
            return from_residue(tag, r);
        }
        case FieldKind::Float64: {
            std::size_t pos = 0;
            double x = 0;
            try {
                x = std::stod(text, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad float '" + text + "'");
            }
            if (pos != text.size()) throw ParseError("bad float '" + text + "'");
            return from_double(tag, x);
        }
    }
    throw Error("bad field kind");
}

bool Scalar::is_zero() const {
    switch (tag_.kind()) {
        case FieldKind::Rational: return rational_value() == 0;
        case FieldKind::PrimeField: return residue() == 0;
        case FieldKind::Float64: return std::abs(float_value()) <= tag_.tolerance();
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_tag(o);
    switch (tag_.kind()) {
        case FieldKind::Rational: return Scalar(tag_, rational_value() + o.rational_value());
        case FieldKind::PrimeField:
            return Scalar(tag_, mod_reduce(residue() + o.residue(), tag_.modulus()));
        case FieldKind::Float64: return Scalar(tag_, float_value() + o.float_value());
    }
    throw Error("bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_tag(o);
    switch (tag_.kind()) {
        case FieldKind::Rational: return Scalar(tag_, rational_value() * o.rational_value());
        case FieldKind::PrimeField:
            return Scalar(tag_, mod_reduce(residue() * o.residue(), tag_.modulus()));
        case FieldKind::Float64: return Scalar(tag_, float_value() * o.float_value());
    }
    throw Error("bad field kind");
}

Scalar Scalar::operator-() const {
    switch (tag_.kind()) {
        case FieldKind::Rational: return Scalar(tag_, Rational(-rational_value()));
        case FieldKind::PrimeField:
            return Scalar(tag_, mod_reduce(-residue(), tag_.modulus()));
        case FieldKind::Float64: return Scalar(tag_, -float_value());
    }
    throw Error("bad field kind");
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    switch (tag_.kind()) {
        case FieldKind::Rational: return Scalar(tag_, Rational(1) / rational_value());
        case FieldKind::PrimeField: return Scalar(tag_, mod_inverse(residue(), tag_.modulus()));
        case FieldKind::Float64: return Scalar(tag_, 1.0 / float_value());
    }
    throw Error("bad field kind");
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_tag(o);
    switch (tag_.kind()) {
        case FieldKind::Rational: return rational_value() == o.rational_value();
        case FieldKind::PrimeField: return residue() == o.residue();
        case FieldKind::Float64:
            return std::abs(float_value() - o.float_value()) <= tag_.tolerance();
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (tag_.kind()) {
        case FieldKind::Rational: {
            std::ostringstream os;
            os << rational_value();
            return os.str();
        }
        case FieldKind::PrimeField: return std::to_string(residue());
        case FieldKind::Float64: {
            std::ostringstream os;
            os << float_value();
            return os.str();
        }
    }
    return "?";
}

}  // namespace rp
