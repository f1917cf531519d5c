#include "revpaste/vec.hpp"

#include <algorithm>
#include <sstream>

namespace rp {

Vector::Vector(FieldTag tag, std::vector<Scalar> entries) : tag_(tag), entries_(std::move(entries)) {
    for (const Scalar& s : entries_)
        if (s.tag() != tag_) throw IncompatibleField();
}

Vector Vector::zero(const FieldTag& tag, std::size_t n) {
    return Vector(tag, std::vector<Scalar>(n, Scalar::zero(tag)));
}

Vector Vector::unit(const FieldTag& tag, std::size_t n, std::size_t i) {
    if (i >= n) throw IndexOutOfRange("unit vector index");
    std::vector<Scalar> e(n, Scalar::zero(tag));
    e[i] = Scalar::one(tag);
    return Vector(tag, std::move(e));
}

Vector Vector::from_ints(const FieldTag& tag, const std::vector<std::int64_t>& ks) {
    std::vector<Scalar> e;
    e.reserve(ks.size());
    for (std::int64_t k : ks) e.push_back(Scalar::from_int(tag, k));
    return Vector(tag, std::move(e));
}

Vector Vector::operator+(const Vector& o) const {
    if (tag_ != o.tag_) throw IncompatibleField();
    if (size() != o.size()) throw DimensionMismatch("vector sum");
    std::vector<Scalar> e;
    e.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) e.push_back(entries_[i] + o.entries_[i]);
    return Vector(tag_, std::move(e));
}

Vector Vector::operator-(const Vector& o) const { return *this + (-o); }

Vector Vector::operator-() const {
    std::vector<Scalar> e;
    e.reserve(size());
    for (const Scalar& s : entries_) e.push_back(-s);
    return Vector(tag_, std::move(e));
}

Vector Vector::scaled(const Scalar& a) const {
    if (a.tag() != tag_) throw IncompatibleField();
    std::vector<Scalar> e;
    e.reserve(size());
    for (const Scalar& s : entries_) e.push_back(a * s);
    return Vector(tag_, std::move(e));
}

bool Vector::operator==(const Vector& o) const {
    if (tag_ != o.tag_) throw IncompatibleField();
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

std::string Vector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << entries_[i].to_string();
    }
    return os.str();
}

Vector reverse_vector(const Vector& v) {
    std::vector<Scalar> e(v.entries().rbegin(), v.entries().rend());
    return Vector(v.tag(), std::move(e));
}

Vector paste_vectors(const Vector& v, const Vector& w) {
    if (v.tag() != w.tag()) throw IncompatibleField();
    std::vector<Scalar> e = v.entries();
    e.insert(e.end(), w.entries().begin(), w.entries().end());
    return Vector(v.tag(), std::move(e));
}

Scalar dot(const Vector& v, const Vector& w) {
    if (v.tag() != w.tag()) throw IncompatibleField();
    if (v.size() != w.size()) throw DimensionMismatch("dot product");
    Scalar acc = Scalar::zero(v.tag());
    for (std::size_t i = 0; i < v.size(); ++i) acc = acc + v[i] * w[i];
    return acc;
}

Vector cross3(const Vector& v, const Vector& w) {
    if (v.tag() != w.tag()) throw IncompatibleField();
    if (v.size() != 3 || w.size() != 3) throw DimensionMismatch("cross product needs length 3");
    std::vector<Scalar> e{v[1] * w[2] - v[2] * w[1],
                          v[2] * w[0] - v[0] * w[2],
                          v[0] * w[1] - v[1] * w[0]};
    return Vector(v.tag(), std::move(e));
}

bool is_palindromic(const Vector& v) { return reverse_vector(v) == v; }

bool is_antipalindromic(const Vector& v) { return reverse_vector(v) == -v; }

namespace {

Scalar half(const FieldTag& tag) {
    if (tag.characteristic() == 2) throw CharacteristicTwo();
    return Scalar::from_int(tag, 2).inv();
}

}  // namespace

Vector palindromic_part(const Vector& v) {
    return (v + reverse_vector(v)).scaled(half(v.tag()));
}

Vector antipalindromic_part(const Vector& v) {
    return (v - reverse_vector(v)).scaled(half(v.tag()));
}

PalAntiPair decompose(const Vector& v) {
    return PalAntiPair{palindromic_part(v), antipalindromic_part(v)};
}

std::vector<Vector> palindromic_basis(std::size_t n, const FieldTag& tag) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        Vector b = Vector::unit(tag, n, i);
        if (i != n - 1 - i) b = b + Vector::unit(tag, n, n - 1 - i);
        basis.push_back(std::move(b));
    }
    return basis;
}

std::vector<Vector> antipalindromic_basis(std::size_t n, const FieldTag& tag) {
    if (tag.characteristic() == 2) throw CharacteristicTwo();
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n / 2; ++i)
        basis.push_back(Vector::unit(tag, n, i) - Vector::unit(tag, n, n - 1 - i));
    return basis;
}

}  // namespace rp
