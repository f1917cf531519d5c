#include "revpaste/poly.hpp"

#include <sstream>

namespace rp {

Poly::Poly(FieldTag tag, std::size_t ambient)
    : ambient_(ambient), coeffs_(Vector::zero(tag, ambient + 1)) {}

Poly::Poly(std::size_t ambient, Vector coeffs) : ambient_(ambient), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ambient_ + 1)
        throw DimensionMismatch("coefficient count does not match ambient degree");
}

Poly Poly::from_ints(const FieldTag& tag, const std::vector<std::int64_t>& ascending) {
    if (ascending.empty()) throw DimensionMismatch("polynomial needs at least one coefficient");
    return Poly(ascending.size() - 1, Vector::from_ints(tag, ascending));
}

Poly Poly::operator+(const Poly& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("polynomial sum needs equal ambient degree");
    return Poly(ambient_, coeffs_ + o.coeffs_);
}

Poly Poly::operator-() const { return Poly(ambient_, -coeffs_); }

Poly Poly::scaled(const Scalar& a) const { return Poly(ambient_, coeffs_.scaled(a)); }

bool Poly::operator==(const Poly& o) const {
    return ambient_ == o.ambient_ && coeffs_ == o.coeffs_;
}

std::string Poly::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k <= ambient_; ++k) {
        if (k) os << " + ";
        os << coeffs_[k].to_string();
        if (k == 1) os << "*x";
        if (k > 1) os << "*x^" << k;
    }
    return os.str();
}

Poly reverse_poly(const Poly& P) { return Poly(P.ambient(), reverse_vector(P.coeffs())); }

Poly paste_poly(const Poly& P, const Poly& Q) {
    return Poly(P.ambient() + Q.ambient() + 1, paste_vectors(P.coeffs(), Q.coeffs()));
}

bool is_palindromic(const Poly& P) { return is_palindromic(P.coeffs()); }

bool is_antipalindromic(const Poly& P) { return is_antipalindromic(P.coeffs()); }

std::pair<Poly, Poly> decompose_poly(const Poly& P) {
    PalAntiPair parts = decompose(P.coeffs());
    return {Poly(P.ambient(), std::move(parts.pal)), Poly(P.ambient(), std::move(parts.anti))};
}

}  // namespace rp
