#pragma once

// Shared fixtures for the test binaries.  The random generator here mirrors
// the documented counter scheme on purpose so tests reproduce verifier case
// sequences without going through the library.

#include <cstdint>
#include <vector>

#include "revpaste/matrix.hpp"

namespace th {

inline const rp::FieldTag Q = rp::FieldTag::rational();

inline rp::Vector vec(const std::vector<std::int64_t>& ks,
                      const rp::FieldTag& tag = Q) {
    return rp::Vector::from_ints(tag, ks);
}

inline rp::Matrix mat(const std::vector<std::vector<std::int64_t>>& rows,
                      const rp::FieldTag& tag = Q) {
    return rp::Matrix::from_ints(tag, rows);
}

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// value i of a run is mix64(seed + i); rationals use num in [-9,9], den in [1,9]
struct Rng {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    std::uint64_t next_raw() { return mix64(seed + counter++); }

    rp::Scalar next(const rp::FieldTag& tag) {
        const std::uint64_t v = next_raw();
        if (tag.kind() == rp::FieldKind::PrimeField)
            return rp::Scalar::from_residue(
                tag, static_cast<std::int64_t>(v % static_cast<std::uint64_t>(tag.modulus())));
        const std::int64_t num = static_cast<std::int64_t>(v % 19) - 9;
        const std::int64_t den = static_cast<std::int64_t>((v >> 32) % 9) + 1;
        return rp::Scalar::from_rational(rp::Rational(num, den));
    }

    rp::Vector next_vec(const rp::FieldTag& tag, std::size_t n) {
        std::vector<rp::Scalar> e;
        for (std::size_t i = 0; i < n; ++i) e.push_back(next(tag));
        return rp::Vector(tag, std::move(e));
    }

    rp::Matrix next_mat(const rp::FieldTag& tag, std::size_t n, std::size_t m) {
        std::vector<rp::Scalar> e;
        for (std::size_t i = 0; i < n * m; ++i) e.push_back(next(tag));
        return rp::Matrix(tag, n, m, std::move(e));
    }
};

}  // namespace th
