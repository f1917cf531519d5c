#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "revpaste/matrix.hpp"
#include "revpaste/poly.hpp"

namespace rp {

// JSON schemas: vectors are arrays of scalar strings; matrices are
// {"rows": n, "cols": m, "entries": [[...row-major...]]}; polynomials are
// {"ambient": n, "coeffs": [...ascending...]}.
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& A);
nlohmann::json to_json(const Poly& P);

Vector vector_from_json(const nlohmann::json& j, const FieldTag& tag);
Matrix matrix_from_json(const nlohmann::json& j, const FieldTag& tag);
Poly poly_from_json(const nlohmann::json& j, const FieldTag& tag);

// Inline CLI syntax: vector "1,2,3"; matrix rows separated by ';'.
Vector parse_vector(const FieldTag& tag, const std::string& text);
Matrix parse_matrix(const FieldTag& tag, const std::string& text);

}  // namespace rp
