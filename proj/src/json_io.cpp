#include "revpaste/json_io.hpp"

#include <nlohmann/json.hpp>

namespace rp {

using nlohmann::json;

json to_json(const Vector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(v[i].to_string());
    return arr;
}

json to_json(const Matrix& A) {
    json rows = json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(rows)}};
}

json to_json(const Poly& P) {
    return json{{"ambient", P.ambient()}, {"coeffs", to_json(P.coeffs())}};
}

Vector vector_from_json(const json& j, const FieldTag& tag) {
    if (!j.is_array()) throw ParseError("vector JSON must be an array of scalar strings");
    std::vector<Scalar> e;
    e.reserve(j.size());
    for (const auto& item : j) e.push_back(Scalar::parse(tag, item.get<std::string>()));
    return Vector(tag, std::move(e));
}

Matrix matrix_from_json(const json& j, const FieldTag& tag) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON must have rows, cols, entries");
    const std::size_t n = j.at("rows").get<std::size_t>();
    const std::size_t m = j.at("cols").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) throw ParseError("entries row count mismatch");
    std::vector<Scalar> e;
    e.reserve(n * m);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != m) throw ParseError("entries column count mismatch");
        for (const auto& item : row) e.push_back(Scalar::parse(tag, item.get<std::string>()));
    }
    return Matrix(tag, n, m, std::move(e));
}

Poly poly_from_json(const json& j, const FieldTag& tag) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("coeffs"))
        throw ParseError("polynomial JSON must have ambient, coeffs");
    return Poly(j.at("ambient").get<std::size_t>(), vector_from_json(j.at("coeffs"), tag));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Vector parse_vector(const FieldTag& tag, const std::string& text) {
    if (text.empty()) return Vector(tag);
    std::vector<Scalar> e;
    for (const std::string& part : split(text, ',')) e.push_back(Scalar::parse(tag, part));
    return Vector(tag, std::move(e));
}

Matrix parse_matrix(const FieldTag& tag, const std::string& text) {
    if (text.empty()) return Matrix(tag, 0, 0);
    std::vector<Vector> rows;
    for (const std::string& part : split(text, ';')) rows.push_back(parse_vector(tag, part));
    return Matrix::from_rows(rows);
}

}  // namespace rp
