#pragma once

#include <stdexcept>
#include <string>

namespace rp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct IncompatibleField : Error {
    IncompatibleField() : Error("operands belong to different fields") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct CharacteristicTwo : Error {
    CharacteristicTwo() : Error("characteristic 2: decomposition undefined") {}
};

struct Singular : Error {
    Singular() : Error("matrix is singular") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("enumeration budget exceeded: " + what) {}
};

struct UnknownLaw : Error {
    explicit UnknownLaw(const std::string& id) : Error("unknown law: " + id) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace rp
