#pragma once

#include <stdexcept>
#include <string>

namespace rouquier {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// Incompatible fields, bad arguments, etc.
struct DomainError : Error {
    using Error::Error;
};

// Raised while ingesting a group datum; `invariant` names the check that failed.
struct DataError : Error {
    std::string invariant;
    DataError(std::string inv, const std::string& detail)
        : Error(inv + ": " + detail), invariant(std::move(inv)) {}
};

// A result that needs exact families got only upper bounds.
struct AmbiguityError : Error {
    using Error::Error;
};

}  // namespace rouquier
