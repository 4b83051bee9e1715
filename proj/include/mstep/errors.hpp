#pragma once

#include <stdexcept>
#include <string>

namespace mstep {

// Base of every domain error thrown by this library. what() always starts
// with the error name so callers (and the CLI) can surface it verbatim.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("ZeroDenominator: denominator must be nonzero") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("DivisionByZero: cannot invert zero") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& detail)
        : Error("ParseError: " + detail) {}
};

struct OrderTooSmall : Error {
    OrderTooSmall() : Error("OrderTooSmall: recurrence order must be at least 2") {}
};

struct LengthMismatch : Error {
    LengthMismatch() : Error("LengthMismatch: coefficients and initial terms must have equal length") {}
};

struct NegativeIndexUnavailable : Error {
    NegativeIndexUnavailable()
        : Error("NegativeIndexUnavailable: backward extension requires a nonzero trailing coefficient") {}
};

struct EmptyRange : Error {
    EmptyRange() : Error("EmptyRange: range lower bound exceeds upper bound") {}
};

struct UnknownSequence : Error {
    explicit UnknownSequence(const std::string& id)
        : Error("UnknownSequence: no catalog entry named '" + id + "'") {}
};

struct UnknownTable : Error {
    explicit UnknownTable(const std::string& id)
        : Error("UnknownTable: no reference table named '" + id + "'") {}
};

} // namespace mstep
