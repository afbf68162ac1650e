#pragma once

#include <stdexcept>
#include <string>

namespace codent {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct UnsupportedSpec : Error { using Error::Error; };
struct NotSymmetrizable : Error { using Error::Error; };
struct ClosureOverflow : Error { using Error::Error; };
struct EnumerationOverflow : Error { using Error::Error; };
struct DimensionOverflow : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

} // namespace codent
