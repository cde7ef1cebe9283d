#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esscoh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape disagreement between operands (matrix sizes, ambient dimensions).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Invalid value for the requested operation (composite p, unknown generator,
// inhomogeneous relation, parameters outside a family's range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Element-string rejection; position is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace esscoh
