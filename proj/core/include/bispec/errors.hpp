#pragma once

#include <stdexcept>
#include <string>

namespace bispec {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible matrix/operator shapes or mismatched truncations.
struct DimensionError : Error {
    using Error::Error;
};

// Division by zero, zero modulus, non-invertible residue, and similar
// violations of algebraic preconditions.
struct DomainError : Error {
    using Error::Error;
};

// Raised by the problem-file parser; carries a source position.
struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// A name referenced before being declared in a problem file.
struct UndefinedNameError : Error {
    using Error::Error;
};

}  // namespace bispec
