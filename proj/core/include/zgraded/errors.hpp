#pragma once

#include <stdexcept>
#include <string>

namespace zgr {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched Z_2^n lengths or incompatible index sets.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Operation applied to objects living on different charts, or an
// unknown coordinate name/index.
class ChartError : public Error {
public:
    using Error::Error;
};

// Non-invertible element, degenerate metric, unsupported division.
class AlgebraError : public Error {
public:
    using Error::Error;
};

// Evaluation at a pole of a coefficient.
class PoleError : public Error {
public:
    using Error::Error;
};

// Degree bookkeeping violation (inhomogeneous tensor entry, wrong
// metric degree, ...).
class DegreeError : public Error {
public:
    using Error::Error;
};

// Syntax or semantic error in an input document; carries a position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace zgr
