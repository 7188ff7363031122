#pragma once

#include <stdexcept>
#include <string>

namespace hypertheta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad caller input: out-of-range indices, malformed files, invalid parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// Operation needs uniformity larger than the hypergraph provides (e.g. link of a 1-uniform hypergraph).
class UniformityTooSmall : public InputError {
public:
    using InputError::InputError;
};

/// A brute-force routine was asked to enumerate beyond its configured cap.
class InstanceTooLarge : public InputError {
public:
    using InputError::InputError;
};

/// A 1-uniform hypergraph with an edge has no proper coloring.
class NoColoring : public InputError {
public:
    using InputError::InputError;
};

/// Text-format violation; carries the 1-based line and column.
class FormatError : public InputError {
public:
    FormatError(const std::string& what, int line, int column)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// The numerical solver could not reach the requested accuracy.
class SolverError : public Error {
public:
    using Error::Error;
};

}  // namespace hypertheta
