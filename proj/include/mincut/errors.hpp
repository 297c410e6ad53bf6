#pragma once

#include <stdexcept>
#include <string>

namespace mincut {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters or preconditions (maps to CLI exit code 1).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Structurally unusable graph: disconnected input, no contractible edge
/// left, contraction past two supernodes (maps to CLI exit code 3).
class GraphError : public Error {
public:
    using Error::Error;
};

/// Malformed graph text (maps to CLI exit code 2). Carries the 1-based
/// line number the problem was detected on.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace mincut
