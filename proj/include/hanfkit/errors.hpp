#pragma once

#include <stdexcept>
#include <string>

namespace hanfkit {

// Input/usage errors: bad syntax, arity mismatches, contract violations.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax errors carry a position in the input text.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, int line, int col)
        : ValidationError(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// The desk-scale resource guard: a type catalog or locality radius grew
// past the configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical-predicate oracle failed.
class OracleError : public std::runtime_error {
public:
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hanfkit
