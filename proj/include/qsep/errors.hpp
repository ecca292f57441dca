#pragma once

#include <stdexcept>
#include <string>

namespace qsep {

// Bad or out-of-contract input (CLI exit code 2).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file content; carries a line number when one is known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, long line = -1)
        : ValidationError(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A computation lost numeric integrity, e.g. an imaginary residue above
// tolerance where a real value was required (CLI exit code 3).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsep
