#pragma once

#include <stdexcept>
#include <string>

namespace mal {

/// Malformed input: bad vertex indices, empty facet lists, unreadable files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Input text could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// K equals the full simplex 2^[m]; the moment-angle constructions assume n < m.
class FullSimplexError : public std::runtime_error {
public:
    explicit FullSimplexError(int m)
        : std::runtime_error("K is the full simplex on " + std::to_string(m) +
                             " vertices; moment-angle constructions require n < m") {}
};

/// An enumeration cap (vertex count, monomial degree) was exceeded.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mal
