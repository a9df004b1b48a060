#pragma once

#include <stdexcept>
#include <string>

namespace trigrid {

// Input or state violates an operation's precondition (CLI exit code 2).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (CLI exit code 3).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An internal invariant failed; always a bug (CLI exit code 4).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A search exceeded its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trigrid
