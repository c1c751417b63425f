#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indhom {

// Malformed user input (bad graph, bad parameter).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Graph text that fails to parse; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An internal invariant failed: an assembly bug upstream, never bad input.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace indhom
