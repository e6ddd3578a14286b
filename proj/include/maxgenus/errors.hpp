#pragma once

#include <stdexcept>
#include <string>

namespace maxgenus {

// Raised when an API requiring a connected graph receives one that is not.
struct DisconnectedGraph : std::runtime_error {
    explicit DisconnectedGraph(const std::string& what)
        : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_number(line) {}
    int line_number;
};

// An oracle would exceed its enumeration budget; never truncated silently.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error(what) {}
};

struct NotATwoComponentCut : std::runtime_error {
    explicit NotATwoComponentCut(const std::string& what)
        : std::runtime_error(what) {}
};

struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& what)
        : std::runtime_error(what) {}
};

struct NotSimple : std::runtime_error {
    explicit NotSimple(const std::string& what) : std::runtime_error(what) {}
};

// A result violated one of the library's own postconditions. Reaching this
// means a bug (or a genuine counterexample to the characterization).
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace maxgenus
