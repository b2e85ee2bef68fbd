#pragma once

#include <stdexcept>
#include <string>

namespace lions {

// Invalid input for an operation: bad graph, illegal move, broken precondition.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard or search budget refused the request. Never conflated with a
// negative answer.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lions
