#pragma once

#include <stdexcept>
#include <string>

namespace dioq {

// Raised when a configurable resource budget (rewrite steps, node counts,
// search nodes, DNF size, ...) is exhausted. Callers must treat this as
// "no answer", never as UNSAT/false.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace dioq
