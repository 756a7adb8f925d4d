#pragma once

#include "dioq/formula.hpp"
#include "dioq/term.hpp"

#include <string_view>
#include <variant>

namespace dioq {

// Surface grammar (whitespace insignificant):
//
//   term    := sum
//   sum     := prod ('+' prod)*            left-associative
//   prod    := atom ('*' atom)*            left-associative
//   atom    := '0' | ident | 'S' '(' term ')' | '#' digits | '(' term ')'
//   eq      := term '=' term
//   formula := conj ('|' conj)*
//   conj    := fatom ('&' fatom)*
//   fatom   := term '=' '#' digits | '(' formula ')'
//
// '#n' denotes the binary numeral for n. 'S' is reserved and cannot be a
// variable. The fully parenthesized canonical form produced by render_term
// is a subset of this grammar, so parse/render round-trips.
TermRef parse_term(std::string_view text, NameTable& names);
Equation parse_equation(std::string_view text, NameTable& names);
FormulaRef parse_formula(std::string_view text, NameTable& names);

struct ParsedInput {
  std::variant<Equation, FormulaRef> value;
  bool is_formula() const { return value.index() == 1; }
};

// Dispatches on the presence of '&' or '|' (never legal in plain terms).
ParsedInput parse_input(std::string_view text, NameTable& names);

}  // namespace dioq
