#pragma once

#include "dioq/term.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace dioq {

// Monotone (∧/∨) combinations of atoms "term = numeral". This is the only
// formula shape the deciders accept; there is no general first-order AST.
struct FormulaAtom {
  TermRef term;
  Nat value;
  bool operator==(const FormulaAtom& o) const { return term == o.term && value == o.value; }
};

class PositiveFormula;
using FormulaRef = std::shared_ptr<const PositiveFormula>;

class PositiveFormula {
 public:
  enum class Kind { Atom, And, Or };

  Kind kind() const { return kind_; }
  const FormulaAtom& atom() const { return atom_; }
  const std::vector<FormulaRef>& children() const { return children_; }

  static FormulaRef make_atom(TermRef t, Nat n);
  static FormulaRef make_and(std::vector<FormulaRef> children);
  static FormulaRef make_or(std::vector<FormulaRef> children);

 private:
  Kind kind_ = Kind::Atom;
  FormulaAtom atom_{nullptr, 0};
  std::vector<FormulaRef> children_;
};

std::vector<std::uint32_t> free_vars(const FormulaRef& f);

bool eval_formula_nat(const FormulaRef& f, const NatValuation& v);

// Disjunctive normal form as a list of conjuncts (atom lists). Throws
// BudgetError if more than max_conjuncts would be produced.
std::vector<std::vector<FormulaAtom>> to_dnf(const FormulaRef& f, std::size_t max_conjuncts = 4096);

std::string render_formula(const FormulaRef& f, const RenderOptions& opts = {});

}  // namespace dioq
