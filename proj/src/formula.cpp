#include "dioq/formula.hpp"

#include "dioq/error.hpp"

#include <set>

namespace dioq {

FormulaRef PositiveFormula::make_atom(TermRef t, Nat n) {
  auto f = std::make_shared<PositiveFormula>();
  f->kind_ = Kind::Atom;
  f->atom_ = FormulaAtom{t, std::move(n)};
  return f;
}

FormulaRef PositiveFormula::make_and(std::vector<FormulaRef> children) {
  if (children.empty()) throw std::invalid_argument("empty conjunction");
  if (children.size() == 1) return children.front();
  auto f = std::make_shared<PositiveFormula>();
  f->kind_ = Kind::And;
  f->children_ = std::move(children);
  return f;
}

FormulaRef PositiveFormula::make_or(std::vector<FormulaRef> children) {
  if (children.empty()) throw std::invalid_argument("empty disjunction");
  if (children.size() == 1) return children.front();
  auto f = std::make_shared<PositiveFormula>();
  f->kind_ = Kind::Or;
  f->children_ = std::move(children);
  return f;
}

std::vector<std::uint32_t> free_vars(const FormulaRef& f) {
  std::set<std::uint32_t> acc;
  std::vector<const PositiveFormula*> stack{f.get()};
  while (!stack.empty()) {
    const PositiveFormula* cur = stack.back();
    stack.pop_back();
    if (cur->kind() == PositiveFormula::Kind::Atom) {
      for (auto i : free_vars(cur->atom().term)) acc.insert(i);
    } else {
      for (const auto& c : cur->children()) stack.push_back(c.get());
    }
  }
  return {acc.begin(), acc.end()};
}

bool eval_formula_nat(const FormulaRef& f, const NatValuation& v) {
  switch (f->kind()) {
    case PositiveFormula::Kind::Atom:
      return eval_nat(f->atom().term, v) == f->atom().value;
    case PositiveFormula::Kind::And:
      for (const auto& c : f->children())
        if (!eval_formula_nat(c, v)) return false;
      return true;
    case PositiveFormula::Kind::Or:
      for (const auto& c : f->children())
        if (eval_formula_nat(c, v)) return true;
      return false;
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

using Conjunct = std::vector<FormulaAtom>;

std::vector<Conjunct> dnf_rec(const PositiveFormula* f, std::size_t budget) {
  switch (f->kind()) {
    case PositiveFormula::Kind::Atom:
      return {{f->atom()}};
    case PositiveFormula::Kind::Or: {
      std::vector<Conjunct> out;
      for (const auto& c : f->children()) {
        auto part = dnf_rec(c.get(), budget);
        if (out.size() + part.size() > budget)
          throw BudgetError("DNF exceeds conjunct budget");
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case PositiveFormula::Kind::And: {
      std::vector<Conjunct> out{{}};
      for (const auto& c : f->children()) {
        auto part = dnf_rec(c.get(), budget);
        std::vector<Conjunct> next;
        if (out.size() * part.size() > budget)
          throw BudgetError("DNF exceeds conjunct budget");
        next.reserve(out.size() * part.size());
        for (const auto& a : out)
          for (const auto& b : part) {
            Conjunct merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        out = std::move(next);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

std::vector<std::vector<FormulaAtom>> to_dnf(const FormulaRef& f, std::size_t max_conjuncts) {
  return dnf_rec(f.get(), max_conjuncts);
}

namespace {

void render_formula_rec(const PositiveFormula* f, const RenderOptions& o, std::string& out) {
  switch (f->kind()) {
    case PositiveFormula::Kind::Atom:
      out += render_term(f->atom().term, o) + " = #" + f->atom().value.str();
      return;
    case PositiveFormula::Kind::And:
    case PositiveFormula::Kind::Or: {
      const char* sep = f->kind() == PositiveFormula::Kind::And ? " & " : " | ";
      out += "(";
      bool first = true;
      for (const auto& c : f->children()) {
        if (!first) out += sep;
        first = false;
        render_formula_rec(c.get(), o, out);
      }
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string render_formula(const FormulaRef& f, const RenderOptions& opts) {
  std::string out;
  render_formula_rec(f.get(), opts, out);
  return out;
}

}  // namespace dioq
