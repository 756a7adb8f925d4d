#pragma once

#include "dioq/term.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dioq {

// A system of equations {0·tᵢ = n̄ᵢ} with distinct irreducible left cores
// that do not mention each other (no 0·tᵢ occurs inside any tⱼ). Such a
// system induces the extended rewriting rules 0·tᵢ ⤳ n̄ᵢ and is always
// jointly satisfiable.
class ReducedSystem {
 public:
  ReducedSystem() = default;
  explicit ReducedSystem(std::vector<std::pair<TermRef, Nat>> entries);

  const std::vector<std::pair<TermRef, Nat>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Verbatim lookup of tᵢ (no substitution into tᵢ).
  std::optional<Nat> lookup(TermRef t) const;

  // 2 + max nᵢ, the norm base constant for this system (2 when empty).
  Nat norm_constant() const;

  bool operator==(const ReducedSystem& o) const { return entries_ == o.entries_; }

 private:
  std::vector<std::pair<TermRef, Nat>> entries_;
};

// Normal: no subterm t+0, t+Su, t·0, t·Su.
bool is_normal(TermRef t);
// Irreducible: normal and not of the form 0 or St.
bool is_irreducible(TermRef t);
// T-reduced: normal with no subterm 0·tᵢ for tᵢ in the system.
bool is_t_reduced(TermRef t, const ReducedSystem& sys);

struct Reduct {
  Path redex;
  TermRef result;
};

// Every one-step reduct together with its redex path, in pre-order path
// order. A given occurrence matches at most one rule.
std::vector<Reduct> one_step_reducts_detailed(TermRef t, const ReducedSystem& sys);

// Duplicate-free reduct terms, ordered by first redex path.
std::vector<TermRef> one_step_reducts(TermRef t, const ReducedSystem& sys);

struct RewriteLimits {
  std::uint64_t max_steps = 1'000'000;
  std::uint64_t max_nodes = 10'000'000;
};

// Unique normal form, computed by leftmost-innermost rewriting. Throws
// BudgetError when the step or node budget is exhausted (normalization can
// be exponentially long; the descriptor module is the polynomial path).
TermRef rtn_normalize(TermRef t, const ReducedSystem& sys, const RewriteLimits& limits = {});

// The full reduction sequence, starting term included.
std::vector<TermRef> rtn_normalize_trace(TermRef t, const ReducedSystem& sys,
                                         const RewriteLimits& limits = {});

// Termination norm: ‖x‖=‖0‖=c, ‖St‖=‖t‖+3, ‖t+u‖=‖t‖+2‖u‖, ‖t·u‖=‖t‖·‖u‖.
// Requires c ≥ 2; every rewrite step strictly decreases it when
// c = 2 + max nᵢ.
Nat norm_measure(TermRef t, const Nat& c);

// Unique decomposition of a normal term as S^n(core) with core zero or
// irreducible. Throws std::invalid_argument if t is not normal.
std::pair<Nat, TermRef> succ_decompose(TermRef t);

}  // namespace dioq
