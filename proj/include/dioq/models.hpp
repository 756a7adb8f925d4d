#pragma once

#include "dioq/rewrite.hpp"
#include "dioq/term.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace dioq {

enum class Theory { Q, Qplus };

// Element of the black-hole model N^∞ = ℕ ∪ {∞}.
struct ExtNat {
  bool infinite = false;
  Nat value = 0;

  static ExtNat inf() { return {true, 0}; }
  static ExtNat fin(Nat n) { return {false, std::move(n)}; }
  bool operator==(const ExtNat& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

using ExtValuation = std::unordered_map<std::uint32_t, ExtNat>;

// Evaluation in N^∞. Operations return a finite value only when the axioms
// force it: S∞=∞, ∞+x=x+∞=x·∞=∞, ∞·0=0, ∞·x=∞ (x≠0). The Qplus variant
// additionally has 0·∞=0.
ExtNat ninfty_eval(TermRef t, const ExtValuation& v, Theory variant);

// Value n such that the theory proves t = n̄, obtained by evaluating at the
// all-∞ valuation (Q variant); absent when the result is ∞.
std::optional<Nat> constant_fold(TermRef t);

// Element of the reduced-term model M, kept as S-stack over a core (core is
// 0 or an irreducible T-reduced term). Keeping the stack numeric avoids
// materializing huge unary chains until asked.
struct MElem {
  Nat stack;
  TermRef core;
  bool operator==(const MElem& o) const { return stack == o.stack && core == o.core; }
  bool is_numeral() const { return core->kind() == TermKind::Zero; }
};

MElem m_elem_of(TermRef t);  // requires t normal
MElem m_zero();
MElem m_succ(const MElem& e);
MElem m_add(const MElem& a, const MElem& b, const ReducedSystem& sys,
            std::uint64_t node_budget = 1'000'000);
MElem m_mul(const MElem& a, const MElem& b, const ReducedSystem& sys,
            std::uint64_t node_budget = 1'000'000);
TermRef materialize(const MElem& e, std::uint64_t node_budget = 1'000'000);

using TermValuation = std::unordered_map<std::uint32_t, TermRef>;

// Value of t in M under valuation v (entries must be T-reduced). With the
// identity valuation this computes red(t) relative to sys.
TermRef reduced_model_eval(TermRef t, const TermValuation& v, const ReducedSystem& sys,
                           std::uint64_t node_budget = 1'000'000);

// All (k, m) with k+m=n, ascending in k.
std::vector<std::pair<Nat, Nat>> decompose_sum(const Nat& n);

// The zero branch plus all (k, m) with k·m=n, ascending in k. Requires n ≥ 1.
struct ProdDecomposition {
  bool zero_branch = true;
  std::vector<std::pair<Nat, Nat>> pairs;
};
ProdDecomposition decompose_prod(const Nat& n);

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks Q1, Q2, Q4-Q7 and the Q8ₙ/Q9ₙ schemata (n ≤ n_max) in the model M
// over the given sample elements (which must be T-reduced terms).
AxiomReport check_qforall_axioms(const ReducedSystem& sys, const std::vector<TermRef>& samples,
                                 const Nat& n_max);

// Element of the extension model N built on top of M: an element of M, the
// black hole ∞, a "predecessor" ⟨a,k⟩ standing for a−k, or ⟨a,k,x⟩ standing
// for x·(a−k), with a irreducible (no predecessor in M) and x nonstandard.
struct ExtElem {
  enum class Kind { Base, Inf, Pred, Scaled };
  Kind kind = Kind::Inf;
  TermRef base = nullptr;  // Base payload, or the `a` of Pred/Scaled
  Nat k = 0;               // Pred/Scaled offset, ≥ 1
  TermRef x = nullptr;     // Scaled multiplier, nonstandard element of M

  static ExtElem make_base(TermRef m);
  static ExtElem make_inf();
  static ExtElem make_pred(TermRef a, Nat k);
  static ExtElem make_scaled(TermRef a, Nat k, TermRef x);
  bool operator==(const ExtElem& o) const;
};

ExtElem ext_succ(const ExtElem& e, const ReducedSystem& sys);
ExtElem ext_add(const ExtElem& a, const ExtElem& b, const ReducedSystem& sys);
ExtElem ext_mul(const ExtElem& a, const ExtElem& b, const ReducedSystem& sys);

// Constructive Q3: an element whose successor is e. Throws for Base(0).
ExtElem ext_predecessor(const ExtElem& e, const ReducedSystem& sys);

enum class ExtOp { S, Add, Mul };
// Dispatcher over the three operations (S ignores e2).
ExtElem ext_model_ops(const ExtElem& e1, const ExtElem& e2, ExtOp op, const ReducedSystem& sys);

std::string render_ext_elem(const ExtElem& e);

}  // namespace dioq
