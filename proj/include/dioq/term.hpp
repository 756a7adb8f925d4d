#pragma once

#include "dioq/error.hpp"
#include "dioq/nat.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dioq {

// Terms of the language {0, S, +, ·} with indexed variables.
//
// Terms are interned: structurally equal terms are the same node, so
// equality of TermRef is pointer equality and terms are safe to share
// freely. Nodes live for the duration of the process.
enum class TermKind : std::uint8_t { Zero, Var, Succ, Add, Mul };

class Term {
 public:
  TermKind kind() const { return kind_; }
  std::uint32_t var_index() const { return var_; }
  const Term* child() const { return left_; }  // Succ
  const Term* left() const { return left_; }
  const Term* right() const { return right_; }

  int arity() const {
    switch (kind_) {
      case TermKind::Zero:
      case TermKind::Var: return 0;
      case TermKind::Succ: return 1;
      default: return 2;
    }
  }
  const Term* child_at(int i) const { return i == 0 ? left_ : right_; }

  // Number of nodes of the term viewed as a tree (saturating).
  std::uint64_t node_count() const { return nodes_; }
  bool closed() const { return closed_; }
  std::size_t hash() const { return hash_; }

 private:
  friend class TermTable;
  TermKind kind_;
  std::uint32_t var_ = 0;
  const Term* left_ = nullptr;
  const Term* right_ = nullptr;
  std::uint64_t nodes_ = 1;
  bool closed_ = true;
  std::size_t hash_ = 0;
};

using TermRef = const Term*;

// Variable indices are capped so valuations stay representable.
std::uint32_t max_var_index();
void set_max_var_index(std::uint32_t limit);

TermRef t_zero();
TermRef t_var(std::uint32_t index);
TermRef t_succ(TermRef t);
TermRef t_add(TermRef l, TermRef r);
TermRef t_mul(TermRef l, TermRef r);

struct Equation {
  TermRef lhs;
  TermRef rhs;
  bool operator==(const Equation& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// A path from the root of a fixed term to a subterm occurrence: child
// indices (0 = Succ child / left operand, 1 = right operand).
using Path = std::vector<std::uint8_t>;

// Resolves a path against a term; throws std::out_of_range if invalid.
TermRef resolve_path(TermRef t, const Path& p);

// Pre-order enumeration of every subterm occurrence.
std::vector<std::pair<Path, TermRef>> subterm_occurrences(TermRef t);

bool contains_subterm(TermRef haystack, TermRef needle);

// Sorted, duplicate-free list of variable indices occurring in t.
std::vector<std::uint32_t> free_vars(TermRef t);

// Binary numeral of Def-style recursion: size O(log n).
TermRef bnum(const Nat& n);

// Unary numeral S^n 0; refuses to materialize more than node_budget nodes.
TermRef unum(const Nat& n, std::uint64_t node_budget = 10'000'000);

using NatValuation = std::unordered_map<std::uint32_t, Nat>;

// Standard evaluation over ℕ; throws std::invalid_argument on unbound vars.
Nat eval_nat(TermRef t, const NatValuation& v);

// Like eval_nat, but any subterm that verbatim-matches 0·tᵢ for an entry
// (tᵢ, nᵢ) of `sys` evaluates to nᵢ. Used to spot-check soundness of the
// extended rewriting rules. `sys` maps tᵢ -> nᵢ.
Nat eval_nat_with_hypotheses(TermRef t, const NatValuation& v,
                             const std::vector<std::pair<TermRef, Nat>>& sys);

// Variable names for rendering. Parsing fills this with source names;
// programmatic terms fall back to x, y, z, u, v, w, t6, t7, ...
class NameTable {
 public:
  std::uint32_t intern(const std::string& name);
  const std::string& name(std::uint32_t index) const;
  std::optional<std::uint32_t> lookup(const std::string& name) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
};

std::string default_var_name(std::uint32_t index);

struct RenderOptions {
  const NameTable* names = nullptr;
  bool fold_numerals = false;   // print closed bnum-shaped subterms as #n
  bool collapse_succ = false;   // print S(S(...S(t))) as S^k(t)  (display only)
};

// Canonical output is fully parenthesized and round-trips through the
// parser; the display options are for human-facing output only.
std::string render_term(TermRef t, const RenderOptions& opts = {});
std::string render_equation(const Equation& eq, const RenderOptions& opts = {});

}  // namespace dioq
