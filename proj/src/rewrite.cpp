#include "dioq/rewrite.hpp"

#include "dioq/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace dioq {

ReducedSystem::ReducedSystem(std::vector<std::pair<TermRef, Nat>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    TermRef ti = entries_[i].first;
    if (entries_[i].second < 0) throw std::invalid_argument("negative system value");
    if (!is_irreducible(ti))
      throw std::invalid_argument("system entry is not irreducible: " + render_term(ti));
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (i != j && ti == entries_[j].first)
        throw std::invalid_argument("duplicate system entry: " + render_term(ti));
      TermRef forbidden = t_mul(t_zero(), entries_[j].first);
      if (contains_subterm(ti, forbidden))
        throw std::invalid_argument("system entry " + render_term(ti) +
                                    " contains 0*" + render_term(entries_[j].first));
    }
  }
}

std::optional<Nat> ReducedSystem::lookup(TermRef t) const {
  for (const auto& [ti, ni] : entries_)
    if (ti == t) return ni;
  return std::nullopt;
}

Nat ReducedSystem::norm_constant() const {
  Nat c = 0;
  for (const auto& [ti, ni] : entries_) c = std::max(c, ni);
  return c + 2;
}

namespace {

// Matches one rewrite rule at the root of t, if any. Rule overlap is
// impossible: system cores are irreducible, hence never 0 or S-rooted.
std::optional<TermRef> root_step(TermRef t, const ReducedSystem& sys) {
  switch (t->kind()) {
    case TermKind::Add:
      if (t->right()->kind() == TermKind::Zero) return t->left();                      // t+0 ⤳ t
      if (t->right()->kind() == TermKind::Succ)
        return t_succ(t_add(t->left(), t->right()->child()));                          // t+Su ⤳ S(t+u)
      return std::nullopt;
    case TermKind::Mul:
      if (t->right()->kind() == TermKind::Zero) return t_zero();                       // t·0 ⤳ 0
      if (t->right()->kind() == TermKind::Succ)
        return t_add(t_mul(t->left(), t->right()->child()), t->left());                // t·Su ⤳ t·u+t
      if (t->left()->kind() == TermKind::Zero) {
        if (auto ni = sys.lookup(t->right())) return unum(*ni);                        // 0·tᵢ ⤳ n̄ᵢ
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

TermRef replace_at(TermRef t, const Path& p, std::size_t depth, TermRef replacement) {
  if (depth == p.size()) return replacement;
  switch (t->kind()) {
    case TermKind::Succ: return t_succ(replace_at(t->child(), p, depth + 1, replacement));
    case TermKind::Add:
      return p[depth] == 0 ? t_add(replace_at(t->left(), p, depth + 1, replacement), t->right())
                           : t_add(t->left(), replace_at(t->right(), p, depth + 1, replacement));
    case TermKind::Mul:
      return p[depth] == 0 ? t_mul(replace_at(t->left(), p, depth + 1, replacement), t->right())
                           : t_mul(t->left(), replace_at(t->right(), p, depth + 1, replacement));
    default:
      throw std::out_of_range("redex path does not resolve");
  }
}

// Leftmost-innermost redex: first post-order occurrence carrying a redex.
bool find_innermost(TermRef t, const ReducedSystem& sys, Path& path,
                    std::optional<TermRef>& rewritten) {
  for (int i = 0; i < t->arity(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    if (find_innermost(t->child_at(i), sys, path, rewritten)) return true;
    path.pop_back();
  }
  if (auto r = root_step(t, sys)) {
    rewritten = r;
    return true;
  }
  return false;
}

}  // namespace

bool is_normal(TermRef t) {
  if ((t->kind() == TermKind::Add || t->kind() == TermKind::Mul) &&
      (t->right()->kind() == TermKind::Zero || t->right()->kind() == TermKind::Succ))
    return false;
  for (int i = 0; i < t->arity(); ++i)
    if (!is_normal(t->child_at(i))) return false;
  return true;
}

bool is_irreducible(TermRef t) {
  return is_normal(t) && t->kind() != TermKind::Zero && t->kind() != TermKind::Succ;
}

bool is_t_reduced(TermRef t, const ReducedSystem& sys) {
  if (!is_normal(t)) return false;
  for (const auto& [ti, ni] : sys.entries())
    if (contains_subterm(t, t_mul(t_zero(), ti))) return false;
  return true;
}

std::vector<Reduct> one_step_reducts_detailed(TermRef t, const ReducedSystem& sys) {
  std::vector<Reduct> out;
  for (const auto& [path, sub] : subterm_occurrences(t)) {
    if (auto r = root_step(sub, sys)) out.push_back({path, replace_at(t, path, 0, *r)});
  }
  return out;
}

std::vector<TermRef> one_step_reducts(TermRef t, const ReducedSystem& sys) {
  std::vector<TermRef> out;
  std::unordered_set<TermRef> seen;
  for (const auto& r : one_step_reducts_detailed(t, sys))
    if (seen.insert(r.result).second) out.push_back(r.result);
  return out;
}

namespace {

TermRef normalize_impl(TermRef t, const ReducedSystem& sys, const RewriteLimits& limits,
                       std::vector<TermRef>* trace) {
  TermRef cur = t;
  std::uint64_t steps = 0;
  if (trace != nullptr) trace->push_back(cur);
  for (;;) {
    Path path;
    std::optional<TermRef> rewritten;
    if (!find_innermost(cur, sys, path, rewritten)) return cur;
    if (++steps > limits.max_steps)
      throw BudgetError("rewrite step budget exceeded (" + std::to_string(limits.max_steps) + ")");
    cur = replace_at(cur, path, 0, *rewritten);
    if (cur->node_count() > limits.max_nodes)
      throw BudgetError("rewrite node budget exceeded (" + std::to_string(limits.max_nodes) + ")");
    if (trace != nullptr) trace->push_back(cur);
  }
}

}  // namespace

TermRef rtn_normalize(TermRef t, const ReducedSystem& sys, const RewriteLimits& limits) {
  return normalize_impl(t, sys, limits, nullptr);
}

std::vector<TermRef> rtn_normalize_trace(TermRef t, const ReducedSystem& sys,
                                         const RewriteLimits& limits) {
  std::vector<TermRef> trace;
  normalize_impl(t, sys, limits, &trace);
  return trace;
}

Nat norm_measure(TermRef t, const Nat& c) {
  if (c < 2) throw std::invalid_argument("norm constant must be >= 2");
  switch (t->kind()) {
    case TermKind::Zero:
    case TermKind::Var: return c;
    case TermKind::Succ: return norm_measure(t->child(), c) + 3;
    case TermKind::Add: return norm_measure(t->left(), c) + 2 * norm_measure(t->right(), c);
    case TermKind::Mul: return norm_measure(t->left(), c) * norm_measure(t->right(), c);
  }
  throw std::logic_error("unreachable term kind");
}

std::pair<Nat, TermRef> succ_decompose(TermRef t) {
  Nat n = 0;
  TermRef cur = t;
  while (cur->kind() == TermKind::Succ) {
    ++n;
    cur = cur->child();
  }
  if (cur->kind() != TermKind::Zero && !is_irreducible(cur))
    throw std::invalid_argument("succ_decompose expects a normal term: " + render_term(t));
  return {n, cur};
}

}  // namespace dioq
