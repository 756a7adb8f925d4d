#include "dioq/term.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_set>

namespace dioq {

namespace {

std::atomic<std::uint32_t> g_max_var_index{1u << 16};

std::size_t combine(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

struct NodeHash {
  std::size_t operator()(const Term* t) const { return t->hash(); }
};
struct NodeEq {
  bool operator()(const Term* a, const Term* b) const;
};

// Intern table. Nodes are owned by a deque (stable addresses) and live for
// the whole process; the table is guarded by a mutex, so construction is
// safe from any thread and interned pointers can be compared directly.
class TermTable {
 public:
  static TermTable& instance() {
    static TermTable table;
    return table;
  }

  TermRef make(TermKind k, std::uint32_t var, TermRef l, TermRef r) {
    Term probe;
    probe.kind_ = k;
    probe.var_ = var;
    probe.left_ = l;
    probe.right_ = r;
    probe.hash_ = hash_of(k, var, l, r);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = set_.find(&probe);
    if (it != set_.end()) return *it;
    nodes_.push_back(probe);
    Term* stored = &nodes_.back();
    std::uint64_t n = 1;
    bool closed = k != TermKind::Var;
    auto sat_add = [](std::uint64_t a, std::uint64_t b) {
      std::uint64_t s = a + b;
      return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
    };
    if (l != nullptr) {
      n = sat_add(n, l->nodes_);
      closed = closed && l->closed_;
    }
    if (r != nullptr) {
      n = sat_add(n, r->nodes_);
      closed = closed && r->closed_;
    }
    stored->nodes_ = n;
    stored->closed_ = closed;
    set_.insert(stored);
    return stored;
  }

 private:
  static std::size_t hash_of(TermKind k, std::uint32_t var, TermRef l, TermRef r) {
    std::size_t h = static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ULL + 1;
    h = combine(h, var);
    h = combine(h, reinterpret_cast<std::size_t>(l));
    h = combine(h, reinterpret_cast<std::size_t>(r));
    return h;
  }

  std::mutex mu_;
  std::deque<Term> nodes_;
  std::unordered_set<const Term*, NodeHash, NodeEq> set_;
};

bool NodeEq::operator()(const Term* a, const Term* b) const {
  return a->kind() == b->kind() && a->var_index() == b->var_index() &&
         a->left() == b->left() && a->right() == b->right();
}

}  // namespace

std::uint32_t max_var_index() { return g_max_var_index.load(); }
void set_max_var_index(std::uint32_t limit) { g_max_var_index.store(limit); }

TermRef t_zero() {
  static TermRef z = TermTable::instance().make(TermKind::Zero, 0, nullptr, nullptr);
  return z;
}

TermRef t_var(std::uint32_t index) {
  if (index >= max_var_index())
    throw std::invalid_argument("variable index " + std::to_string(index) + " exceeds limit");
  return TermTable::instance().make(TermKind::Var, index, nullptr, nullptr);
}

TermRef t_succ(TermRef t) { return TermTable::instance().make(TermKind::Succ, 0, t, nullptr); }
TermRef t_add(TermRef l, TermRef r) { return TermTable::instance().make(TermKind::Add, 0, l, r); }
TermRef t_mul(TermRef l, TermRef r) { return TermTable::instance().make(TermKind::Mul, 0, l, r); }

TermRef resolve_path(TermRef t, const Path& p) {
  TermRef cur = t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= cur->arity()) throw std::out_of_range("path does not resolve at step " + std::to_string(i));
    cur = cur->child_at(p[i]);
  }
  return cur;
}

std::vector<std::pair<Path, TermRef>> subterm_occurrences(TermRef t) {
  std::vector<std::pair<Path, TermRef>> out;
  Path path;
  // explicit stack of (node, next child) to keep pre-order without recursion
  struct Frame {
    TermRef node;
    int next;
  };
  std::vector<Frame> stack;
  stack.push_back({t, 0});
  out.emplace_back(path, t);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next >= f.node->arity()) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    int c = f.next++;
    path.push_back(static_cast<std::uint8_t>(c));
    TermRef child = f.node->child_at(c);
    out.emplace_back(path, child);
    stack.push_back({child, 0});
  }
  return out;
}

bool contains_subterm(TermRef haystack, TermRef needle) {
  if (haystack == needle) return true;
  for (int i = 0; i < haystack->arity(); ++i)
    if (contains_subterm(haystack->child_at(i), needle)) return true;
  return false;
}

std::vector<std::uint32_t> free_vars(TermRef t) {
  std::set<std::uint32_t> acc;
  std::vector<TermRef> stack{t};
  while (!stack.empty()) {
    TermRef cur = stack.back();
    stack.pop_back();
    if (cur->kind() == TermKind::Var) acc.insert(cur->var_index());
    if (cur->closed()) continue;
    for (int i = 0; i < cur->arity(); ++i) stack.push_back(cur->child_at(i));
  }
  return {acc.begin(), acc.end()};
}

TermRef bnum(const Nat& n) {
  if (n < 0) throw std::invalid_argument("bnum of negative number");
  if (n == 0) return t_zero();
  if ((n & 1) != 0) return t_succ(bnum(n - 1));
  static TermRef two = t_succ(t_succ(t_zero()));
  return t_mul(two, bnum(n >> 1));
}

TermRef unum(const Nat& n, std::uint64_t node_budget) {
  if (n < 0) throw std::invalid_argument("unum of negative number");
  if (n + 1 > node_budget) throw BudgetError("unum(" + n.str() + ") exceeds node budget");
  TermRef t = t_zero();
  for (Nat i = 0; i < n; ++i) t = t_succ(t);
  return t;
}

namespace {

Nat eval_rec(TermRef t, const NatValuation& v,
             const std::vector<std::pair<TermRef, Nat>>* sys) {
  if (sys != nullptr && t->kind() == TermKind::Mul && t->left() == t_zero()) {
    for (const auto& [ti, ni] : *sys)
      if (t->right() == ti) return ni;
  }
  switch (t->kind()) {
    case TermKind::Zero: return 0;
    case TermKind::Var: {
      auto it = v.find(t->var_index());
      if (it == v.end())
        throw std::invalid_argument("unbound variable index " + std::to_string(t->var_index()));
      return it->second;
    }
    case TermKind::Succ: return eval_rec(t->child(), v, sys) + 1;
    case TermKind::Add: return eval_rec(t->left(), v, sys) + eval_rec(t->right(), v, sys);
    case TermKind::Mul: return eval_rec(t->left(), v, sys) * eval_rec(t->right(), v, sys);
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace

Nat eval_nat(TermRef t, const NatValuation& v) { return eval_rec(t, v, nullptr); }

Nat eval_nat_with_hypotheses(TermRef t, const NatValuation& v,
                             const std::vector<std::pair<TermRef, Nat>>& sys) {
  return eval_rec(t, v, &sys);
}

std::uint32_t NameTable::intern(const std::string& name) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  if (names_.size() >= max_var_index())
    throw std::invalid_argument("too many distinct variables (limit " +
                                std::to_string(max_var_index()) + ")");
  auto idx = static_cast<std::uint32_t>(names_.size());
  names_.push_back(name);
  by_name_.emplace(name, idx);
  return idx;
}

const std::string& NameTable::name(std::uint32_t index) const {
  static const std::string empty;
  return index < names_.size() ? names_[index] : empty;
}

std::optional<std::uint32_t> NameTable::lookup(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string default_var_name(std::uint32_t index) {
  static const char* base[] = {"x", "y", "z", "u", "v", "w"};
  if (index < 6) return base[index];
  return "t" + std::to_string(index);
}

namespace {

std::string var_display(std::uint32_t index, const NameTable* names) {
  if (names != nullptr && index < names->size() && !names->name(index).empty())
    return names->name(index);
  return default_var_name(index);
}

void render_rec(TermRef t, const RenderOptions& o, std::string& out) {
  if (o.fold_numerals && t->closed() && t->kind() != TermKind::Zero) {
    Nat value = eval_nat(t, {});
    if (t == bnum(value)) {
      out += "#" + value.str();
      return;
    }
  }
  switch (t->kind()) {
    case TermKind::Zero: out += "0"; return;
    case TermKind::Var: out += var_display(t->var_index(), o.names); return;
    case TermKind::Succ: {
      if (o.collapse_succ) {
        std::uint64_t k = 0;
        TermRef cur = t;
        while (cur->kind() == TermKind::Succ) {
          ++k;
          cur = cur->child();
        }
        if (k > 2) {
          out += "S^" + std::to_string(k) + "(";
          render_rec(cur, o, out);
          out += ")";
          return;
        }
      }
      out += "S(";
      render_rec(t->child(), o, out);
      out += ")";
      return;
    }
    case TermKind::Add:
    case TermKind::Mul: {
      out += "(";
      render_rec(t->left(), o, out);
      out += t->kind() == TermKind::Add ? " + " : " * ";
      render_rec(t->right(), o, out);
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string render_term(TermRef t, const RenderOptions& opts) {
  std::string out;
  render_rec(t, opts, out);
  return out;
}

std::string render_equation(const Equation& eq, const RenderOptions& opts) {
  return render_term(eq.lhs, opts) + " = " + render_term(eq.rhs, opts);
}

}  // namespace dioq
