#include "dioq/models.hpp"

#include "dioq/error.hpp"

#include <algorithm>

namespace dioq {

ExtNat ninfty_eval(TermRef t, const ExtValuation& v, Theory variant) {
  switch (t->kind()) {
    case TermKind::Zero: return ExtNat::fin(0);
    case TermKind::Var: {
      auto it = v.find(t->var_index());
      if (it == v.end())
        throw std::invalid_argument("unbound variable index " + std::to_string(t->var_index()));
      return it->second;
    }
    case TermKind::Succ: {
      ExtNat c = ninfty_eval(t->child(), v, variant);
      if (c.infinite) return c;
      return ExtNat::fin(c.value + 1);
    }
    case TermKind::Add: {
      ExtNat l = ninfty_eval(t->left(), v, variant);
      ExtNat r = ninfty_eval(t->right(), v, variant);
      if (l.infinite || r.infinite) return ExtNat::inf();
      return ExtNat::fin(l.value + r.value);
    }
    case TermKind::Mul: {
      ExtNat l = ninfty_eval(t->left(), v, variant);
      ExtNat r = ninfty_eval(t->right(), v, variant);
      if (!l.infinite && !r.infinite) return ExtNat::fin(l.value * r.value);
      if (r.infinite) {
        // x·∞ = ∞, except 0·∞ = 0 in the Qplus variant.
        if (variant == Theory::Qplus && !l.infinite && l.value == 0) return ExtNat::fin(0);
        return ExtNat::inf();
      }
      // l infinite, r finite: ∞·0 = 0, ∞·x = ∞ for x ≠ 0.
      if (r.value == 0) return ExtNat::fin(0);
      return ExtNat::inf();
    }
  }
  throw std::logic_error("unreachable term kind");
}

std::optional<Nat> constant_fold(TermRef t) {
  ExtValuation v;
  for (auto i : free_vars(t)) v.emplace(i, ExtNat::inf());
  ExtNat r = ninfty_eval(t, v, Theory::Q);
  if (r.infinite) return std::nullopt;
  return r.value;
}

MElem m_elem_of(TermRef t) {
  auto [stack, core] = succ_decompose(t);
  return MElem{std::move(stack), core};
}

MElem m_zero() { return MElem{0, t_zero()}; }

MElem m_succ(const MElem& e) { return MElem{e.stack + 1, e.core}; }

TermRef materialize(const MElem& e, std::uint64_t node_budget) {
  if (e.stack + e.core->node_count() > node_budget)
    throw BudgetError("model element exceeds node budget");
  TermRef t = e.core;
  for (Nat i = 0; i < e.stack; ++i) t = t_succ(t);
  return t;
}

MElem m_add(const MElem& a, const MElem& b, const ReducedSystem& sys,
            std::uint64_t node_budget) {
  (void)sys;
  if (b.is_numeral()) return MElem{a.stack + b.stack, a.core};  // t +ᴹ Sⁿ0 = Sⁿt
  return MElem{b.stack, t_add(materialize(a, node_budget), b.core)};  // t +ᴹ Sⁿu = Sⁿ(t+u)
}

MElem m_mul(const MElem& a, const MElem& b, const ReducedSystem& sys,
            std::uint64_t node_budget) {
  auto repeat_add = [&](MElem acc, const Nat& times) {
    // acc ↦ S^{a.stack}(acc + a.core), iterated `times` times.
    for (Nat i = 0; i < times; ++i)
      acc = MElem{a.stack, t_add(materialize(acc, node_budget), a.core)};
    return acc;
  };
  if (b.is_numeral()) {
    if (a.is_numeral()) return MElem{a.stack * b.stack, t_zero()};  // Sⁿ0·ᴹSᵐ0 = Sⁿᵐ0
    if (b.stack > node_budget) throw BudgetError("model product exceeds node budget");
    return repeat_add(m_zero(), b.stack);  // Sⁿt·ᴹSᵐ0
  }
  if (a.is_numeral()) {
    if (a.stack == 0) {
      if (auto ni = sys.lookup(b.core)) return MElem{*ni, t_zero()};  // 0·ᴹSᵐtᵢ = Sⁿⁱ0
      return MElem{0, t_mul(t_zero(), b.core)};                       // 0·ᴹSᵐu = 0·u
    }
    // Sⁿ0·ᴹSᵐu = Sⁿᵐ(Sⁿ0·u), n > 0
    return MElem{a.stack * b.stack, t_mul(materialize(a, node_budget), b.core)};
  }
  // Sⁿt·ᴹSᵐu with t, u irreducible
  if (b.stack > node_budget) throw BudgetError("model product exceeds node budget");
  MElem base{0, t_mul(materialize(a, node_budget), b.core)};
  return repeat_add(base, b.stack);
}

TermRef reduced_model_eval(TermRef t, const TermValuation& v, const ReducedSystem& sys,
                           std::uint64_t node_budget) {
  struct Eval {
    const TermValuation& v;
    const ReducedSystem& sys;
    std::uint64_t budget;
    MElem run(TermRef u) {
      switch (u->kind()) {
        case TermKind::Zero: return m_zero();
        case TermKind::Var: {
          auto it = v.find(u->var_index());
          if (it == v.end())
            throw std::invalid_argument("unbound variable index " +
                                        std::to_string(u->var_index()));
          return m_elem_of(it->second);
        }
        case TermKind::Succ: return m_succ(run(u->child()));
        case TermKind::Add: {
          MElem l = run(u->left());
          MElem r = run(u->right());
          return m_add(l, r, sys, budget);
        }
        case TermKind::Mul: {
          MElem l = run(u->left());
          MElem r = run(u->right());
          return m_mul(l, r, sys, budget);
        }
      }
      throw std::logic_error("unreachable term kind");
    }
  };
  Eval e{v, sys, node_budget};
  return materialize(e.run(t), node_budget);
}

std::vector<std::pair<Nat, Nat>> decompose_sum(const Nat& n) {
  if (n < 0) throw std::invalid_argument("decompose_sum of negative number");
  std::vector<std::pair<Nat, Nat>> out;
  for (Nat k = 0; k <= n; ++k) out.emplace_back(k, n - k);
  return out;
}

ProdDecomposition decompose_prod(const Nat& n) {
  if (n < 1) throw std::invalid_argument("decompose_prod requires n >= 1");
  ProdDecomposition out;
  Nat root = boost::multiprecision::sqrt(n);
  std::vector<std::pair<Nat, Nat>> high;
  for (Nat k = 1; k <= root; ++k) {
    if (n % k == 0) {
      out.pairs.emplace_back(k, n / k);
      if (k != n / k) high.emplace_back(n / k, k);
    }
  }
  out.pairs.insert(out.pairs.end(), high.rbegin(), high.rend());
  return out;
}

namespace {

std::string elem_str(const MElem& e) {
  return "S^" + e.stack.str() + "(" + render_term(e.core) + ")";
}

}  // namespace

AxiomReport check_qforall_axioms(const ReducedSystem& sys, const std::vector<TermRef>& samples,
                                 const Nat& n_max) {
  AxiomReport report;
  auto violate = [&](const std::string& s) { report.violations.push_back(s); };
  std::vector<MElem> elems;
  for (TermRef s : samples) {
    if (!is_t_reduced(s, sys))
      throw std::invalid_argument("sample is not T-reduced: " + render_term(s));
    elems.push_back(m_elem_of(s));
  }
  const MElem zero = m_zero();
  for (const MElem& e : elems) {
    if (m_succ(e) == zero) violate("Q1 fails at " + elem_str(e));
    if (!(m_add(e, zero, sys) == e)) violate("Q4 fails at " + elem_str(e));
    if (!(m_mul(e, zero, sys) == zero)) violate("Q6 fails at " + elem_str(e));
  }
  for (const MElem& a : elems) {
    for (const MElem& b : elems) {
      if (m_succ(a) == m_succ(b) && !(a == b))
        violate("Q2 fails at " + elem_str(a) + ", " + elem_str(b));
      if (!(m_add(a, m_succ(b), sys) == m_succ(m_add(a, b, sys))))
        violate("Q5 fails at " + elem_str(a) + ", " + elem_str(b));
      if (!(m_mul(a, m_succ(b), sys) == m_add(m_mul(a, b, sys), a, sys)))
        violate("Q7 fails at " + elem_str(a) + ", " + elem_str(b));
      MElem sum = m_add(a, b, sys);
      MElem prod = m_mul(a, b, sys);
      for (Nat n = 0; n <= n_max; ++n) {
        // Q8ₙ: a+b = n̄ implies b = m̄ for some m ≤ n.
        if (sum.is_numeral() && sum.stack == n && !(b.is_numeral() && b.stack <= n))
          violate("Q8_" + n.str() + " fails at " + elem_str(a) + ", " + elem_str(b));
        // Q9ₙ: a·b = n̄ implies a = 0 or b = m̄ for some m ≤ n.
        if (prod.is_numeral() && prod.stack == n && !(a == zero) &&
            !(b.is_numeral() && b.stack <= n))
          violate("Q9_" + n.str() + " fails at " + elem_str(a) + ", " + elem_str(b));
      }
    }
  }
  return report;
}

ExtElem ExtElem::make_base(TermRef m) {
  if (!is_normal(m)) throw std::invalid_argument("ext element base must be normal");
  ExtElem e;
  e.kind = Kind::Base;
  e.base = m;
  return e;
}

ExtElem ExtElem::make_inf() { return ExtElem{}; }

ExtElem ExtElem::make_pred(TermRef a, Nat k) {
  if (!is_irreducible(a)) throw std::invalid_argument("pred base must be irreducible");
  if (k < 1) throw std::invalid_argument("pred offset must be >= 1");
  ExtElem e;
  e.kind = Kind::Pred;
  e.base = a;
  e.k = std::move(k);
  return e;
}

ExtElem ExtElem::make_scaled(TermRef a, Nat k, TermRef x) {
  if (!is_irreducible(a)) throw std::invalid_argument("scaled base must be irreducible");
  if (k < 1) throw std::invalid_argument("scaled offset must be >= 1");
  MElem mx = m_elem_of(x);
  if (mx.is_numeral()) throw std::invalid_argument("scaled multiplier must be nonstandard");
  ExtElem e;
  e.kind = Kind::Scaled;
  e.base = a;
  e.k = std::move(k);
  e.x = x;
  return e;
}

bool ExtElem::operator==(const ExtElem& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Inf: return true;
    case Kind::Base: return base == o.base;
    case Kind::Pred: return base == o.base && k == o.k;
    case Kind::Scaled: return base == o.base && k == o.k && x == o.x;
  }
  return false;
}

namespace {

// S^{-k}(w) for w a nonstandard element of M; lands in M or in a ⟨a,k⟩ form.
ExtElem shift_down(TermRef w, const Nat& k) {
  MElem e = m_elem_of(w);
  if (e.stack >= k) return ExtElem::make_base(materialize(MElem{e.stack - k, e.core}));
  if (e.is_numeral()) throw std::logic_error("shift below zero on a standard element");
  return ExtElem::make_pred(e.core, k - e.stack);
}

std::optional<Nat> numeral_of(TermRef m) {
  MElem e = m_elem_of(m);
  if (e.is_numeral()) return e.stack;
  return std::nullopt;
}

}  // namespace

ExtElem ext_succ(const ExtElem& e, const ReducedSystem& sys) {
  (void)sys;
  switch (e.kind) {
    case ExtElem::Kind::Inf: return e;
    case ExtElem::Kind::Scaled: return e;
    case ExtElem::Kind::Pred:
      if (e.k > 1) return ExtElem::make_pred(e.base, e.k - 1);
      return ExtElem::make_base(e.base);
    case ExtElem::Kind::Base:
      return ExtElem::make_base(materialize(m_succ(m_elem_of(e.base))));
  }
  throw std::logic_error("unreachable ext element kind");
}

ExtElem ext_add(const ExtElem& a, const ExtElem& b, const ReducedSystem& sys) {
  switch (a.kind) {
    case ExtElem::Kind::Inf:
      return ExtElem::make_inf();
    case ExtElem::Kind::Pred: {
      if (b.kind == ExtElem::Kind::Base) {
        if (auto n = numeral_of(b.base)) {
          // ⟨a,k⟩ + n = S^{n-k} a
          if (*n >= a.k)
            return ExtElem::make_base(materialize(MElem{*n - a.k, a.base}));
          return ExtElem::make_pred(a.base, a.k - *n);
        }
      }
      return ExtElem::make_inf();
    }
    case ExtElem::Kind::Base: {
      switch (b.kind) {
        case ExtElem::Kind::Inf:
        case ExtElem::Kind::Scaled:
          return ExtElem::make_inf();
        case ExtElem::Kind::Pred: {
          // x + ⟨a,k⟩ = S^{-k}(x +ᴹ a); x +ᴹ a is nonstandard by Q8.
          TermRef sum = materialize(m_add(m_elem_of(a.base), MElem{0, b.base}, sys));
          return shift_down(sum, b.k);
        }
        case ExtElem::Kind::Base:
          return ExtElem::make_base(
              materialize(m_add(m_elem_of(a.base), m_elem_of(b.base), sys)));
      }
      break;
    }
    case ExtElem::Kind::Scaled: {
      if (b.kind == ExtElem::Kind::Base) {
        if (numeral_of(b.base)) return a;  // ⟨a,k,x⟩ + n = ⟨a,k,x⟩
        // ⟨a,k,x⟩ + S^z x (z ∈ ℤ): same core as x.
        MElem yb = m_elem_of(b.base);
        MElem xx = m_elem_of(a.x);
        if (yb.core == xx.core) {
          if (a.k > 1) return ExtElem::make_scaled(a.base, a.k - 1, a.x);
          // k = 1: S^z(x ·ᴹ a), z = stack(y) - stack(x)
          TermRef prod = materialize(m_mul(xx, MElem{0, a.base}, sys));
          if (yb.stack >= xx.stack) {
            MElem p = m_elem_of(prod);
            return ExtElem::make_base(materialize(MElem{p.stack + (yb.stack - xx.stack), p.core}));
          }
          return shift_down(prod, xx.stack - yb.stack);
        }
      }
      return ExtElem::make_inf();
    }
  }
  throw std::logic_error("unreachable ext element kind");
}

ExtElem ext_mul(const ExtElem& a, const ExtElem& b, const ReducedSystem& sys) {
  if (a.kind != ExtElem::Kind::Base) {
    // a ∈ N \ M: a·n folds n-fold addition, a·y = ∞ for y ∉ ℕ.
    if (b.kind == ExtElem::Kind::Base) {
      if (auto n = numeral_of(b.base)) {
        if (*n > 100000) throw BudgetError("ext product fold too long");
        ExtElem acc = ExtElem::make_base(t_zero());
        for (Nat i = 0; i < *n; ++i) acc = ext_add(acc, a, sys);
        return acc;
      }
    }
    return ExtElem::make_inf();
  }
  switch (b.kind) {
    case ExtElem::Kind::Inf:
    case ExtElem::Kind::Scaled:
      return ExtElem::make_inf();
    case ExtElem::Kind::Pred: {
      MElem xa = m_elem_of(a.base);
      if (xa.is_numeral()) {
        // n·⟨a,k⟩ = S^{-kn}(n ·ᴹ a)
        TermRef prod = materialize(m_mul(xa, MElem{0, b.base}, sys));
        Nat shift = b.k * xa.stack;
        if (shift == 0) return ExtElem::make_base(prod);
        return shift_down(prod, shift);
      }
      return ExtElem::make_scaled(b.base, b.k, a.base);  // x·⟨a,k⟩ = ⟨a,k,x⟩, x ∉ ℕ
    }
    case ExtElem::Kind::Base:
      return ExtElem::make_base(
          materialize(m_mul(m_elem_of(a.base), m_elem_of(b.base), sys)));
  }
  throw std::logic_error("unreachable ext element kind");
}

ExtElem ext_predecessor(const ExtElem& e, const ReducedSystem& sys) {
  (void)sys;
  switch (e.kind) {
    case ExtElem::Kind::Inf: return e;
    case ExtElem::Kind::Scaled: return e;
    case ExtElem::Kind::Pred: return ExtElem::make_pred(e.base, e.k + 1);
    case ExtElem::Kind::Base: {
      MElem m = m_elem_of(e.base);
      if (m.stack >= 1) return ExtElem::make_base(materialize(MElem{m.stack - 1, m.core}));
      if (m.is_numeral()) throw std::invalid_argument("zero has no predecessor");
      return ExtElem::make_pred(m.core, 1);
    }
  }
  throw std::logic_error("unreachable ext element kind");
}

ExtElem ext_model_ops(const ExtElem& e1, const ExtElem& e2, ExtOp op, const ReducedSystem& sys) {
  switch (op) {
    case ExtOp::S: return ext_succ(e1, sys);
    case ExtOp::Add: return ext_add(e1, e2, sys);
    case ExtOp::Mul: return ext_mul(e1, e2, sys);
  }
  throw std::logic_error("unreachable ext op");
}

std::string render_ext_elem(const ExtElem& e) {
  switch (e.kind) {
    case ExtElem::Kind::Inf: return "inf";
    case ExtElem::Kind::Base: return render_term(e.base);
    case ExtElem::Kind::Pred: return "<" + render_term(e.base) + ", " + e.k.str() + ">";
    case ExtElem::Kind::Scaled:
      return "<" + render_term(e.base) + ", " + e.k.str() + ", " + render_term(e.x) + ">";
  }
  return "?";
}

}  // namespace dioq
