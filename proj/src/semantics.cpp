#include "ddrs/semantics.hpp"

#include <random>
#include <stdexcept>

#include "ddrs/catalog.hpp"
#include "ddrs/generate.hpp"
#include "ddrs/rewrite.hpp"

namespace ddrs {

IntValue eval_int(const Term& t) {
  switch (t.sym()) {
    case Sym::Zero:
      return 0;
    case Sym::One:
      return 1;
    case Sym::Neg:
      return -eval_int(t.child(0));
    case Sym::Append:
    case Sym::Succ:
      return eval_int(t.child(0)) + 1;
    case Sym::Pred:
      return eval_int(t.child(0)) - 1;
    case Sym::Plus:
      return eval_int(t.child(0)) + eval_int(t.child(1));
    case Sym::Times:
      return eval_int(t.child(0)) * eval_int(t.child(1));
    case Sym::Minus:
      return eval_int(t.child(0)) - eval_int(t.child(1));
  }
  throw std::logic_error("eval_int: unhandled symbol");
}

View view_of(const Signature& sig) {
  switch (sig.kind()) {
    case SigKind::Ring:
    case SigKind::RingExt:
      return {ViewKind::Ring, sig.integers()};
    case SigKind::Unary:
    case SigKind::UnaryExt:
      return {ViewKind::Unary, sig.integers()};
    case SigKind::Successor:
    case SigKind::SuccessorExt:
      return {ViewKind::Successor, sig.integers()};
  }
  throw std::logic_error("view_of: unhandled signature");
}

namespace {

// The representative of a value k >= 1: a left-nested sum of ones in
// the ring view, a constructor tower over 0 otherwise.
Term positive_canonical(const IntValue& k, ViewKind kind) {
  if (kind == ViewKind::Ring) {
    Term t = Term::one();
    for (IntValue i = 1; i < k; ++i) t = Term::plus(t, Term::one());
    return t;
  }
  Term t = Term::zero();
  for (IntValue i = 0; i < k; ++i)
    t = kind == ViewKind::Unary ? Term::append(t) : Term::succ(t);
  return t;
}

bool positive_ring(const Term& t) {
  if (t.sym() == Sym::One) return true;
  return t.sym() == Sym::Plus && t.child(1).sym() == Sym::One &&
         positive_ring(t.child(0));
}

bool positive_tower(const Term& t, Sym sym) {
  if (t.sym() != sym) return false;
  const Term c = t.child(0);
  return c.sym() == Sym::Zero || positive_tower(c, sym);
}

bool positive_canonical_term(const Term& t, ViewKind kind) {
  switch (kind) {
    case ViewKind::Ring:
      return positive_ring(t);
    case ViewKind::Unary:
      return positive_tower(t, Sym::Append);
    case ViewKind::Successor:
      return positive_tower(t, Sym::Succ);
  }
  return false;
}

}  // namespace

Term canonical_term(const IntValue& value, View view) {
  if (value == 0) return Term::zero();
  if (value < 0) {
    if (!view.integers)
      throw std::domain_error("no canonical term for " + value.str() +
                              " in a naturals-only view");
    return Term::neg(positive_canonical(-value, view.kind));
  }
  return positive_canonical(value, view.kind);
}

Term canonical_term(const IntValue& value, const Signature& sig) {
  return canonical_term(value, view_of(sig));
}

bool in_canonical_set(const Term& t, View view) {
  if (t.sym() == Sym::Zero) return true;
  if (t.sym() == Sym::Neg)
    return view.integers && positive_canonical_term(t.child(0), view.kind);
  return positive_canonical_term(t, view.kind);
}

bool in_canonical_set(const Term& t, const Signature& sig) {
  return in_canonical_set(t, view_of(sig));
}

Report rule_soundness(const System& sys, std::size_t samples_per_rule,
                      std::uint64_t seed) {
  Report rep;
  rep.title = "rule soundness: " + sys.id();
  std::mt19937_64 rng(seed);
  for (const Rule& rule : sys.rules()) {
    const std::vector<std::string> vars = rule.lhs.variables();
    std::size_t bad = 0;
    std::string first;
    for (std::size_t i = 0; i < samples_per_rule; ++i) {
      Binding b;
      for (const std::string& v : vars) {
        const std::size_t size = 1 + static_cast<std::size_t>(rng() % 8);
        b.emplace(v, random_ground_term(sys.signature(), size, rng));
      }
      const Term lhs = instantiate(rule.lhs, b);
      const Term rhs = instantiate(rule.rhs, b);
      const IntValue lv = eval_int(lhs);
      const IntValue rv = eval_int(rhs);
      if (lv != rv) {
        ++bad;
        if (first.empty())
          first = render_binding(b) + ": " + render_term(lhs) + " = " +
                  lv.str() + " but " + render_term(rhs) + " = " + rv.str();
      }
    }
    rep.add("rule " + rule.id + " preserves value", bad == 0,
            bad == 0 ? std::to_string(samples_per_rule) +
                           " instances, argument sizes 1..8"
                     : std::to_string(bad) + " of " +
                           std::to_string(samples_per_rule) +
                           " instances differ; first: " + first);
  }
  return rep;
}

}  // namespace ddrs
