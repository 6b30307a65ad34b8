#include "ddrs/weights.hpp"

#include <stdexcept>
#include <utility>

#include "ddrs/catalog.hpp"

namespace ddrs {

const char* weight_scheme_name(WeightScheme s) {
  switch (s) {
    case WeightScheme::R:
      return "R";
    case WeightScheme::U:
      return "U";
    case WeightScheme::S:
      return "S";
    case WeightScheme::RExt:
      return "R-ext";
    case WeightScheme::UExt:
      return "U-ext";
    case WeightScheme::SExt:
      return "S-ext";
  }
  return "?";
}

WeightScheme weight_scheme_for(const Signature& sig) {
  switch (sig.kind()) {
    case SigKind::Ring:
      return WeightScheme::R;
    case SigKind::Unary:
      return WeightScheme::U;
    case SigKind::Successor:
      return WeightScheme::S;
    case SigKind::RingExt:
      return WeightScheme::RExt;
    case SigKind::UnaryExt:
      return WeightScheme::UExt;
    case SigKind::SuccessorExt:
      return WeightScheme::SExt;
  }
  throw std::logic_error("weight_scheme_for: unhandled signature");
}

namespace {

bool scheme_is_ext(WeightScheme s) {
  return s == WeightScheme::RExt || s == WeightScheme::UExt ||
         s == WeightScheme::SExt;
}

bool scheme_covers(WeightScheme s, Sym sym) {
  switch (sym) {
    case Sym::Zero:
    case Sym::Neg:
    case Sym::Plus:
    case Sym::Times:
      return true;
    case Sym::One:
      return s == WeightScheme::R || s == WeightScheme::RExt;
    case Sym::Append:
      return s == WeightScheme::U || s == WeightScheme::UExt;
    case Sym::Succ:
      return s == WeightScheme::S || s == WeightScheme::SExt;
    case Sym::Pred:
    case Sym::Minus:
      return scheme_is_ext(s);
  }
  return false;
}

// Weights are always >= 2, so msb() is defined on every finished value.
std::size_t bit_length(const IntValue& v) {
  return static_cast<std::size_t>(boost::multiprecision::msb(v)) + 1;
}

WeightValue finish(IntValue v, std::size_t bit_cap) {
  const bool over = bit_length(v) > bit_cap;
  return {std::move(v), over};
}

WeightValue weight_rec(const Term& t, WeightScheme s, std::size_t cap) {
  if (!scheme_covers(s, t.sym()))
    throw std::invalid_argument(std::string("weight scheme ") +
                                weight_scheme_name(s) + " has no clause for " +
                                std::string(sym_name(t.sym())));
  switch (t.sym()) {
    case Sym::Zero:
    case Sym::One:
      return {IntValue(2), false};
    case Sym::Neg: {
      WeightValue w = weight_rec(t.child(0), s, cap);
      if (w.overflow) return w;
      return finish(w.value + 1, cap);
    }
    case Sym::Append:
    case Sym::Succ: {
      WeightValue w = weight_rec(t.child(0), s, cap);
      if (w.overflow) return w;
      return finish(w.value + 2, cap);
    }
    case Sym::Pred: {
      WeightValue w = weight_rec(t.child(0), s, cap);
      if (w.overflow) return w;
      return finish(w.value + 5, cap);
    }
    case Sym::Plus:
    case Sym::Minus: {
      WeightValue l = weight_rec(t.child(0), s, cap);
      WeightValue r = weight_rec(t.child(1), s, cap);
      if (l.overflow || r.overflow) return {IntValue(0), true};
      IntValue v = l.value + 3 * r.value;
      if (t.sym() == Sym::Minus) v += 4;
      return finish(std::move(v), cap);
    }
    case Sym::Times: {
      WeightValue l = weight_rec(t.child(0), s, cap);
      WeightValue r = weight_rec(t.child(1), s, cap);
      if (l.overflow || r.overflow) return {IntValue(0), true};
      // l >= 2^lbits, so l^r has more than lbits*r bits; declare
      // overflow on that estimate before computing a gigantic power.
      const std::size_t lbits = static_cast<std::size_t>(
          boost::multiprecision::msb(l.value));
      if (r.value > cap) return {IntValue(0), true};
      const auto e = r.value.convert_to<std::size_t>();
      if (lbits * e >= cap) return {IntValue(0), true};
      return finish(boost::multiprecision::pow(l.value,
                                               static_cast<unsigned>(e)),
                    cap);
    }
  }
  throw std::logic_error("term_weight: unhandled symbol");
}

}  // namespace

WeightValue term_weight(const Term& t, WeightScheme scheme,
                        std::size_t bit_cap) {
  return weight_rec(t, scheme, bit_cap);
}

WeightStats weight_decrease_check(const System& sys,
                                  const std::vector<Term>& terms,
                                  std::size_t bit_cap) {
  WeightStats stats;
  const WeightScheme scheme = sys.weight_scheme();
  for (const Term& t : terms) {
    const WeightValue before = term_weight(t, scheme, bit_cap);
    if (before.overflow) {
      ++stats.terms_skipped;
      continue;
    }
    ++stats.terms_checked;
    for (const Redex& r : find_redexes(sys, t)) {
      ++stats.redexes_checked;
      const Term reduct = rewrite_at(sys, t, r.pos, r.rule_id);
      const WeightValue after = term_weight(reduct, scheme, bit_cap);
      if (after.overflow || after.value >= before.value)
        stats.violations.push_back({t, r});
    }
  }
  return stats;
}

}  // namespace ddrs
