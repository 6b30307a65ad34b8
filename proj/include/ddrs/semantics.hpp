#pragma once

// Integer semantics for ground terms: evaluation into arbitrary-precision
// integers, construction and recognition of canonical forms, and sampled
// soundness checks that rewrite rules preserve value.

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

#include "ddrs/report.hpp"
#include "ddrs/term.hpp"

namespace ddrs {

class System;

using IntValue = boost::multiprecision::cpp_int;

// Standard interpretation: 0 and 1 denote themselves, - is negation
// (binary - subtraction), + and * are addition and multiplication,
// x' and S(x) mean x+1, P(x) means x-1.
IntValue eval_int(const Term& t);

// A choice of canonical representation for integer values, independent
// of the extension symbols (which never occur in canonical terms).
enum class ViewKind { Ring, Unary, Successor };

struct View {
  ViewKind kind = ViewKind::Ring;
  bool integers = true;  // false restricts the canonical set to naturals

  friend bool operator==(const View&, const View&) = default;
};

View view_of(const Signature& sig);

// The canonical representative of `value` in the view's canonical set
// (see in_canonical_set). Throws std::domain_error for a negative
// value in a naturals-only view.
Term canonical_term(const IntValue& value, View view);
Term canonical_term(const IntValue& value, const Signature& sig);

// Whether `t` lies in the view's canonical set:
//   ring:      0, or a left-nested sum of ones (1, (1+1)+1, ...), or the
//              negation of such a sum;
//   unary:     0, a tower 0''', or the negation of a nonempty tower;
//   successor: 0, a tower S(S(0)), or the negation of a nonempty tower.
// Naturals-only views exclude the negated shapes.
bool in_canonical_set(const Term& t, View view);
bool in_canonical_set(const Term& t, const Signature& sig);

// For each rule of the system, instantiates its variables with
// `samples_per_rule` random ground terms and checks that both sides
// evaluate to the same integer. One check per rule in the report.
Report rule_soundness(const System& sys, std::size_t samples_per_rule,
                      std::uint64_t seed);

}  // namespace ddrs
