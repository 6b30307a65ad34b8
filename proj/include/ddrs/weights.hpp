#pragma once

// Termination weights. Each rule system carries a weight scheme under
// which every rewrite step strictly decreases the weight of the whole
// term. Products exponentiate (|x*y| = |x|^|y|), so weights explode
// double-exponentially; values are capped at a bit length and flagged
// as overflowed past it.

#include <cstddef>
#include <vector>

#include "ddrs/report.hpp"
#include "ddrs/rewrite.hpp"
#include "ddrs/semantics.hpp"
#include "ddrs/term.hpp"

namespace ddrs {

// Clause tables. All three share |0| = 2, |-x| = |x|+1, |x+y| = |x|+3|y|,
// |x*y| = |x|^|y|; they differ on the remaining constructors:
//   R: |1| = 2                       (ring signatures)
//   U: |x'| = |x|+2                  (unary signatures)
//   S: |S(x)| = |x|+2                (successor signatures)
// Extended schemes add |P(x)| = |x|+5 and |x-y| = |x|+3|y|+4.
enum class WeightScheme { R, U, S, RExt, UExt, SExt };

const char* weight_scheme_name(WeightScheme s);

// Scheme matching a signature's constructor set.
WeightScheme weight_scheme_for(const Signature& sig);

inline constexpr std::size_t kWeightBitCap = 1'000'000;

struct WeightValue {
  IntValue value;  // meaningful only when !overflow
  bool overflow = false;
};

// Weight of a ground term under the scheme, capped at `bit_cap` bits.
WeightValue term_weight(const Term& t, WeightScheme scheme,
                        std::size_t bit_cap = kWeightBitCap);

struct WeightViolation {
  Term term;
  Redex redex;
};

struct WeightStats {
  std::size_t terms_checked = 0;    // terms whose weight fit under the cap
  std::size_t terms_skipped = 0;    // terms whose own weight overflowed
  std::size_t redexes_checked = 0;  // one-step comparisons performed
  std::vector<WeightViolation> violations;

  bool ok() const { return violations.empty(); }
};

// For every term: if its weight overflows the cap the term is skipped
// (no comparison is decidable); otherwise every one-step reduct must
// weigh strictly less. A reduct overflowing while the source fits is a
// genuine increase and reported as a violation.
WeightStats weight_decrease_check(const System& sys,
                                  const std::vector<Term>& terms,
                                  std::size_t bit_cap = kWeightBitCap);

}  // namespace ddrs
