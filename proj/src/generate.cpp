#include "ddrs/generate.hpp"

#include <stdexcept>

namespace ddrs {

std::vector<Term> enumerate_ground_terms(const Signature& sig,
                                         std::size_t max_size) {
  // Dynamic programming on node count. Emitting symbols in declaration
  // order and left operands across sizes 1..s-2 in enumeration order
  // keeps every by_size bucket — and their concatenation — sorted
  // under term_compare.
  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<Term>& out = by_size[s];
    for (Sym sym : sig.symbols()) {
      switch (arity(sym)) {
        case 0:
          if (s == 1) out.push_back(Term::make(sym, {}));
          break;
        case 1:
          if (s >= 2)
            for (const Term& c : by_size[s - 1])
              out.push_back(Term::make(sym, {c}));
          break;
        case 2:
          if (s >= 3)
            for (std::size_t ls = 1; ls + 2 <= s; ++ls)
              for (const Term& l : by_size[ls])
                for (const Term& r : by_size[s - 1 - ls])
                  out.push_back(Term::make(sym, {l, r}));
          break;
      }
    }
  }
  std::vector<Term> all;
  for (std::size_t s = 1; s <= max_size; ++s)
    all.insert(all.end(), by_size[s].begin(), by_size[s].end());
  return all;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

Term random_rec(const Signature& sig, std::size_t size, std::mt19937_64& rng,
                std::size_t product_budget) {
  if (size == 1) {
    std::vector<Sym> consts;
    for (Sym s : sig.symbols())
      if (arity(s) == 0) consts.push_back(s);
    return Term::make(consts[pick(rng, consts.size())], {});
  }
  std::vector<Sym> ops;
  for (Sym s : sig.symbols()) {
    if (arity(s) == 1)
      ops.push_back(s);
    else if (arity(s) == 2 && size >= 3 &&
             (s != Sym::Times || product_budget > 0))
      ops.push_back(s);
  }
  const Sym s = ops[pick(rng, ops.size())];
  if (arity(s) == 1)
    return Term::make(s, {random_rec(sig, size - 1, rng, product_budget)});
  const std::size_t left = 1 + pick(rng, size - 2);
  const std::size_t budget =
      s == Sym::Times ? product_budget - 1 : product_budget;
  Term l = random_rec(sig, left, rng, budget);
  Term r = random_rec(sig, size - 1 - left, rng, budget);
  return Term::make(s, {std::move(l), std::move(r)});
}

}  // namespace

Term random_ground_term(const Signature& sig, std::size_t size,
                        std::mt19937_64& rng,
                        std::size_t max_product_depth) {
  if (size == 0)
    throw std::invalid_argument("random_ground_term: size must be >= 1");
  return random_rec(sig, size, rng, max_product_depth);
}

}  // namespace ddrs
