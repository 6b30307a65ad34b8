#pragma once

// Ground-term generation for the verification suites: exhaustive
// enumeration by size and seeded random sampling. Both are fully
// deterministic; the random generator draws from the standardized
// mt19937_64 stream with rejection-free modular picks, so a given seed
// yields the same terms on every platform.

#include <cstddef>
#include <random>
#include <vector>

#include "ddrs/term.hpp"

namespace ddrs {

// Every ground term over the signature with size() <= max_size, in
// ascending term_compare order (by size, then symbol, then children).
std::vector<Term> enumerate_ground_terms(const Signature& sig,
                                         std::size_t max_size);

// A uniformly-shaped random ground term of exactly `size` nodes.
// Nested products are kept at most `max_product_depth` deep so that
// termination weights stay representable. Requires size >= 1.
Term random_ground_term(const Signature& sig, std::size_t size,
                        std::mt19937_64& rng,
                        std::size_t max_product_depth = 3);

}  // namespace ddrs
