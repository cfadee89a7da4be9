#pragma once

#include <optional>

#include "brsc/complex.hpp"

namespace brsc {

// Exchange-property failure: no element of `larger - smaller` extends `smaller`.
struct ExchangeFailure {
  Mask smaller;
  Mask larger;
};

// Brute-force exchange property over all face pairs with |I| = |J| + 1.
// Returns the lex-first failing pair, or nullopt when S is a matroid.
std::optional<ExchangeFailure> exchange_failure(const SimplicialComplex& s,
                                                int max_vertices = kDefaultEnumCap);

inline bool is_matroid(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap) {
  return !exchange_failure(s, max_vertices).has_value();
}

// Uniform matroid U_{k,n} on labels "1".."n": faces are the sets of size <= k.
SimplicialComplex uniform_matroid(int k, int n);

// Faces of size <= 3 containing no block, for pairwise disjoint blocks of
// size 2 or 3. The result is always a matroid; the construction backs the
// small-vertex classification arguments.
SimplicialComplex matroid_from_disjoint_blocks(const Universe& universe,
                                               const std::vector<Mask>& blocks);

}  // namespace brsc
