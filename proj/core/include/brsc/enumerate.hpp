#pragma once

#include <functional>
#include <random>

#include "brsc/complex.hpp"

namespace brsc {

// Visits every simplicial complex on the numbered universe "1".."n" exactly
// once, in a fixed deterministic order. Stops early when the callback returns
// false. Throws CapError for n > 6 (the family is doubly exponential).
void for_each_complex(int n, const std::function<bool(const SimplicialComplex&)>& visit);

// Uniformly random facet antichain: each set of size >= 2 is made a face with
// the given density, then normalized. Always contains every singleton.
SimplicialComplex random_complex(std::mt19937_64& rng, int n, double density);

// Random paving complex of dimension d on "1".."n": keeps all faces of size
// <= d and a random subset of the (d+1)-sets.
SimplicialComplex random_paving(std::mt19937_64& rng, int n, int d, double density);

}  // namespace brsc
