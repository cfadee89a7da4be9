#pragma once

#include <optional>
#include <vector>

#include "brsc/complex.hpp"

namespace brsc {

// Vertex bijection carrying the facets of `a` onto the facets of `b`, as a
// map from vertex index in `a` to vertex index in `b`. Among all such
// bijections the image sequence is lexicographically smallest. Universes may
// carry different labels; only the face structure matters.
std::optional<std::vector<int>> isomorphism(const SimplicialComplex& a,
                                            const SimplicialComplex& b);

inline bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return isomorphism(a, b).has_value();
}

}  // namespace brsc
