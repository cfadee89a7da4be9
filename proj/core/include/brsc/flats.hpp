#pragma once

#include <optional>

#include "brsc/moore.hpp"

namespace brsc {

// X is a flat when every maximal face inside X extends to a face by every
// vertex outside X. The flats form a Moore family.
bool is_flat(const SimplicialComplex& s, const FaceTable& table, Mask x);

MooreFamily flats(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap);

// Smallest flat containing x, grown by saturation: a vertex joins whenever
// some face inside the current set fails to extend by it.
Mask closure(const SimplicialComplex& s, Mask x);

struct BrCheck {
  bool holds;
  // When the check fails: the size-lex smallest face no chain of flats
  // generates.
  std::optional<Mask> witness;
};

// Whether every face is a partial transversal of successive differences along
// a chain of flats — it suffices to test the facets.
BrCheck is_boolean_representable(const SimplicialComplex& s,
                                 int max_vertices = kDefaultEnumCap);

}  // namespace brsc
