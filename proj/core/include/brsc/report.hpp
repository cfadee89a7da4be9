#pragma once

#include <optional>
#include <vector>

#include "brsc/complex.hpp"

namespace brsc {

// Everything the analyzers can say about one complex. The two topological
// fields are only filled on request; they are the expensive part and stay
// empty when the invariant is undefined for the complex.
struct ComplexReport {
  int dim = 0;
  int rank = 0;
  bool is_simple = false;
  bool is_paving = false;
  bool is_pure = false;
  bool is_connected = false;
  bool is_matroid = false;
  bool is_near_matroid = false;
  bool is_br = false;
  bool is_tbrsc = false;
  std::optional<Mask> br_witness;     // face breaking representability
  std::optional<Mask> tbrsc_witness;  // face breaking recovery
  std::optional<int> pi1;
  std::optional<std::vector<int>> betti_numbers;
};

ComplexReport analyze_complex(const SimplicialComplex& s,
                              bool with_topology = false,
                              int max_vertices = kDefaultEnumCap);

}  // namespace brsc
