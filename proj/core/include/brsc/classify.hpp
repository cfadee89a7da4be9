#pragma once

#include <string>
#include <vector>

#include "brsc/complex.hpp"

namespace brsc {

// One isomorphism class surviving a classification scan.
struct PavingClass {
  SimplicialComplex representative;  // member with the smallest top-face set
  std::vector<Mask> top_faces;       // its faces of size d+1, lex order
  long long labeled_count = 0;       // labeled complexes in the class
};

struct ClassifyResult {
  int n = 0;
  int d = 0;
  long long scanned = 0;  // candidate top-face sets examined
  long long matched = 0;  // labeled complexes passing the filter
  std::vector<PavingClass> classes;
};

// Scans every complex on n numbered vertices that carries the full skeleton
// of d-sets plus an arbitrary set of (d+1)-faces, keeps the ones matching
// the filter, and reduces the survivors up to isomorphism.
//
// Filter grammar: property names combined with '!', '&', '|' and
// parentheses. Properties: tbrsc, br, simple, pure, paving, matroid,
// connected. Requires n <= 6 and 1 <= d <= n-1; threads shards the scan
// without changing the result.
ClassifyResult classify_pavings(int n, int d, const std::string& filter,
                                int threads = 1);

}  // namespace brsc
