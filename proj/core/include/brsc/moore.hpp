#pragma once

#include <optional>
#include <vector>

#include "brsc/boolmatrix.hpp"
#include "brsc/complex.hpp"

namespace brsc {

// Family of subsets of a universe that contains the full set and is closed
// under intersection. Members are kept sorted by size then lex.
class MooreFamily {
 public:
  MooreFamily(Universe universe, std::vector<Mask> members);

  // Skips the quadratic intersection check, for families whose closure is
  // structural (pairwise meets of closed families, filtered lattices). The
  // property tests re-validate such families through the checking
  // constructor.
  static MooreFamily trusted(Universe universe, std::vector<Mask> members);

  const Universe& universe() const { return universe_; }
  const std::vector<Mask>& members() const { return members_; }
  bool contains(Mask m) const;

  // Intersection of the members containing x: the smallest member above it.
  Mask closure_of(Mask x) const;
  Mask bottom() const { return closure_of(Mask{}); }

  friend bool operator==(const MooreFamily& a, const MooreFamily& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  MooreFamily() = default;

  Universe universe_;
  std::vector<Mask> members_;
};

// Whether x can be ordered so that each element escapes the closure of the
// elements before it. These are the partial transversals of successive
// differences along chains of members.
bool tr_contains(const MooreFamily& f, Mask x);

// An ordering of x witnessing tr_contains, when one exists.
std::optional<std::vector<int>> tr_order(const MooreFamily& f, Mask x);

// The complex of all sets accepted by tr_contains. When the family bottom is
// nonempty its elements are accepted as singletons by no ordering, so the
// result would miss vertices; that case is rejected.
SimplicialComplex transversals(const MooreFamily& f,
                               int max_vertices = kDefaultEnumCap);

// One row per member (smallest sets first, the full set last), labelled by
// the member; the entry is 1 exactly when the vertex avoids the member.
BooleanMatrix matrix_from_moore_family(const MooreFamily& f);

}  // namespace brsc
