#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brsc/flats.hpp"
#include "brsc/moore.hpp"

namespace brsc {

struct NearMatroidCheck {
  bool holds = false;
  // On failure: two faces of different sizes with the same closure, the
  // size-lex first such collision.
  std::optional<std::pair<Mask, Mask>> witness;
};

// A complex is a near-matroid when faces with the same proper closure all
// have the same size. With include_full_closure the full set counts too,
// which upgrades the test to a matroid characterisation.
NearMatroidCheck is_near_matroid(const SimplicialComplex& s,
                                 int max_vertices = kDefaultEnumCap,
                                 bool include_full_closure = false);

// The flats of a near-matroid together with each flat's rank: the common
// size of the faces closing to it, or -1 when no face closes there. The
// full set gets a rank only when its closing faces agree, which happens
// exactly for matroids.
struct FlatRanks {
  MooreFamily lattice;
  std::vector<int> ranks;  // parallel to lattice.members()

  int rank_of(Mask flat) const;  // UsageError when flat is not a member
};

FlatRanks rank_function(const SimplicialComplex& s,
                        int max_vertices = kDefaultEnumCap);

// For a boolean representable near-matroid the k-truncation is again a
// transversal complex: of the flats of rank below k, topped by the full
// set. Requires k >= 1.
MooreFamily nm_truncation_flats(const SimplicialComplex& s, int k,
                                int max_vertices = kDefaultEnumCap);

// Flat family whose transversal complex is the pure core of the
// k-truncation: the flats lying on a rank-by-rank chain from the empty set
// up to rank k-1. Requires 1 <= k <= rank.
MooreFamily nm_pure_core_flats(const SimplicialComplex& s, int k,
                               int max_vertices = kDefaultEnumCap);

struct PureCoreCertificate {
  SimplicialComplex core;  // pure core of the k-truncation
  MooreFamily family;      // flat family backing the certificate
  bool certified = false;  // core was rebuilt from the family
};

// Certifies that the pure core of the k-truncation of a boolean
// representable complex is itself a truncation of a representable complex.
// Supported for k <= 3 only; from k = 4 on the conclusion can fail.
PureCoreCertificate spch_pure_core(const SimplicialComplex& s, int k,
                                   int max_vertices = kDefaultEnumCap);

// Smallest face containing `face`, inside `target_flat`, whose closure is
// exactly the target. For representable complexes such an extension exists
// whenever the target is the closure of some face.
std::optional<Mask> extend_face_matching_closure(const SimplicialComplex& s,
                                                 Mask face, Mask target_flat);

// A chain of flats from `flat` up to the full set in which each step is the
// closure of the previous flat plus one vertex and raises the rank by one,
// except possibly the last step. Requires a boolean representable
// near-matroid and throws when a step cannot be made.
std::vector<Mask> refinement_chain(const SimplicialComplex& s, Mask flat,
                                   int max_vertices = kDefaultEnumCap);

}  // namespace brsc
