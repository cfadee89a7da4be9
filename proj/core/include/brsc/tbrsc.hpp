#pragma once

#include <optional>
#include <vector>

#include "brsc/flats.hpp"
#include "brsc/moore.hpp"

namespace brsc {

// The family of sets X such that every face of dimension below dim(S) inside
// X extends to a face by every vertex outside X. It is intersection closed,
// contains every flat, and governs which truncations of representable
// complexes give back S.
MooreFamily epsilon(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap);

// The complex of transversals of the epsilon family. Always boolean
// representable; its truncation to rank(S) recovers S exactly when S is a
// truncated boolean representable complex.
SimplicialComplex s_epsilon(const SimplicialComplex& s,
                            int max_vertices = kDefaultEnumCap);

struct TbCheck {
  bool holds;
  // When the check fails: the size-lex smallest face that no chain in the
  // epsilon family generates.
  std::optional<Mask> witness;
};

// Whether S is the rank-truncation of some boolean representable complex:
// equivalently, every facet is a transversal of the epsilon family.
TbCheck is_tbrsc(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap);

// Flats of the truncation to rank k, computed from the flats of S: the flats
// containing no facet of the truncation survive, plus the full set.
MooreFamily truncation_flats(const SimplicialComplex& s, int k,
                             int max_vertices = kDefaultEnumCap);

// Paving complex of dimension d whose (d+1)-faces are the sets meeting the
// line in exactly d vertices. Requires 2 <= d <= |line| < |V|. Boolean
// representable, with the line and the full set as its only flats of size
// >= d.
SimplicialComplex b_complex(const Universe& universe, int d, Mask line,
                            int max_vertices = kDefaultEnumCap);

// The members of the epsilon family of size >= d other than the full set.
// For a truncated boolean representable paving complex of dimension d >= 2,
// joining the line complexes over these lines rebuilds S.
std::vector<Mask> lines_of(const SimplicialComplex& s,
                           int max_vertices = kDefaultEnumCap);

struct Decomposition {
  int d = 0;
  std::vector<Mask> lines;
};

// Decomposition of a boolean representable paving complex of dimension
// d >= 2 as a join of line complexes over its proper flats of size >= d.
// Returns nullopt exactly when those lines fail to rebuild S, which happens
// exactly when S is not boolean representable.
std::optional<Decomposition> br_decomposition(const SimplicialComplex& s,
                                              int max_vertices = kDefaultEnumCap);

// Rewrites a set of lines with sizes in {d, d+1, |V|-1} into lines of size d
// or d+1 with no containments and no two (d+1)-lines sharing d vertices,
// preserving the join of the line complexes.
std::vector<Mask> normalize_small_lines(const Universe& universe, int d,
                                        std::vector<Mask> lines);

// The largest truncated boolean representable subcomplex of a paving complex
// with the same universe and dimension, allowing the degenerate drop to
// dimension d-1. Non-paving complexes are rejected: no largest such
// subcomplex needs to exist for them.
SimplicialComplex largest_paving_tbrsc(const SimplicialComplex& s,
                                       int max_vertices = kDefaultEnumCap);

struct JoinCertificate {
  SimplicialComplex joined;
  // Pairwise meets of the two epsilon families; the join is the truncation
  // of this family's transversal complex.
  MooreFamily certificate;
  bool certified = false;
};

// Join of two truncated boolean representable paving complexes of one
// dimension, with the witness family showing the join stays in the class.
JoinCertificate join_preserves_tbpav(const SimplicialComplex& a,
                                     const SimplicialComplex& b,
                                     int max_vertices = kDefaultEnumCap);

// Whether S is a boolean representable paving complex of dimension d >= 2
// with no restriction isomorphic to the uniform matroid U_{d,d+2}: for a
// paving complex, every d+2 vertices must span some (d+1)-face.
bool in_class_y(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap);

// Whether a and b and their join all lie in that class.
bool y_join_check(const SimplicialComplex& a, const SimplicialComplex& b,
                  int max_vertices = kDefaultEnumCap);

}  // namespace brsc
