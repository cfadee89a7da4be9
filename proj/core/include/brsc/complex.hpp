#pragma once

#include <vector>

#include "brsc/mask.hpp"
#include "brsc/universe.hpp"

namespace brsc {

// Default cap on the universe size for operations that scan all 2^n subsets
// (face tables, flats, the epsilon family, exhaustive enumeration). Callers
// can raise it explicitly; the CLI exposes --max-vertices.
inline constexpr int kDefaultEnumCap = 20;

// Finite simplicial complex: a universe V plus a face family H ⊆ 2^V that
// contains every singleton and is closed under subsets. Stored as the
// antichain of facets (maximal faces); X is a face iff it lies under a facet.
class SimplicialComplex {
 public:
  // Normalizes the given faces: drops non-maximal ones, and adds a singleton
  // facet for every vertex not covered (every singleton is a face of every
  // complex by definition). Faces must fit inside the universe.
  SimplicialComplex(Universe universe, std::vector<Mask> faces);

  const Universe& universe() const { return universe_; }
  int n_vertices() const { return universe_.size(); }

  // The maximal faces: a lex-sorted antichain whose union is the universe.
  const std::vector<Mask>& facets() const { return facets_; }

  int rank() const { return rank_; }    // size of the largest face
  int dim() const { return rank_ - 1; }

  bool is_face(Mask x) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.universe_ == b.universe_ && a.facets_ == b.facets_;
  }

 private:
  Universe universe_;
  std::vector<Mask> facets_;
  int rank_ = 0;
};

// Membership bitmap over all 2^n subsets; the workhorse behind every
// exhaustive scan. Construction requires n <= max_vertices.
class FaceTable {
 public:
  FaceTable(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap);

  int n_vertices() const { return n_; }
  bool test(Mask m) const { return words_[m.bits >> 6] >> (m.bits & 63) & 1; }

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// All faces with at most max_size vertices (every face when max_size < 0),
// sorted by size then lex. Scans 2^n subsets, hence the cap.
std::vector<Mask> faces_sorted(const SimplicialComplex& s, int max_size = -1,
                               int max_vertices = kDefaultEnumCap);

bool is_simple(const SimplicialComplex& s);  // every 2-subset is a face
bool is_paving(const SimplicialComplex& s);  // every dim(S)-subset is a face
bool is_pure(const SimplicialComplex& s);    // every facet has maximal size

// Sub-complex induced on the vertices of w: faces are the faces inside w,
// relabelled to the restricted universe. w must be nonempty.
SimplicialComplex restriction(const SimplicialComplex& s, Mask w);

// Keeps the faces with at most k vertices. Requires k >= 1.
SimplicialComplex truncate(const SimplicialComplex& s, int k);

// Union of the two face families; both complexes must share one universe.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Sub-complex generated by the top-dimensional faces, on the (possibly
// smaller) universe they cover.
SimplicialComplex pure_core(const SimplicialComplex& s);

}  // namespace brsc
