#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "brsc/complex.hpp"

namespace brsc {

// Connectivity of the underlying graph: two vertices are linked when some
// face contains both.
bool is_connected(const SimplicialComplex& s);

// Graph on the vertex set joining p and q when some proper epsilon member
// contains both. A component is trivial when the complex recovered from the
// epsilon family has no edge inside it, which happens exactly when no proper
// member separates one of its pairs.
struct FlatGraph {
  Universe universe;
  std::vector<std::pair<int, int>> edges;  // vertex indices, p < q, lex order
  std::vector<Mask> components;            // ordered by smallest vertex
  std::vector<char> trivial;               // parallel to components
};

FlatGraph flat_graph(const SimplicialComplex& s,
                     int max_vertices = kDefaultEnumCap);

// Graphviz rendering; vertices of trivial components are drawn dashed.
std::string flat_graph_dot(const FlatGraph& g);

// Rank of the fundamental group, which is free for truncations of
// representable complexes: counted from the flat graph in dimension 2 and
// up, from the cycle rank in dimension 1. Refuses complexes that are not
// such truncations and 0-dimensional ones with several vertices.
int pi1_rank(const SimplicialComplex& s, int max_vertices = kDefaultEnumCap);

// Fundamental group presented by edge paths: one generator per ordered pair
// spanning an edge, relators identifying the two directions, flattening the
// triangles, and killing a breadth-first spanning tree. Relators hold signed
// 1-based indices into `generators`. The abelianized rank counts unordered
// edges minus the rank of the collapsed relator matrix, which equals the
// first Betti number.
struct EdgePathPresentation {
  std::vector<std::pair<int, int>> generators;
  std::vector<std::vector<int>> relators;
  std::vector<std::pair<int, int>> tree;  // unordered spanning tree edges
  int abelianized_rank = 0;
};

EdgePathPresentation edge_path_presentation(const SimplicialComplex& s,
                                            int max_vertices = kDefaultEnumCap);

// Matrix of the boundary map from faces of size k to faces of size k-1,
// rows and columns sorted lexicographically. Requires 2 <= k <= rank.
struct BoundaryMatrix {
  std::vector<Mask> rows;
  std::vector<Mask> cols;
  std::vector<std::vector<int>> entries;  // entries[row][col] in {-1,0,1}
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& s, int k,
                               int max_vertices = kDefaultEnumCap);

// Betti numbers of unreduced homology by dimension, 0 through dim(S),
// computed by exact rank over the rationals.
std::vector<int> betti(const SimplicialComplex& s,
                       int max_vertices = kDefaultEnumCap);

// Betti numbers together with the torsion coefficients of each homology
// group, read off the Smith normal forms of the boundary maps.
struct Homology {
  std::vector<int> betti;
  std::vector<std::vector<boost::multiprecision::cpp_int>> torsion;
};

Homology homology(const SimplicialComplex& s,
                  int max_vertices = kDefaultEnumCap);

}  // namespace brsc
