#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brsc/boolmatrix.hpp"
#include "brsc/complex.hpp"

namespace brsc {

// The uniform matroid U_{k,n}. Requires 1 <= k <= n.
SimplicialComplex uniform(int k, int n);

// Expectation on the join of a fixture with a named partner fixture.
struct JoinExpectation {
  std::string partner;
  // The join fails recovery exactly at this face.
  std::optional<Mask> not_tbrsc_witness;
  // The join equals this fixture's complex.
  std::optional<std::string> equals;
};

// Partial report pinned to a fixture; every set field is recomputed and
// compared by verify_fixture.
struct FixtureExpectations {
  std::optional<int> dim;
  std::optional<bool> simple;
  std::optional<bool> paving;
  std::optional<bool> pure;
  std::optional<bool> matroid;
  std::optional<bool> br;
  std::optional<bool> tbrsc;
  std::optional<Mask> br_witness;
  std::optional<Mask> tbrsc_witness;
  std::optional<int> pi1;
  // Exact member list of the epsilon family.
  std::optional<std::vector<Mask>> epsilon_members;
  // A flat of the recovered representation that left the epsilon family.
  std::optional<Mask> lift_flat_outside_epsilon;
  std::optional<bool> pure_core_tbrsc;
  std::optional<bool> truncation3_pure;
  std::optional<bool> truncation3_paving;
  std::optional<bool> truncation3_br;
  std::optional<bool> truncation3_tbrsc;
  std::optional<JoinExpectation> join_with;
};

struct Fixture {
  std::string name;
  std::string note;
  SimplicialComplex complex;
  std::optional<BooleanMatrix> matrix;  // set when built from a matrix
  FixtureExpectations expected;
};

// The eleven named fixtures.
const std::vector<std::string>& fixture_names();

// Builds a named fixture; throws UsageError for unknown names.
Fixture example(const std::string& name);

// Recomputes every expectation the fixture pins; returns one message per
// mismatch, so an empty result means the fixture reproduces exactly.
std::vector<std::string> verify_fixture(const Fixture& f,
                                        int max_vertices = kDefaultEnumCap);

// Paving complex of dimension d on (d+1)(d+2) vertices a_0..a_d and
// b_{i0}..b_{id}: all faces of size d+1 except, for each i, the block B_i
// and the (d+1)-subsets of (A minus a_i) union (B_i minus b_{i0}). Inside
// the class of recoverable pavings but not representable, while every
// one-vertex-deleted restriction is representable: the class is not closed
// under restriction, at the smallest possible vertex count. Requires
// 2 <= d <= 4 (the facet list grows like C((d+1)(d+2), d+1)).
SimplicialComplex swirl(int d);

// Dimension-2 complex on n+9 vertices x_0..x_n, y_2..y_5, z_2..z_5 whose
// missing triples are the consecutive ones along three chained paths: the
// x-path, and a y- and z-path glued to x_0, x_1, x_n at their ends. Not
// recoverable, yet every one-vertex-deleted restriction is. Requires n >= 6.
SimplicialComplex nfb_complex(int n);

// The five dimension-2 paving complexes on six vertices, up to isomorphism,
// that are recoverable truncations but not representable, each given by its
// missing triples.
std::vector<SimplicialComplex> six_classification();

}  // namespace brsc
