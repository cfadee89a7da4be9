#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "brsc/enumerate.hpp"
#include "brsc/errors.hpp"
#include "brsc/matroid.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"
#include "helpers.hpp"

using namespace brsc;
using test::labset;
using test::labsets;
using test::numbered_complex;
using test::paving_complement;

namespace {

SimplicialComplex holes6() {
  return paving_complement(6, 2,
                           labsets({{1, 3, 5},
                                    {2, 3, 5},
                                    {1, 4, 6},
                                    {2, 4, 6},
                                    {3, 4, 6},
                                    {4, 5, 6}}));
}

SimplicialComplex triangle4() {
  return numbered_complex(4, {{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}});
}

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Component count of the complex's own graph, found by direct union-find
// over the facets.
int facet_components(const SimplicialComplex& s) {
  const int n = s.universe().size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Mask f : s.facets()) {
    const int anchor = f.lowest();
    for_each_bit(f, [&](int v) { parent[find(v)] = find(anchor); });
  }
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) ++roots;
  }
  return roots;
}

// Component count of the graph joining vertices that share a proper epsilon
// member, recomputed here without the flat_graph code path.
int gamma_components(const SimplicialComplex& s) {
  const MooreFamily eps = epsilon(s);
  const int n = s.universe().size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Mask z : eps.members()) {
    if (z == s.universe().all() || z.count() < 2) continue;
    const int anchor = z.lowest();
    for_each_bit(z, [&](int v) { parent[find(v)] = find(anchor); });
  }
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) ++roots;
  }
  return roots;
}

// Chained join of line complexes on one universe, certified at every step.
SimplicialComplex certified_join(const Universe& u,
                                 const std::vector<Mask>& lines) {
  SimplicialComplex s = b_complex(u, 2, lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const JoinCertificate cert = join_preserves_tbpav(s, b_complex(u, 2, lines[i]));
    REQUIRE(cert.certified);
    s = cert.joined;
  }
  return s;
}

std::vector<Mask> random_lines(std::mt19937_64& rng, int n, int count) {
  std::vector<Mask> lines;
  std::uniform_int_distribution<int> size_pick(2, 4);
  while (static_cast<int>(lines.size()) < count) {
    const int size = size_pick(rng);
    Mask line;
    std::uniform_int_distribution<int> vertex(0, n - 1);
    while (line.count() < size) line = line.with(vertex(rng));
    if (std::find(lines.begin(), lines.end(), line) == lines.end()) {
      lines.push_back(line);
    }
  }
  return lines;
}

}  // namespace

TEST_CASE("connectivity follows the facet graph") {
  CHECK(is_connected(uniform_matroid(2, 4)));
  CHECK(is_connected(uniform_matroid(1, 1)));
  CHECK(is_connected(holes6()));
  CHECK_FALSE(is_connected(numbered_complex(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_connected(uniform_matroid(1, 3)));
  // A block matroid's facets are transversals, which tie everything together.
  CHECK(is_connected(matroid_from_disjoint_blocks(
      Universe::numbered(4), labsets({{1, 2}, {3, 4}}))));
}

TEST_CASE("boundary matrices carry alternating signs and compose to zero") {
  const SimplicialComplex tri = uniform_matroid(2, 3);
  const BoundaryMatrix b2 = boundary_matrix(tri, 2);
  REQUIRE(b2.rows.size() == 3);
  REQUIRE(b2.cols.size() == 3);
  CHECK(b2.rows[0] == labset({1}));
  CHECK(b2.cols[0] == labset({1, 2}));
  CHECK(b2.cols[2] == labset({2, 3}));
  // Column {1,2}: the map sends it to {2} minus {1}.
  CHECK(b2.entries[0][0] == -1);
  CHECK(b2.entries[1][0] == 1);
  CHECK(b2.entries[2][0] == 0);

  const SimplicialComplex u35 = uniform_matroid(3, 5);
  const BoundaryMatrix first = boundary_matrix(u35, 2);
  const BoundaryMatrix second = boundary_matrix(u35, 3);
  REQUIRE(first.cols == second.rows);
  for (std::size_t r = 0; r < first.rows.size(); ++r) {
    for (std::size_t c = 0; c < second.cols.size(); ++c) {
      int sum = 0;
      for (std::size_t m = 0; m < first.cols.size(); ++m) {
        sum += first.entries[r][m] * second.entries[m][c];
      }
      CHECK(sum == 0);
    }
  }

  CHECK_THROWS_AS(boundary_matrix(tri, 1), UsageError);
  CHECK_THROWS_AS(boundary_matrix(tri, 4), UsageError);
}

TEST_CASE("betti numbers of standard shapes") {
  CHECK(betti(uniform_matroid(1, 3)) == std::vector<int>{3});
  CHECK(betti(uniform_matroid(2, 4)) == std::vector<int>{1, 3});
  CHECK(betti(numbered_complex(4, {{1, 2}, {3, 4}})) == std::vector<int>{2, 0});
  // Boundary of the tetrahedron: a 2-sphere.
  CHECK(betti(uniform_matroid(3, 4)) == std::vector<int>{1, 0, 1});
  // Full simplex: contractible.
  CHECK(betti(uniform_matroid(4, 4)) == std::vector<int>{1, 0, 0, 0});
  // Two-skeleton of the 5-simplex: simply connected, top cycles remain.
  const std::vector<int> skel = betti(uniform_matroid(3, 6));
  CHECK(skel[0] == 1);
  CHECK(skel[1] == 0);

  CHECK(betti(holes6()) == std::vector<int>{1, 1, 5});
}

TEST_CASE("unreduced zeroth homology counts components") {
  std::mt19937_64 rng(20260822);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial % 2;
    const SimplicialComplex s = random_complex(rng, n, 0.35);
    const std::vector<int> b = betti(s);
    CHECK(b[0] == facet_components(s));
  }
}

TEST_CASE("homology of the six vertex projective plane has torsion") {
  // Search for ten triangles on six vertices covering every edge exactly
  // twice; the count forces a closed surface of Euler characteristic one.
  std::vector<Mask> triples;
  for_each_combination(6, 3, [&](Mask t) { triples.push_back(t); });
  REQUIRE(triples.size() == 20);

  std::vector<Mask> chosen;
  for_each_combination(20, 10, [&](Mask pick) {
    if (!chosen.empty()) return;
    int degree[6][6] = {};
    for_each_bit(pick, [&](int i) {
      const std::vector<int> v = triples[static_cast<std::size_t>(i)].elements();
      ++degree[v[0]][v[1]];
      ++degree[v[0]][v[2]];
      ++degree[v[1]][v[2]];
    });
    for (int p = 0; p < 6; ++p) {
      for (int q = p + 1; q < 6; ++q) {
        if (degree[p][q] != 2) return;
      }
    }
    for_each_bit(pick, [&](int i) {
      chosen.push_back(triples[static_cast<std::size_t>(i)]);
    });
  });
  REQUIRE(chosen.size() == 10);

  const SimplicialComplex rp2(Universe::numbered(6), chosen);
  REQUIRE(is_connected(rp2));
  const Homology h = homology(rp2);
  CHECK(h.betti == std::vector<int>{1, 0, 0});
  REQUIRE(h.torsion.size() == 3);
  CHECK(h.torsion[0].empty());
  REQUIRE(h.torsion[1].size() == 1);
  CHECK(h.torsion[1][0] == 2);
  CHECK(h.torsion[2].empty());
}

TEST_CASE("flat graph of a single line complex") {
  const SimplicialComplex b12 = b_complex(Universe::numbered(6), 2, labset({1, 2}));
  const FlatGraph g = flat_graph(b12);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
  REQUIRE(g.components.size() == 5);
  CHECK(g.components[0] == labset({1, 2}));
  CHECK(g.trivial == std::vector<char>{0, 1, 1, 1, 1});

  CHECK(flat_graph_dot(g) ==
        "graph flats {\n"
        "  \"1\";\n"
        "  \"2\";\n"
        "  \"3\" [style=dashed];\n"
        "  \"4\" [style=dashed];\n"
        "  \"5\" [style=dashed];\n"
        "  \"6\" [style=dashed];\n"
        "  \"1\" -- \"2\";\n"
        "}\n");
}

TEST_CASE("flat graph of the six holes pattern") {
  const FlatGraph g = flat_graph(holes6());
  REQUIRE(g.components.size() == 3);
  CHECK(g.components[0] == labset({1, 2, 3, 5}));
  CHECK(g.components[1] == labset({4}));
  CHECK(g.components[2] == labset({6}));
  CHECK(g.trivial == std::vector<char>{0, 1, 1});
  CHECK(g.edges == std::vector<std::pair<int, int>>{
                       {0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 4}, {2, 4}});
}

TEST_CASE("fundamental group ranks of the named complexes") {
  CHECK(pi1_rank(holes6()) == 1);
  // One line on six vertices: one loaded component plus four loose vertices.
  CHECK(pi1_rank(b_complex(Universe::numbered(6), 2, labset({1, 2}))) == 6);
  // Two-skeleton of the 5-simplex is simply connected.
  CHECK(pi1_rank(uniform_matroid(3, 6)) == 0);
  // Dimension 1: cycle rank of the graph.
  CHECK(pi1_rank(uniform_matroid(2, 4)) == 3);
  CHECK(pi1_rank(numbered_complex(3, {{1, 2}, {2, 3}})) == 0);
  CHECK(pi1_rank(numbered_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == 1);
  // A point.
  CHECK(pi1_rank(uniform_matroid(1, 1)) == 0);

  CHECK_THROWS_AS(pi1_rank(triangle4()), UsageError);
  CHECK_THROWS_AS(pi1_rank(uniform_matroid(1, 3)), UsageError);
}

TEST_CASE("rank agrees between the complex and its recovered representation") {
  const SimplicialComplex s = holes6();
  const SimplicialComplex lifted = s_epsilon(s);
  CHECK(lifted.rank() >= s.rank());
  CHECK(pi1_rank(lifted) == pi1_rank(s));
  CHECK(betti(lifted)[1] == betti(s)[1]);
}

TEST_CASE("edge path presentation of small shapes") {
  const EdgePathPresentation full = edge_path_presentation(uniform_matroid(3, 3));
  CHECK(full.generators.size() == 6);
  CHECK(full.tree == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  // Three direction relators, one triangle, two tree edges.
  CHECK(full.relators.size() == 6);
  CHECK(full.abelianized_rank == 0);

  const EdgePathPresentation cycle =
      edge_path_presentation(numbered_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(cycle.generators.size() == 8);
  CHECK(cycle.tree.size() == 3);
  CHECK(cycle.relators.size() == 7);
  CHECK(cycle.abelianized_rank == 1);

  CHECK(edge_path_presentation(uniform_matroid(2, 4)).abelianized_rank == 3);
  CHECK(edge_path_presentation(holes6()).abelianized_rank == 1);

  CHECK_THROWS_AS(edge_path_presentation(numbered_complex(4, {{1, 2}, {3, 4}})),
                  UsageError);
}

TEST_CASE("abelianized rank equals the first betti number") {
  std::mt19937_64 rng(431);
  int seen = 0;
  for (int trial = 0; trial < 120 && seen < 40; ++trial) {
    const int n = 5 + trial % 2;
    const SimplicialComplex s = trial % 2 == 0
                                    ? random_complex(rng, n, 0.4)
                                    : random_paving(rng, n, 2, 0.6);
    if (!is_connected(s)) continue;
    ++seen;
    CHECK(edge_path_presentation(s).abelianized_rank == betti(s)[1]);
  }
  REQUIRE(seen >= 40);
}

TEST_CASE("simple complexes reduce the rank formula to component counting") {
  std::mt19937_64 rng(905);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 6 + trial % 2;
    const std::vector<Mask> lines = random_lines(rng, n, 2 + trial % 2);
    const SimplicialComplex s = certified_join(Universe::numbered(n), lines);
    REQUIRE(is_simple(s));
    const long long t = gamma_components(s);
    CHECK(pi1_rank(s) == choose2(t - 1));
  }
}

TEST_CASE("join instances match their homology ranks and carry no torsion") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + trial % 2;
    const std::vector<Mask> lines = random_lines(rng, n, 2 + trial % 3);
    const SimplicialComplex s = certified_join(Universe::numbered(n), lines);
    const int rank = pi1_rank(s);
    const Homology h = homology(s);
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == rank);
    for (const auto& factors : h.torsion) CHECK(factors.empty());
    CHECK(betti(s_epsilon(s))[1] == rank);
  }
}
