#include "brsc/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "brsc/errors.hpp"
#include "brsc/tbrsc.hpp"

namespace brsc {
namespace {

using boost::multiprecision::cpp_int;

struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Fraction-free Gaussian elimination; exact over the integers.
int matrix_rank(std::vector<std::vector<cpp_int>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Diagonal of the Smith normal form: nonnegative, each entry dividing the
// next, one entry per unit of rank.
std::vector<cpp_int> smith_diagonal(std::vector<std::vector<cpp_int>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<cpp_int> diagonal;
  for (int t = 0; t < rows && t < cols; ++t) {
    int pr = -1;
    int pc = -1;
    cpp_int best = 0;
    for (int r = t; r < rows; ++r) {
      for (int c = t; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        const cpp_int a = abs(m[r][c]);
        if (pr < 0 || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    std::swap(m[pr], m[t]);
    for (int r = 0; r < rows; ++r) std::swap(m[r][pc], m[r][t]);

    bool settled = false;
    while (!settled) {
      settled = true;
      for (int r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        const cpp_int q = m[r][t] / m[t][t];
        for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[r], m[t]);
          settled = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        const cpp_int q = m[t][c] / m[t][t];
        for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (int r = 0; r < rows; ++r) std::swap(m[r][c], m[r][t]);
          settled = false;
        }
      }
      if (!settled) continue;
      // Pivot must divide everything below and to the right.
      for (int r = t + 1; r < rows && settled; ++r) {
        for (int c = t + 1; c < cols && settled; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            for (int cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            settled = false;
          }
        }
      }
    }
    diagonal.push_back(abs(m[t][t]));
  }
  return diagonal;
}

// True when some proper epsilon member contains exactly one of p and q,
// which makes the pair an edge of the recovered complex.
bool separated_pair(const MooreFamily& eps, int p, int q) {
  const Mask full = eps.universe().all();
  for (const Mask z : eps.members()) {
    if (z == full) continue;
    if (z.test(p) != z.test(q)) return true;
  }
  return false;
}

std::vector<Mask> graph_components(const Universe& u,
                                   const std::vector<std::pair<int, int>>& edges) {
  DisjointSet dsu(u.size());
  for (const auto& [p, q] : edges) dsu.unite(p, q);
  std::vector<Mask> out;
  std::vector<int> slot(u.size(), -1);
  for (int v = 0; v < u.size(); ++v) {
    const int root = dsu.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.push_back(Mask{});
    }
    out[slot[root]] = out[slot[root]].with(v);
  }
  return out;
}

std::vector<std::vector<cpp_int>> to_big(
    const std::vector<std::vector<int>>& entries) {
  std::vector<std::vector<cpp_int>> big;
  big.reserve(entries.size());
  for (const auto& row : entries) {
    big.emplace_back(row.begin(), row.end());
  }
  return big;
}

}  // namespace

bool is_connected(const SimplicialComplex& s) {
  const Universe& u = s.universe();
  DisjointSet dsu(u.size());
  for (const Mask f : s.facets()) {
    const int anchor = f.lowest();
    for_each_bit(f, [&](int v) { dsu.unite(anchor, v); });
  }
  const int root = dsu.find(0);
  for (int v = 1; v < u.size(); ++v) {
    if (dsu.find(v) != root) return false;
  }
  return true;
}

FlatGraph flat_graph(const SimplicialComplex& s, int max_vertices) {
  const MooreFamily eps = epsilon(s, max_vertices);
  const Universe& u = s.universe();
  const Mask full = u.all();

  FlatGraph g{u, {}, {}, {}};
  for (int p = 0; p < u.size(); ++p) {
    for (int q = p + 1; q < u.size(); ++q) {
      const Mask pair = Mask{}.with(p).with(q);
      for (const Mask z : eps.members()) {
        if (z != full && pair.subset_of(z)) {
          g.edges.emplace_back(p, q);
          break;
        }
      }
    }
  }
  g.components = graph_components(u, g.edges);
  g.trivial.reserve(g.components.size());
  for (const Mask c : g.components) {
    bool has_edge = false;
    for_each_subset_of_size(c, 2, [&](Mask pair) {
      if (has_edge) return;
      const std::vector<int> pq = pair.elements();
      if (separated_pair(eps, pq[0], pq[1])) has_edge = true;
    });
    g.trivial.push_back(has_edge ? 0 : 1);
  }
  return g;
}

std::string flat_graph_dot(const FlatGraph& g) {
  std::ostringstream out;
  out << "graph flats {\n";
  for (int v = 0; v < g.universe.size(); ++v) {
    bool dashed = false;
    for (std::size_t i = 0; i < g.components.size(); ++i) {
      if (g.components[i].test(v)) {
        dashed = g.trivial[i] != 0;
        break;
      }
    }
    out << "  \"" << g.universe.label(v) << "\"";
    if (dashed) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& [p, q] : g.edges) {
    out << "  \"" << g.universe.label(p) << "\" -- \"" << g.universe.label(q)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

int pi1_rank(const SimplicialComplex& s, int max_vertices) {
  const TbCheck check = is_tbrsc(s, max_vertices);
  if (!check.holds) {
    throw UsageError(
        "pi1_rank requires a truncation of a representable complex; face " +
        s.universe().set_string(*check.witness) + " obstructs recovery");
  }
  const int d = s.dim();
  if (d == 0) {
    if (s.universe().size() == 1) return 0;
    throw UsageError("pi1_rank requires a connected complex");
  }
  if (!is_connected(s)) {
    throw Error("recovered truncation is unexpectedly disconnected");
  }
  if (d == 1) {
    int edges = 0;
    for_each_combination(s.universe().size(), 2, [&](Mask pair) {
      if (s.is_face(pair)) ++edges;
    });
    return edges - s.universe().size() + 1;
  }
  const FlatGraph g = flat_graph(s, max_vertices);
  long long nontrivial = 0;
  long long trivial_total = 0;
  long long overlap = 0;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (g.trivial[i]) {
      const long long size = g.components[i].count();
      trivial_total += size;
      overlap += choose2(size);
    } else {
      ++nontrivial;
    }
  }
  return static_cast<int>(choose2(nontrivial + trivial_total - 1) - overlap);
}

EdgePathPresentation edge_path_presentation(const SimplicialComplex& s,
                                            int max_vertices) {
  const Universe& u = s.universe();
  if (u.size() > max_vertices) {
    throw CapError("edge path presentation capped at " +
                   std::to_string(max_vertices) + " vertices");
  }
  if (!is_connected(s)) {
    throw UsageError("edge path presentation requires a connected complex");
  }
  const int n = u.size();

  std::vector<std::pair<int, int>> unordered;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (s.is_face(Mask{}.with(p).with(q))) unordered.emplace_back(p, q);
    }
  }

  EdgePathPresentation out;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q || !s.is_face(Mask{}.with(p).with(q))) continue;
      index[p][q] = static_cast<int>(out.generators.size());
      out.generators.emplace_back(p, q);
    }
  }

  // Breadth-first spanning tree from the smallest vertex, neighbors in
  // ascending order.
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int p = queue[head];
    for (int q = 0; q < n; ++q) {
      if (seen[q] || index[p][q] < 0) continue;
      seen[q] = 1;
      out.tree.emplace_back(std::min(p, q), std::max(p, q));
      queue.push_back(q);
    }
  }
  std::sort(out.tree.begin(), out.tree.end());

  for (const auto& [p, q] : unordered) {
    out.relators.push_back({index[q][p] + 1, -(index[p][q] + 1)});
  }
  for_each_combination(n, 3, [&](Mask triple) {
    if (!s.is_face(triple)) return;
    std::vector<int> v;
    for_each_bit(triple, [&](int x) { v.push_back(x); });
    out.relators.push_back(
        {index[v[0]][v[1]] + 1, index[v[1]][v[2]] + 1, -(index[v[0]][v[2]] + 1)});
  });
  for (const auto& [p, q] : out.tree) {
    out.relators.push_back({index[p][q] + 1});
  }

  // Collapse both directions of an edge onto one column and take the exact
  // rank; the direction-identifying relators vanish under the collapse.
  std::vector<std::vector<int>> edge_col(n, std::vector<int>(n, -1));
  for (std::size_t e = 0; e < unordered.size(); ++e) {
    edge_col[unordered[e].first][unordered[e].second] = static_cast<int>(e);
    edge_col[unordered[e].second][unordered[e].first] = static_cast<int>(e);
  }
  std::vector<std::vector<cpp_int>> rows;
  auto add_row = [&](const std::vector<int>& word) {
    std::vector<cpp_int> row(unordered.size(), 0);
    bool nonzero = false;
    for (const int signed_index : word) {
      const auto& [p, q] = out.generators[std::abs(signed_index) - 1];
      row[edge_col[p][q]] += signed_index > 0 ? 1 : -1;
      nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  };
  for (const auto& word : out.relators) add_row(word);
  out.abelianized_rank =
      static_cast<int>(unordered.size()) - matrix_rank(std::move(rows));
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& s, int k,
                               int max_vertices) {
  if (k < 2 || k > s.rank()) {
    throw UsageError("boundary map needs 2 <= k <= rank");
  }
  const std::vector<Mask> all = faces_sorted(s, k, max_vertices);
  BoundaryMatrix b;
  for (const Mask f : all) {
    if (f.count() == k - 1) b.rows.push_back(f);
    if (f.count() == k) b.cols.push_back(f);
  }
  b.entries.assign(b.rows.size(), std::vector<int>(b.cols.size(), 0));

  auto row_of = [&](Mask f) {
    const auto it = std::lower_bound(b.rows.begin(), b.rows.end(), f, lex_less);
    return static_cast<int>(it - b.rows.begin());
  };
  for (std::size_t c = 0; c < b.cols.size(); ++c) {
    int i = 0;
    for_each_bit(b.cols[c], [&](int x) {
      b.entries[row_of(b.cols[c].without(x))][c] = i % 2 == 0 ? 1 : -1;
      ++i;
    });
  }
  return b;
}

std::vector<int> betti(const SimplicialComplex& s, int max_vertices) {
  const int top = s.rank();
  const std::vector<Mask> all = faces_sorted(s, -1, max_vertices);
  std::vector<int> count(top + 1, 0);
  for (const Mask f : all) {
    if (!f.empty()) ++count[f.count()];
  }
  std::vector<int> rank_of_map(top + 2, 0);
  for (int k = 2; k <= top; ++k) {
    rank_of_map[k] = matrix_rank(to_big(boundary_matrix(s, k, max_vertices).entries));
  }
  std::vector<int> out(top);
  for (int dim = 0; dim < top; ++dim) {
    const int size = dim + 1;
    out[dim] = count[size] - rank_of_map[size] -
               (size + 1 <= top ? rank_of_map[size + 1] : 0);
  }
  return out;
}

Homology homology(const SimplicialComplex& s, int max_vertices) {
  Homology h;
  h.betti = betti(s, max_vertices);
  h.torsion.assign(h.betti.size(), {});
  // Torsion of the group in dimension d comes from the boundary map out of
  // the faces of size d + 2.
  for (int dim = 0; dim + 2 <= s.rank(); ++dim) {
    const std::vector<cpp_int> diagonal =
        smith_diagonal(to_big(boundary_matrix(s, dim + 2, max_vertices).entries));
    for (const cpp_int& d : diagonal) {
      if (d > 1) h.torsion[dim].push_back(d);
    }
  }
  return h;
}

}  // namespace brsc
