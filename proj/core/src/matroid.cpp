#include "brsc/matroid.hpp"

#include <algorithm>

#include "brsc/errors.hpp"

namespace brsc {

std::optional<ExchangeFailure> exchange_failure(const SimplicialComplex& s,
                                                int max_vertices) {
  const FaceTable table(s, max_vertices);
  std::vector<std::vector<Mask>> by_size(static_cast<std::size_t>(s.rank()) + 1);
  for_each_subset(s.universe().all(), [&](Mask m) {
    if (table.test(m)) by_size[static_cast<std::size_t>(m.count())].push_back(m);
  });
  for (auto& v : by_size) std::sort(v.begin(), v.end(), lex_less);

  for (std::size_t k = 0; k + 1 < by_size.size(); ++k) {
    for (const Mask smaller : by_size[k]) {
      for (const Mask larger : by_size[k + 1]) {
        bool extended = false;
        for_each_bit(larger - smaller, [&](int v) {
          if (!extended && table.test(smaller.with(v))) extended = true;
        });
        if (!extended) return ExchangeFailure{smaller, larger};
      }
    }
  }
  return std::nullopt;
}

SimplicialComplex uniform_matroid(int k, int n) {
  if (k < 1) throw UsageError("uniform matroid needs rank at least 1");
  if (n < 1) throw UsageError("uniform matroid needs at least one vertex");
  Universe universe = Universe::numbered(n);
  std::vector<Mask> facets;
  if (k >= n) {
    facets.push_back(universe.all());
  } else {
    for_each_combination(n, k, [&](Mask m) { facets.push_back(m); });
  }
  return SimplicialComplex(std::move(universe), std::move(facets));
}

SimplicialComplex matroid_from_disjoint_blocks(const Universe& universe,
                                               const std::vector<Mask>& blocks) {
  Mask used;
  for (const Mask b : blocks) {
    if (!b.subset_of(universe.all()))
      throw UsageError("block outside the vertex set");
    if (b.count() != 2 && b.count() != 3)
      throw UsageError("blocks must have size 2 or 3");
    if (b.intersects(used)) throw UsageError("blocks must be pairwise disjoint");
    used = used | b;
  }

  const int n = universe.size();
  const auto block_free = [&](Mask m) {
    for (const Mask b : blocks)
      if (b.subset_of(m)) return false;
    return true;
  };

  std::vector<Mask> faces;
  for (int size = std::min(3, n); size >= 1; --size) {
    for_each_combination(n, size, [&](Mask m) {
      if (block_free(m)) faces.push_back(m);
    });
  }
  return SimplicialComplex(universe, std::move(faces));
}

}  // namespace brsc
