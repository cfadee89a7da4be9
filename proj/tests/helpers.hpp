#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "brsc/complex.hpp"
#include "brsc/moore.hpp"

namespace brsc::test {

// Mask from 1-based numeric labels, for complexes on numbered universes.
inline Mask labset(std::initializer_list<int> labels) {
  Mask m;
  for (const int l : labels) m = m.with(l - 1);
  return m;
}

inline std::vector<Mask> labsets(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(labset(s));
  return out;
}

inline SimplicialComplex numbered_complex(
    int n, std::initializer_list<std::initializer_list<int>> faces) {
  return SimplicialComplex(Universe::numbered(n), labsets(faces));
}

// Dimension-d paving complex on "1".."n" from its list of missing (d+1)-sets.
inline SimplicialComplex paving_complement(int n, int d,
                                           const std::vector<Mask>& missing) {
  std::vector<Mask> faces;
  for_each_combination(n, d + 1, [&](Mask top) {
    for (const Mask m : missing)
      if (m == top) return;
    faces.push_back(top);
  });
  for_each_combination(n, d, [&](Mask f) { faces.push_back(f); });
  return SimplicialComplex(Universe::numbered(n), std::move(faces));
}

inline Mask random_subset(std::mt19937_64& rng, int n, double density = 0.5) {
  Mask m;
  std::bernoulli_distribution bit(density);
  for (int v = 0; v < n; ++v)
    if (bit(rng)) m = m.with(v);
  return m;
}

inline MooreFamily random_moore_family(std::mt19937_64& rng, int n, int seeds,
                                       double density = 0.5) {
  const Universe u = Universe::numbered(n);
  std::vector<Mask> members{u.all()};
  for (int i = 0; i < seeds; ++i) members.push_back(random_subset(rng, n, density));
  // Close under pairwise intersection.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Mask meet = members[i] & members[j];
      bool present = false;
      for (const Mask m : members)
        if (m == meet) present = true;
      if (!present) members.push_back(meet);
    }
  return MooreFamily(u, std::move(members));
}

}  // namespace brsc::test
