#include "brsc/enumerate.hpp"

#include "brsc/errors.hpp"

namespace brsc {

void for_each_complex(int n, const std::function<bool(const SimplicialComplex&)>& visit) {
  if (n < 1) throw UsageError("need at least one vertex");
  if (n > 6) throw CapError("complex enumeration is capped at 6 vertices");
  const Universe universe = Universe::numbered(n);

  std::vector<Mask> order;
  for (int size = 2; size <= n; ++size)
    for_each_combination(n, size, [&](Mask m) { order.push_back(m); });

  std::vector<char> in(std::size_t{1} << n, 0);
  std::vector<Mask> chosen;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == order.size()) {
      std::vector<Mask> faces = chosen;
      for (int v = 0; v < n; ++v) faces.push_back(Mask::single(v));
      if (!visit(SimplicialComplex(universe, std::move(faces)))) stop = true;
      return;
    }
    const Mask m = order[i];
    self(self, i + 1);
    if (stop) return;

    bool closed = true;
    if (m.count() > 2) {
      for_each_bit(m, [&](int v) {
        if (closed && !in[m.without(v).bits]) closed = false;
      });
    }
    if (closed) {
      in[m.bits] = 1;
      chosen.push_back(m);
      self(self, i + 1);
      chosen.pop_back();
      in[m.bits] = 0;
    }
  };
  rec(rec, 0);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, double density) {
  if (n < 1 || n > Mask::kMaxVertices) throw UsageError("bad vertex count");
  Universe universe = Universe::numbered(n);
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<Mask> faces;
  for (int size = 2; size <= n; ++size)
    for_each_combination(n, size, [&](Mask m) {
      if (keep(rng)) faces.push_back(m);
    });
  for (int v = 0; v < n; ++v) faces.push_back(Mask::single(v));
  return SimplicialComplex(std::move(universe), std::move(faces));
}

SimplicialComplex random_paving(std::mt19937_64& rng, int n, int d, double density) {
  if (d < 1 || d + 1 > n) throw UsageError("need 1 <= d and d + 1 <= n");
  if (n > Mask::kMaxVertices) throw CapError("too many vertices");
  Universe universe = Universe::numbered(n);
  std::bernoulli_distribution keep(std::clamp(density, 0.0, 1.0));
  std::vector<Mask> faces;
  std::vector<Mask> tops;
  for_each_combination(n, d + 1, [&](Mask m) {
    tops.push_back(m);
    if (keep(rng)) faces.push_back(m);
  });
  if (faces.empty())
    faces.push_back(tops[std::uniform_int_distribution<std::size_t>(0, tops.size() - 1)(rng)]);
  for_each_combination(n, d, [&](Mask m) { faces.push_back(m); });
  return SimplicialComplex(std::move(universe), std::move(faces));
}

}  // namespace brsc
