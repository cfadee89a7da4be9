#include "brsc/isomorphism.hpp"

#include <algorithm>

#include "brsc/errors.hpp"

namespace brsc {

namespace {

// Multiset of facet sizes through each vertex; isomorphisms preserve it.
std::vector<std::vector<int>> vertex_signatures(const SimplicialComplex& s) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(s.n_vertices()));
  for (const Mask f : s.facets())
    for_each_bit(f, [&](int v) { sig[static_cast<std::size_t>(v)].push_back(f.count()); });
  for (auto& v : sig) std::sort(v.begin(), v.end());
  return sig;
}

std::vector<int> facet_size_profile(const SimplicialComplex& s) {
  std::vector<int> sizes;
  sizes.reserve(s.facets().size());
  for (const Mask f : s.facets()) sizes.push_back(f.count());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const SimplicialComplex& a,
                                            const SimplicialComplex& b) {
  const int n = a.n_vertices();
  if (n != b.n_vertices()) return std::nullopt;
  if (n > 16) throw CapError("isomorphism search is capped at 16 vertices");
  if (facet_size_profile(a) != facet_size_profile(b)) return std::nullopt;

  const auto sig_a = vertex_signatures(a);
  const auto sig_b = vertex_signatures(b);

  std::vector<Mask> b_facets = b.facets();
  std::sort(b_facets.begin(), b_facets.end(),
            [](Mask x, Mask y) { return x.bits < y.bits; });
  const auto is_b_facet = [&](Mask m) {
    return std::binary_search(b_facets.begin(), b_facets.end(), m,
                              [](Mask x, Mask y) { return x.bits < y.bits; });
  };

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  Mask used_a, used_b;

  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used_b.test(w) || sig_a[static_cast<std::size_t>(v)] != sig_b[static_cast<std::size_t>(w)])
        continue;
      image[static_cast<std::size_t>(v)] = w;
      used_a = used_a.with(v);
      used_b = used_b.with(w);

      bool ok = true;
      for (const Mask f : a.facets()) {
        if (!f.test(v) || !f.subset_of(used_a)) continue;
        Mask mapped;
        for_each_bit(f, [&](int x) { mapped = mapped.with(image[static_cast<std::size_t>(x)]); });
        if (!is_b_facet(mapped)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1)) return true;

      image[static_cast<std::size_t>(v)] = -1;
      used_a = used_a.without(v);
      used_b = used_b.without(w);
    }
    return false;
  };

  if (rec(rec, 0)) return image;
  return std::nullopt;
}

}  // namespace brsc
