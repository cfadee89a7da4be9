#include "brsc/flats.hpp"

#include "brsc/errors.hpp"

namespace brsc {

bool is_flat(const SimplicialComplex& s, const FaceTable& table, Mask x) {
  const Mask outside = s.universe().all() - x;
  for (const Mask facet : s.facets()) {
    const Mask inside = facet & x;
    bool ok = true;
    for_each_bit(outside, [&](int p) {
      if (ok && !table.test(inside.with(p))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

MooreFamily flats(const SimplicialComplex& s, int max_vertices) {
  const FaceTable table(s, max_vertices);
  const int n = s.n_vertices();
  std::vector<Mask> members;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
    if (is_flat(s, table, Mask{bits})) members.push_back(Mask{bits});
  return MooreFamily(s.universe(), std::move(members));
}

Mask closure(const SimplicialComplex& s, Mask x) {
  if (!x.subset_of(s.universe().all()))
    throw UsageError("set lies outside the universe");
  Mask c = x;
  bool grew = true;
  while (grew) {
    grew = false;
    for_each_bit(s.universe().all() - c, [&](int p) {
      if (grew) return;
      for (const Mask facet : s.facets()) {
        if (!s.is_face((facet & c).with(p))) {
          c = c.with(p);
          grew = true;
          return;
        }
      }
    });
  }
  return c;
}

BrCheck is_boolean_representable(const SimplicialComplex& s, int max_vertices) {
  const MooreFamily lattice = flats(s, max_vertices);
  bool holds = true;
  for (const Mask facet : s.facets())
    if (!tr_contains(lattice, facet)) {
      holds = false;
      break;
    }
  if (holds) return {true, std::nullopt};

  // Some face is missed; report the size-lex smallest one.
  for (const Mask face : faces_sorted(s, -1, max_vertices))
    if (!tr_contains(lattice, face)) return {false, face};
  return {false, std::nullopt};  // unreachable
}

}  // namespace brsc
