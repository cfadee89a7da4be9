#include "brsc/complex.hpp"

#include <algorithm>

#include "brsc/errors.hpp"

namespace brsc {

SimplicialComplex::SimplicialComplex(Universe universe, std::vector<Mask> faces)
    : universe_(std::move(universe)) {
  const Mask all = universe_.all();
  Mask covered;
  for (Mask f : faces) {
    if (!f.subset_of(all))
      throw UsageError("face uses vertices outside the universe");
    covered = covered | f;
  }
  // Every singleton is a face, so uncovered vertices become singleton facets.
  for_each_bit(all - covered, [&](int v) { faces.push_back(Mask::single(v)); });

  std::sort(faces.begin(), faces.end(),
            [](Mask a, Mask b) { return a.count() > b.count() || (a.count() == b.count() && lex_less(a, b)); });
  for (Mask f : faces) {
    bool maximal = true;
    for (Mask g : facets_) {
      if (f.subset_of(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), lex_less);
  for (Mask f : facets_) rank_ = std::max(rank_, f.count());
}

bool SimplicialComplex::is_face(Mask x) const {
  for (Mask f : facets_)
    if (x.subset_of(f)) return true;
  return false;
}

FaceTable::FaceTable(const SimplicialComplex& s, int max_vertices) : n_(s.n_vertices()) {
  if (n_ > max_vertices)
    throw CapError("subset scan over " + std::to_string(n_) +
                   " vertices exceeds the cap of " + std::to_string(max_vertices) +
                   " (raise --max-vertices to override)");
  const std::uint64_t size = std::uint64_t{1} << n_;
  words_.assign(static_cast<std::size_t>((size + 63) >> 6), 0);
  auto mark = [&](Mask m) { words_[m.bits >> 6] |= std::uint64_t{1} << (m.bits & 63); };
  for (Mask f : s.facets()) mark(f);
  // Downward sweep: every marked set marks its one-smaller subsets.
  for (std::uint64_t m = size; m-- > 0;) {
    if (!test(Mask{m})) continue;
    for_each_bit(Mask{m}, [&](int v) { mark(Mask{m}.without(v)); });
  }
}

std::vector<Mask> faces_sorted(const SimplicialComplex& s, int max_size, int max_vertices) {
  const FaceTable table(s, max_vertices);
  std::vector<Mask> out;
  const std::uint64_t size = std::uint64_t{1} << s.n_vertices();
  for (std::uint64_t m = 0; m < size; ++m)
    if (table.test(Mask{m}) && (max_size < 0 || Mask{m}.count() <= max_size)) out.push_back(Mask{m});
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

bool is_simple(const SimplicialComplex& s) {
  const int n = s.n_vertices();
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!s.is_face(Mask::single(p).with(q))) return false;
  return true;
}

bool is_paving(const SimplicialComplex& s) {
  bool ok = true;
  for_each_combination(s.n_vertices(), s.dim(), [&](Mask m) {
    if (ok && !s.is_face(m)) ok = false;
  });
  return ok;
}

bool is_pure(const SimplicialComplex& s) {
  for (Mask f : s.facets())
    if (f.count() != s.rank()) return false;
  return true;
}

SimplicialComplex restriction(const SimplicialComplex& s, Mask w) {
  if (w.empty()) throw UsageError("restriction to the empty vertex set is not a complex");
  if (!w.subset_of(s.universe().all()))
    throw UsageError("restriction set uses vertices outside the universe");
  auto [universe, remap] = s.universe().restricted(w);
  std::vector<Mask> faces;
  faces.reserve(s.facets().size());
  for (Mask f : s.facets()) {
    Mask g;
    for_each_bit(f & w, [&](int v) { g = g.with(remap[static_cast<std::size_t>(v)]); });
    if (!g.empty()) faces.push_back(g);
  }
  return SimplicialComplex(std::move(universe), std::move(faces));
}

SimplicialComplex truncate(const SimplicialComplex& s, int k) {
  if (k < 1) throw UsageError("truncation requires k >= 1");
  std::vector<Mask> faces;
  for (Mask f : s.facets()) {
    if (f.count() <= k) {
      faces.push_back(f);
    } else {
      for_each_subset_of_size(f, k, [&](Mask m) { faces.push_back(m); });
    }
  }
  return SimplicialComplex(s.universe(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!(a.universe() == b.universe()))
    throw UsageError("join requires both complexes to share one universe");
  std::vector<Mask> faces = a.facets();
  faces.insert(faces.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(a.universe(), std::move(faces));
}

SimplicialComplex pure_core(const SimplicialComplex& s) {
  std::vector<Mask> top;
  Mask cover;
  for (Mask f : s.facets()) {
    if (f.count() == s.rank()) {
      top.push_back(f);
      cover = cover | f;
    }
  }
  auto [universe, remap] = s.universe().restricted(cover);
  std::vector<Mask> faces;
  faces.reserve(top.size());
  for (Mask f : top) {
    Mask g;
    for_each_bit(f, [&](int v) { g = g.with(remap[static_cast<std::size_t>(v)]); });
    faces.push_back(g);
  }
  return SimplicialComplex(std::move(universe), std::move(faces));
}

}  // namespace brsc
