#include "brsc/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "brsc/errors.hpp"

namespace brsc {

namespace {

int member_index(const MooreFamily& f, Mask m) {
  const auto& ms = f.members();
  const auto it = std::lower_bound(ms.begin(), ms.end(), m, size_lex_less);
  if (it == ms.end() || !(*it == m)) return -1;
  return static_cast<int>(it - ms.begin());
}

}  // namespace

NearMatroidCheck is_near_matroid(const SimplicialComplex& s, int max_vertices,
                                 bool include_full_closure) {
  const Mask full = s.universe().all();
  std::unordered_map<std::uint64_t, std::pair<int, Mask>> seen;
  for (const Mask x : faces_sorted(s, -1, max_vertices)) {
    const Mask c = closure(s, x);
    if (c == full && !include_full_closure) continue;
    const auto [it, fresh] =
        seen.try_emplace(c.bits, std::pair<int, Mask>{x.count(), x});
    if (!fresh && it->second.first != x.count())
      return {false, std::pair<Mask, Mask>{it->second.second, x}};
  }
  return {true, std::nullopt};
}

int FlatRanks::rank_of(Mask flat) const {
  const int idx = member_index(lattice, flat);
  if (idx < 0)
    throw UsageError("rank_of: " + lattice.universe().set_string(flat) +
                     " is not a flat");
  return ranks[idx];
}

FlatRanks rank_function(const SimplicialComplex& s, int max_vertices) {
  MooreFamily lattice = flats(s, max_vertices);
  const Mask full = s.universe().all();
  std::vector<int> ranks(lattice.members().size(), -1);
  std::vector<Mask> exemplar(ranks.size());
  bool full_consistent = true;
  for (const Mask x : faces_sorted(s, -1, max_vertices)) {
    const Mask c = closure(s, x);
    const int idx = member_index(lattice, c);
    if (ranks[idx] == -1) {
      ranks[idx] = x.count();
      exemplar[idx] = x;
    } else if (ranks[idx] != x.count()) {
      if (c == full) {
        full_consistent = false;
        continue;
      }
      throw UsageError("not a near-matroid: faces " +
                       s.universe().set_string(exemplar[idx]) + " and " +
                       s.universe().set_string(x) + " both close to " +
                       s.universe().set_string(c));
    }
  }
  if (!full_consistent) ranks[member_index(lattice, full)] = -1;
  return {std::move(lattice), std::move(ranks)};
}

MooreFamily nm_truncation_flats(const SimplicialComplex& s, int k,
                                int max_vertices) {
  if (k < 1) throw UsageError("nm_truncation_flats requires k >= 1");
  if (!is_boolean_representable(s, max_vertices).holds)
    throw UsageError(
        "nm_truncation_flats: the complex is not boolean representable");
  const FlatRanks fr = rank_function(s, max_vertices);
  const Mask full = s.universe().all();
  std::vector<Mask> members{full};
  for (std::size_t i = 0; i < fr.ranks.size(); ++i) {
    const Mask f = fr.lattice.members()[i];
    if (f == full) continue;
    if (fr.ranks[i] >= 0 && fr.ranks[i] < k) members.push_back(f);
  }
  return MooreFamily(s.universe(), std::move(members));
}

MooreFamily nm_pure_core_flats(const SimplicialComplex& s, int k,
                               int max_vertices) {
  if (k < 1 || k > s.rank())
    throw UsageError("nm_pure_core_flats requires 1 <= k <= rank");
  if (!is_boolean_representable(s, max_vertices).holds)
    throw UsageError(
        "nm_pure_core_flats: the complex is not boolean representable");
  const FlatRanks fr = rank_function(s, max_vertices);
  const auto& ms = fr.lattice.members();
  const Mask full = s.universe().all();
  const int count = static_cast<int>(ms.size());

  // A proper flat survives when it sits on a chain that climbs one rank per
  // step from the empty set up to rank k-1; the full set then tops it off.
  const auto on_level = [&](int i, int r) {
    return !(ms[i] == full) && fr.ranks[i] == r;
  };
  std::vector<char> down(count, 0), up(count, 0);
  for (int i = 0; i < count; ++i)
    if (on_level(i, 0)) down[i] = 1;
  for (int r = 0; r + 1 < k; ++r)
    for (int i = 0; i < count; ++i) {
      if (!down[i] || !on_level(i, r)) continue;
      for (int j = 0; j < count; ++j)
        if (on_level(j, r + 1) && ms[i].subset_of(ms[j]) && !(ms[i] == ms[j]))
          down[j] = 1;
    }
  for (int i = 0; i < count; ++i)
    if (on_level(i, k - 1)) up[i] = 1;
  for (int r = k - 2; r >= 0; --r)
    for (int i = 0; i < count; ++i) {
      if (up[i] || !on_level(i, r)) continue;
      for (int j = 0; j < count; ++j)
        if (up[j] && on_level(j, r + 1) && ms[i].subset_of(ms[j]) &&
            !(ms[i] == ms[j])) {
          up[i] = 1;
          break;
        }
    }

  std::vector<Mask> members{full};
  for (int i = 0; i < count; ++i)
    if (down[i] && up[i]) members.push_back(ms[i]);
  return MooreFamily(s.universe(), std::move(members));
}

PureCoreCertificate spch_pure_core(const SimplicialComplex& s, int k,
                                   int max_vertices) {
  if (k < 1) throw UsageError("spch_pure_core requires k >= 1");
  if (k > 3)
    throw UsageError(
        "spch_pure_core supports k <= 3 only; pure cores of deeper "
        "truncations can fail to be truncations of representable complexes");
  if (!is_boolean_representable(s, max_vertices).holds)
    throw UsageError("spch_pure_core: the complex is not boolean representable");

  const SimplicialComplex cut = truncate(s, k);
  const SimplicialComplex core = pure_core(cut);

  if (k <= 2 || s.rank() <= 2) {
    // Dimension at most one: the core is representable outright.
    MooreFamily family = flats(core, max_vertices);
    const bool ok = transversals(family, max_vertices) == core;
    return {core, std::move(family), ok};
  }

  // k == 3 on a complex of rank at least 3. Restrict to the vertices the
  // core keeps, then take the flats that meet no 2-vertex facet of the
  // restriction in exactly one vertex; the core is the 3-truncation of
  // their transversal complex.
  Mask support;
  for (const Mask f : cut.facets())
    if (f.count() == cut.rank()) support = support | f;
  const SimplicialComplex s1 = restriction(s, support);
  std::vector<Mask> edge_facets;
  for (const Mask f : s1.facets())
    if (f.count() == 2) edge_facets.push_back(f);
  const MooreFamily l1 = flats(s1, max_vertices);
  std::vector<Mask> members;
  for (const Mask f : l1.members()) {
    bool good = true;
    for (const Mask e : edge_facets)
      if ((f & e).count() == 1) {
        good = false;
        break;
      }
    if (good) members.push_back(f);
  }
  MooreFamily family(s1.universe(), std::move(members));
  const bool ok = truncate(transversals(family, max_vertices), 3) == core;
  return {core, std::move(family), ok};
}

std::optional<Mask> extend_face_matching_closure(const SimplicialComplex& s,
                                                 Mask face, Mask target_flat) {
  if (!s.is_face(face))
    throw UsageError("extend_face_matching_closure: " +
                     s.universe().set_string(face) + " is not a face");
  if (!face.subset_of(target_flat))
    throw UsageError(
        "extend_face_matching_closure: the face must lie inside the target");
  std::optional<Mask> best;
  for_each_subset(target_flat - face, [&](Mask extra) {
    const Mask candidate = face | extra;
    if (best && !size_lex_less(candidate, *best)) return;
    if (s.is_face(candidate) && closure(s, candidate) == target_flat)
      best = candidate;
  });
  return best;
}

std::vector<Mask> refinement_chain(const SimplicialComplex& s, Mask flat,
                                   int max_vertices) {
  if (!is_boolean_representable(s, max_vertices).holds)
    throw UsageError("refinement_chain: the complex is not boolean representable");
  const FlatRanks fr = rank_function(s, max_vertices);
  if (member_index(fr.lattice, flat) < 0)
    throw UsageError("refinement_chain: " + s.universe().set_string(flat) +
                     " is not a flat");
  const Mask full = s.universe().all();
  const int n = s.universe().size();
  std::vector<Mask> chain{flat};
  Mask cur = flat;
  while (!(cur == full)) {
    const int r = fr.rank_of(cur);
    if (r < 0)
      throw Error("refinement_chain: " + s.universe().set_string(cur) +
                  " is not the closure of any face");
    Mask next;
    bool stepped = false;
    for (int a = 0; a < n && !stepped; ++a) {
      if (cur.test(a)) continue;
      const Mask g = closure(s, cur.with(a));
      if (!(g == full) && fr.rank_of(g) == r + 1) {
        next = g;
        stepped = true;
      }
    }
    if (!stepped) {
      for (const Mask f : fr.lattice.members())
        if (cur.subset_of(f) && !(f == cur) && !(f == full))
          throw Error("refinement_chain: no unit rank step above " +
                      s.universe().set_string(cur));
      next = full;
    }
    chain.push_back(next);
    cur = next;
  }
  return chain;
}

}  // namespace brsc
