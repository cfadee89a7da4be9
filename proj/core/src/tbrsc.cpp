#include "brsc/tbrsc.hpp"

#include <algorithm>

#include "brsc/errors.hpp"

namespace brsc {

namespace {

// The sets of size rank(S) that are not faces; for a paving complex these
// determine the epsilon family: X belongs iff no such set meets X in exactly
// dim(S) vertices.
std::vector<Mask> missing_tops(const SimplicialComplex& s, const FaceTable& table) {
  std::vector<Mask> out;
  for_each_combination(s.n_vertices(), s.rank(), [&](Mask m) {
    if (!table.test(m)) out.push_back(m);
  });
  return out;
}

bool epsilon_has_general(const SimplicialComplex& s, const FaceTable& table,
                         Mask x) {
  const int d = s.dim();
  const Mask outside = s.universe().all() - x;
  for (const Mask facet : s.facets()) {
    const Mask j = facet & x;
    bool ok = true;
    const auto check = [&](Mask y) {
      if (!ok) return;
      for_each_bit(outside, [&](int p) {
        if (ok && !table.test(y.with(p))) ok = false;
      });
    };
    if (j.count() <= d)
      check(j);
    else
      for_each_subset_of_size(j, d, check);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

MooreFamily epsilon(const SimplicialComplex& s, int max_vertices) {
  const FaceTable table(s, max_vertices);
  const int n = s.n_vertices();
  std::vector<Mask> members;
  if (is_paving(s) && s.dim() >= 1) {
    const std::vector<Mask> missing = missing_tops(s, table);
    const int d = s.dim();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Mask x{bits};
      bool ok = true;
      for (const Mask m : missing)
        if ((m & x).count() == d) {
          ok = false;
          break;
        }
      if (ok) members.push_back(x);
    }
  } else {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
      if (epsilon_has_general(s, table, Mask{bits})) members.push_back(Mask{bits});
  }
  return MooreFamily::trusted(s.universe(), std::move(members));
}

SimplicialComplex s_epsilon(const SimplicialComplex& s, int max_vertices) {
  return transversals(epsilon(s, max_vertices), max_vertices);
}

TbCheck is_tbrsc(const SimplicialComplex& s, int max_vertices) {
  const MooreFamily eps = epsilon(s, max_vertices);
  const int d = s.dim();
  if (is_paving(s) && d >= 1) {
    // Faces of size <= d are always generated; a (d+1)-face needs a member
    // meeting it in exactly d vertices.
    const FaceTable table(s, max_vertices);
    std::vector<Mask> tops;
    for_each_combination(s.n_vertices(), d + 1, [&](Mask m) {
      if (table.test(m)) tops.push_back(m);
    });
    std::sort(tops.begin(), tops.end(), lex_less);
    for (const Mask top : tops) {
      bool generated = false;
      for (const Mask z : eps.members())
        if ((top & z).count() == d) {
          generated = true;
          break;
        }
      if (!generated) return {false, top};
    }
    return {true, std::nullopt};
  }

  bool holds = true;
  for (const Mask facet : s.facets())
    if (!tr_contains(eps, facet)) {
      holds = false;
      break;
    }
  if (holds) return {true, std::nullopt};
  for (const Mask face : faces_sorted(s, -1, max_vertices))
    if (!tr_contains(eps, face)) return {false, face};
  return {false, std::nullopt};  // unreachable
}

MooreFamily truncation_flats(const SimplicialComplex& s, int k, int max_vertices) {
  if (k < 1) throw UsageError("truncation requires k >= 1");
  const MooreFamily lattice = flats(s, max_vertices);
  const SimplicialComplex t = truncate(s, k);
  std::vector<Mask> members;
  for (const Mask f : lattice.members()) {
    bool clear = true;
    for (const Mask facet : t.facets())
      if (facet.subset_of(f)) {
        clear = false;
        break;
      }
    if (clear) members.push_back(f);
  }
  members.push_back(s.universe().all());
  return MooreFamily::trusted(s.universe(), std::move(members));
}

SimplicialComplex b_complex(const Universe& universe, int d, Mask line,
                            int max_vertices) {
  const int n = universe.size();
  if (n > max_vertices)
    throw CapError("universe has " + std::to_string(n) + " vertices, cap is " +
                   std::to_string(max_vertices));
  if (d < 2) throw UsageError("line complexes need dimension >= 2");
  if (!line.subset_of(universe.all()))
    throw UsageError("line lies outside the universe");
  if (line.count() < d)
    throw UsageError("line must have at least d vertices");
  if (line == universe.all())
    throw UsageError("line must be a proper subset of the universe");

  std::vector<Mask> faces;
  for_each_combination(n, d + 1, [&](Mask x) {
    if ((x & line).count() == d) faces.push_back(x);
  });
  for_each_combination(n, d, [&](Mask x) { faces.push_back(x); });
  return SimplicialComplex(universe, std::move(faces));
}

std::vector<Mask> lines_of(const SimplicialComplex& s, int max_vertices) {
  if (!is_paving(s) || s.dim() < 2)
    throw UsageError("line extraction needs a paving complex of dimension >= 2");
  const MooreFamily eps = epsilon(s, max_vertices);
  std::vector<Mask> lines;
  for (const Mask z : eps.members())
    if (z.count() >= s.dim() && z != s.universe().all()) lines.push_back(z);
  return lines;
}

namespace {

// Top faces of the join of line complexes: the (d+1)-sets meeting some line
// in exactly d vertices.
std::vector<Mask> joined_tops(int n, int d, const std::vector<Mask>& lines) {
  std::vector<Mask> tops;
  for_each_combination(n, d + 1, [&](Mask x) {
    for (const Mask line : lines)
      if ((x & line).count() == d) {
        tops.push_back(x);
        return;
      }
  });
  return tops;
}

}  // namespace

std::optional<Decomposition> br_decomposition(const SimplicialComplex& s,
                                              int max_vertices) {
  if (!is_paving(s) || s.dim() < 2)
    throw UsageError("decomposition needs a paving complex of dimension >= 2");
  const int d = s.dim();
  const MooreFamily lattice = flats(s, max_vertices);
  std::vector<Mask> lines;
  for (const Mask f : lattice.members())
    if (f.count() >= d && f != s.universe().all()) lines.push_back(f);

  const FaceTable table(s, max_vertices);
  std::vector<Mask> expected;
  for_each_combination(s.n_vertices(), d + 1, [&](Mask x) {
    if (table.test(x)) expected.push_back(x);
  });
  if (joined_tops(s.n_vertices(), d, lines) != expected) return std::nullopt;
  return Decomposition{d, std::move(lines)};
}

std::vector<Mask> normalize_small_lines(const Universe& universe, int d,
                                        std::vector<Mask> lines) {
  const int n = universe.size();
  if (d < 2) throw UsageError("line normalization needs dimension >= 2");
  std::vector<Mask> work;
  for (const Mask line : lines) {
    if (!line.subset_of(universe.all()))
      throw UsageError("line lies outside the universe");
    const int size = line.count();
    if (size == n - 1 && n - 1 != d && n - 1 != d + 1) {
      // A near-full line splits into the d-subsets through its missing vertex.
      const int a = (universe.all() - line).lowest();
      for_each_combination(n, d, [&](Mask sub) {
        if (sub.test(a)) work.push_back(sub);
      });
    } else if (size == d || size == d + 1 || size == n - 1) {
      work.push_back(line);
    } else {
      throw UsageError("line sizes must be d, d+1, or |V|-1");
    }
  }

  const auto dedupe = [&] {
    std::sort(work.begin(), work.end(), size_lex_less);
    work.erase(std::unique(work.begin(), work.end()), work.end());
  };
  const auto expand = [&](Mask line) {
    for_each_subset_of_size(line, d, [&](Mask sub) { work.push_back(sub); });
  };
  dedupe();

  bool changed = true;
  while (changed) {
    changed = false;
    // Two (d+1)-lines sharing d vertices split into their d-subsets; the face
    // either line would add on its own is covered by the other's subsets.
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      if (work[i].count() != d + 1) continue;
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        if (work[j].count() != d + 1) continue;
        if ((work[i] & work[j]).count() == d) {
          const Mask a = work[i], b = work[j];
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
          expand(a);
          expand(b);
          dedupe();
          changed = true;
        }
      }
    }
    if (changed) continue;
    // A (d+1)-line above a d-line splits the same way.
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      if (work[i].count() != d + 1) continue;
      for (std::size_t j = 0; j < work.size() && !changed; ++j) {
        if (work[j].count() != d || !work[j].subset_of(work[i])) continue;
        const Mask a = work[i];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        expand(a);
        dedupe();
        changed = true;
      }
    }
  }
  return work;
}

SimplicialComplex largest_paving_tbrsc(const SimplicialComplex& s, int max_vertices) {
  if (!is_paving(s))
    throw UsageError(
        "largest subcomplex extraction needs a paving complex; in general no "
        "largest truncated boolean representable subcomplex exists");
  return truncate(s_epsilon(s, max_vertices), s.rank());
}

JoinCertificate join_preserves_tbpav(const SimplicialComplex& a,
                                     const SimplicialComplex& b,
                                     int max_vertices) {
  if (!(a.universe() == b.universe()))
    throw UsageError("join requires both complexes to share one universe");
  if (!is_paving(a) || !is_paving(b) || a.dim() != b.dim() || a.dim() < 1)
    throw UsageError("join certificate needs paving complexes of one dimension >= 1");
  if (!is_tbrsc(a, max_vertices).holds || !is_tbrsc(b, max_vertices).holds)
    throw UsageError("join certificate needs truncated boolean representable inputs");

  const MooreFamily ea = epsilon(a, max_vertices);
  const MooreFamily eb = epsilon(b, max_vertices);
  std::vector<Mask> meets;
  meets.reserve(ea.members().size() * eb.members().size());
  for (const Mask za : ea.members())
    for (const Mask zb : eb.members()) meets.push_back(za & zb);
  MooreFamily certificate = MooreFamily::trusted(a.universe(), std::move(meets));

  SimplicialComplex joined = join(a, b);
  const bool certified =
      joined == truncate(transversals(certificate, max_vertices), a.rank());
  return {std::move(joined), std::move(certificate), certified};
}

bool in_class_y(const SimplicialComplex& s, int max_vertices) {
  if (!is_paving(s) || s.dim() < 2)
    throw UsageError("the class is defined for paving complexes of dimension >= 2");
  if (!is_boolean_representable(s, max_vertices).holds) return false;
  const int d = s.dim();
  const FaceTable table(s, max_vertices);
  bool ok = true;
  for_each_combination(s.n_vertices(), d + 2, [&](Mask w) {
    if (!ok) return;
    bool has_top = false;
    for_each_subset_of_size(w, d + 1, [&](Mask x) {
      if (table.test(x)) has_top = true;
    });
    if (!has_top) ok = false;
  });
  return ok;
}

bool y_join_check(const SimplicialComplex& a, const SimplicialComplex& b,
                  int max_vertices) {
  if (!(a.universe() == b.universe()))
    throw UsageError("join requires both complexes to share one universe");
  return in_class_y(a, max_vertices) && in_class_y(b, max_vertices) &&
         a.dim() == b.dim() && in_class_y(join(a, b), max_vertices);
}

}  // namespace brsc
