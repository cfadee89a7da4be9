#include "brsc/catalog.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/matroid.hpp"
#include "brsc/moore.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"

namespace brsc {
namespace {

// Vertices given by 1-based labels of a numbered universe.
Mask labset(std::initializer_list<int> labels) {
  Mask m;
  for (int l : labels) m = m.with(l - 1);
  return m;
}

std::vector<Mask> labsets(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(labset(s));
  return out;
}

// Paving complex on n numbered vertices: all (d+1)-sets except the listed
// ones, plus all d-sets.
SimplicialComplex paving_complement(int n, int d, const std::vector<Mask>& missing) {
  std::vector<Mask> faces;
  for_each_combination(n, d + 1, [&](Mask top) {
    if (std::find(missing.begin(), missing.end(), top) == missing.end())
      faces.push_back(top);
  });
  for_each_combination(n, d, [&](Mask f) { faces.push_back(f); });
  return SimplicialComplex(Universe::numbered(n), std::move(faces));
}

Fixture make_truno() {
  Fixture f{"truno",
            "Smallest recoverable paving that is not representable: dimension "
            "2 on six vertices, with fundamental group of rank 1.",
            paving_complement(6, 2,
                              labsets({{1, 3, 5},
                                       {2, 3, 5},
                                       {1, 4, 6},
                                       {2, 4, 6},
                                       {3, 4, 6},
                                       {4, 5, 6}})),
            std::nullopt,
            {}};
  f.expected.dim = 2;
  f.expected.simple = true;
  f.expected.paving = true;
  f.expected.pure = false;
  f.expected.matroid = false;
  f.expected.br = false;
  f.expected.br_witness = labset({1, 3, 4});
  f.expected.tbrsc = true;
  f.expected.pi1 = 1;
  f.expected.epsilon_members = labsets({{},
                                        {1},
                                        {2},
                                        {3},
                                        {4},
                                        {5},
                                        {6},
                                        {1, 2},
                                        {1, 2, 3, 5},
                                        {1, 2, 3, 4, 5, 6}});
  return f;
}

Fixture make_extru_a() {
  Fixture f{"extruA",
            "Paving complex whose epsilon family is too small to recover it: "
            "the unique rank-3 facet is not a transversal of the epsilon "
            "members.",
            SimplicialComplex(Universe::numbered(4),
                              labsets({{1, 2, 3}, {1, 4}, {2, 4}, {3, 4}})),
            std::nullopt,
            {}};
  f.expected.dim = 2;
  f.expected.simple = true;
  f.expected.paving = true;
  f.expected.pure = false;
  f.expected.matroid = false;
  f.expected.br = false;
  f.expected.tbrsc = false;
  f.expected.tbrsc_witness = labset({1, 2, 3});
  f.expected.epsilon_members =
      labsets({{}, {1}, {2}, {3}, {4}, {1, 2, 3, 4}});
  return f;
}

Fixture make_ttnot() {
  Fixture f{"ttnot",
            "Non-simple complex whose lifted representation gains a flat that "
            "the epsilon family never had, so recovery fails.",
            SimplicialComplex(
                Universe::numbered(5),
                labsets({{1, 2, 3}, {1, 5}, {2, 5}, {3, 4}, {4, 5}})),
            std::nullopt,
            {}};
  f.expected.dim = 2;
  f.expected.simple = false;
  f.expected.paving = false;
  f.expected.br = false;
  f.expected.tbrsc = false;
  f.expected.epsilon_members = labsets({{}, {3, 5}, {1, 2, 3, 4, 5}});
  f.expected.lift_flat_outside_epsilon = labset({1, 2, 4});
  return f;
}

Fixture make_nonun_s1() {
  Fixture f{"nonun_S1",
            "Uniform matroid U_{2,5}; its join with a partition matroid on "
            "the same vertices leaves the recoverable class.",
            uniform(2, 5),
            std::nullopt,
            {}};
  f.expected.dim = 1;
  f.expected.matroid = true;
  f.expected.br = true;
  f.expected.tbrsc = true;
  f.expected.join_with =
      JoinExpectation{"nonun_S2", labset({1, 3, 5}), std::nullopt};
  return f;
}

Fixture make_nonun_s2() {
  Fixture f{"nonun_S2",
            "Partition matroid with blocks {1,2} and {3,4}: transversals of "
            "the blocks, the second factor of the non-closed join.",
            matroid_from_disjoint_blocks(Universe::numbered(5),
                                         labsets({{1, 2}, {3, 4}})),
            std::nullopt,
            {}};
  f.expected.dim = 2;
  f.expected.matroid = true;
  f.expected.br = true;
  f.expected.tbrsc = true;
  return f;
}

Fixture make_ncu_h() {
  Fixture f{"ncu_H",
            "Line complex B_2 on six vertices with line {1,2}; joining it "
            "with its partner line complex yields truno, so representability "
            "is lost under join.",
            b_complex(Universe::numbered(6), 2, labset({1, 2})),
            std::nullopt,
            {}};
  f.expected.dim = 2;
  f.expected.paving = true;
  f.expected.br = true;
  f.expected.tbrsc = true;
  f.expected.join_with = JoinExpectation{"ncu_H'", std::nullopt, "truno"};
  return f;
}

Fixture make_ncu_hp() {
  Fixture f{"ncu_H'",
            "Line complex B_2 on six vertices with line {1,2,3,5}, the "
            "partner factor whose join with ncu_H yields truno.",
            b_complex(Universe::numbered(6), 2, labset({1, 2, 3, 5})),
            std::nullopt,
            {}};
  f.expected.dim = 2;
  f.expected.paving = true;
  f.expected.br = true;
  f.expected.tbrsc = true;
  return f;
}

Fixture make_scznp() {
  std::vector<Mask> faces;
  for (int a : {2, 3})
    for (int b : {4, 5})
      for (int c : {6, 7}) faces.push_back(labset({1, a, b, c}));
  for_each_combination(7, 3, [&](Mask t) { faces.push_back(t); });
  Fixture f{"scznp",
            "Dimension-3 paving complex on seven vertices that is not "
            "recoverable: the epsilon family of a higher-dimensional paving "
            "complex can be too coarse.",
            SimplicialComplex(Universe::numbered(7), std::move(faces)),
            std::nullopt,
            {}};
  f.expected.dim = 3;
  f.expected.paving = true;
  f.expected.br = false;
  f.expected.tbrsc = false;
  f.expected.tbrsc_witness = labset({1, 2, 4, 6});
  return f;
}

Fixture make_pobe() {
  MooreFamily family(Universe::numbered(7), labsets({{},
                                                     {1},
                                                     {3},
                                                     {5},
                                                     {1, 2},
                                                     {5, 6},
                                                     {3, 5, 6},
                                                     {1, 2, 3, 4},
                                                     {1, 2, 3, 4, 5, 6, 7}}));
  Fixture f{"pobe",
            "Representable complex whose pure core is not recoverable: "
            "passing to the top-dimensional part can leave the recoverable "
            "class.",
            transversals(family),
            std::nullopt,
            {}};
  f.expected.dim = 3;
  f.expected.pure = false;
  f.expected.br = true;
  f.expected.tbrsc = true;
  f.expected.pure_core_tbrsc = false;
  return f;
}

Fixture make_cepc() {
  std::vector<std::string> labels;
  for (const char* suffix : {"", "'", "''"})
    for (int i = 1; i <= 3; ++i) labels.push_back(std::to_string(i) + suffix);
  Universe u(labels);
  auto plain = [](int i) { return i - 1; };
  auto prime = [](int i) { return i + 2; };
  auto wide = [](int i) { return i + 5; };
  auto next = [](int i) { return i % 3 + 1; };

  std::vector<Mask> banned;
  for (int i = 1; i <= 3; ++i) {
    banned.push_back(
        Mask::single(plain(i)).with(plain(next(i))).with(prime(next(i))));
    banned.push_back(
        Mask::single(wide(i)).with(plain(next(i))).with(prime(next(i))));
  }

  std::vector<Mask> faces;
  for_each_combination(9, 3, [&](Mask t) {
    if (std::find(banned.begin(), banned.end(), t) == banned.end())
      faces.push_back(t);
  });
  for (int i = 1; i <= 3; ++i) {
    const Mask pair = Mask::single(plain(i)).with(wide(i));
    const Mask used = pair.with(plain(next(i))).with(prime(next(i)));
    for_each_bit(u.all() - used, [&](int p) {
      faces.push_back(pair.with(plain(next(i))).with(p));
      faces.push_back(pair.with(prime(next(i))).with(p));
    });
  }

  Fixture f{"cepc",
            "Representable dimension-3 complex on nine vertices whose "
            "dimension-2 truncation is pure but no longer representable: "
            "truncation can leave the representable class even for pure "
            "results.",
            SimplicialComplex(std::move(u), std::move(faces)),
            std::nullopt,
            {}};
  f.expected.dim = 3;
  f.expected.pure = false;
  f.expected.paving = false;
  f.expected.br = true;
  f.expected.tbrsc = true;
  f.expected.truncation3_pure = true;
  f.expected.truncation3_br = false;
  return f;
}

Fixture make_bfour() {
  std::vector<std::string> labels;
  std::vector<Mask> rows(4);
  for (int v = 1; v <= 15; ++v) {
    std::string l(4, '0');
    for (int r = 0; r < 4; ++r) {
      if ((v >> (3 - r)) & 1) {
        l[static_cast<std::size_t>(r)] = '1';
        rows[static_cast<std::size_t>(r)] = rows[static_cast<std::size_t>(r)].with(v - 1);
      }
    }
    labels.push_back(l);
  }
  BooleanMatrix m(Universe(std::move(labels)), {"1", "2", "3", "4"},
                  std::move(rows));
  Fixture f{"bfour",
            "Full boolean matrix on four rows: the complex of all column "
            "sets independent over the superboolean semiring, pure of "
            "dimension 3, whose dimension-2 truncation stays recoverable "
            "but stops being representable.",
            complex_from_matrix(m),
            m,
            {}};
  f.expected.dim = 3;
  f.expected.pure = true;
  f.expected.paving = false;
  f.expected.br = true;
  f.expected.tbrsc = true;
  f.expected.truncation3_pure = true;
  f.expected.truncation3_paving = true;
  f.expected.truncation3_tbrsc = true;
  f.expected.truncation3_br = false;
  return f;
}

Fixture build(const std::string& name) {
  if (name == "truno") return make_truno();
  if (name == "extruA") return make_extru_a();
  if (name == "ttnot") return make_ttnot();
  if (name == "nonun_S1") return make_nonun_s1();
  if (name == "nonun_S2") return make_nonun_s2();
  if (name == "ncu_H") return make_ncu_h();
  if (name == "ncu_H'" || name == "ncu_Hp") return make_ncu_hp();
  if (name == "scznp") return make_scznp();
  if (name == "pobe") return make_pobe();
  if (name == "cepc") return make_cepc();
  if (name == "bfour") return make_bfour();
  throw UsageError("unknown fixture \"" + name + "\"");
}

std::string yesno(bool b) { return b ? "true" : "false"; }

}  // namespace

SimplicialComplex uniform(int k, int n) {
  if (k < 1 || k > n) throw UsageError("uniform requires 1 <= k <= n");
  return uniform_matroid(k, n);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "truno",  "extruA", "ttnot", "nonun_S1", "nonun_S2", "ncu_H",
      "ncu_H'", "scznp",  "pobe",  "cepc",     "bfour"};
  return names;
}

Fixture example(const std::string& name) { return build(name); }

std::vector<std::string> verify_fixture(const Fixture& f, int max_vertices) {
  std::vector<std::string> out;
  const SimplicialComplex& s = f.complex;
  const Universe& u = s.universe();
  const FixtureExpectations& e = f.expected;

  auto mismatch = [&](const std::string& what, const std::string& want,
                      const std::string& got) {
    out.push_back(what + ": expected " + want + ", got " + got);
  };
  auto check_bool = [&](const char* what, const std::optional<bool>& want,
                        bool got) {
    if (want && *want != got) mismatch(what, yesno(*want), yesno(got));
  };
  auto witness_str = [&](const std::optional<Mask>& w) {
    return w ? u.set_string(*w) : std::string("none");
  };

  if (e.dim && *e.dim != s.dim())
    mismatch("dim", std::to_string(*e.dim), std::to_string(s.dim()));
  check_bool("simple", e.simple, is_simple(s));
  check_bool("paving", e.paving, is_paving(s));
  check_bool("pure", e.pure, is_pure(s));
  if (e.matroid) check_bool("matroid", e.matroid, is_matroid(s, max_vertices));

  if (e.br || e.br_witness) {
    const BrCheck br = is_boolean_representable(s, max_vertices);
    check_bool("br", e.br, br.holds);
    if (e.br_witness && (!br.witness || *br.witness != *e.br_witness))
      mismatch("br_witness", u.set_string(*e.br_witness),
               witness_str(br.witness));
  }
  if (e.tbrsc || e.tbrsc_witness) {
    const TbCheck tb = is_tbrsc(s, max_vertices);
    check_bool("tbrsc", e.tbrsc, tb.holds);
    if (e.tbrsc_witness && (!tb.witness || *tb.witness != *e.tbrsc_witness))
      mismatch("tbrsc_witness", u.set_string(*e.tbrsc_witness),
               witness_str(tb.witness));
  }

  if (e.pi1) {
    const int got = pi1_rank(s, max_vertices);
    if (got != *e.pi1)
      mismatch("pi1", std::to_string(*e.pi1), std::to_string(got));
  }

  if (e.epsilon_members) {
    const MooreFamily eps = epsilon(s, max_vertices);
    std::vector<Mask> want = *e.epsilon_members;
    std::vector<Mask> got = eps.members();
    std::sort(want.begin(), want.end(), size_lex_less);
    std::sort(got.begin(), got.end(), size_lex_less);
    if (want != got) {
      std::string w, g;
      for (Mask m : want) w += u.set_string(m) + " ";
      for (Mask m : got) g += u.set_string(m) + " ";
      mismatch("epsilon_members", w, g);
    }
  }

  if (e.lift_flat_outside_epsilon) {
    const Mask x = *e.lift_flat_outside_epsilon;
    const MooreFamily lifted = flats(s_epsilon(s, max_vertices), max_vertices);
    if (!lifted.contains(x))
      out.push_back("lift_flat_outside_epsilon: " + u.set_string(x) +
                    " is not a flat of the recovered representation");
    if (epsilon(s, max_vertices).contains(x))
      out.push_back("lift_flat_outside_epsilon: " + u.set_string(x) +
                    " already belongs to the epsilon family");
  }

  if (e.pure_core_tbrsc)
    check_bool("pure_core_tbrsc", e.pure_core_tbrsc,
               is_tbrsc(pure_core(s), max_vertices).holds);

  if (e.truncation3_pure || e.truncation3_paving || e.truncation3_br ||
      e.truncation3_tbrsc) {
    const SimplicialComplex t3 = truncate(s, 3);
    check_bool("truncation3_pure", e.truncation3_pure, is_pure(t3));
    check_bool("truncation3_paving", e.truncation3_paving, is_paving(t3));
    if (e.truncation3_br)
      check_bool("truncation3_br", e.truncation3_br,
                 is_boolean_representable(t3, max_vertices).holds);
    if (e.truncation3_tbrsc)
      check_bool("truncation3_tbrsc", e.truncation3_tbrsc,
                 is_tbrsc(t3, max_vertices).holds);
  }

  if (e.join_with) {
    const Fixture partner = build(e.join_with->partner);
    const SimplicialComplex joined = join(s, partner.complex);
    if (e.join_with->not_tbrsc_witness) {
      const TbCheck tb = is_tbrsc(joined, max_vertices);
      if (tb.holds)
        out.push_back("join_with: the join is recoverable, expected witness " +
                      u.set_string(*e.join_with->not_tbrsc_witness));
      else if (!tb.witness || *tb.witness != *e.join_with->not_tbrsc_witness)
        mismatch("join_with witness",
                 u.set_string(*e.join_with->not_tbrsc_witness),
                 witness_str(tb.witness));
    }
    if (e.join_with->equals) {
      const Fixture target = build(*e.join_with->equals);
      if (!(joined == target.complex))
        out.push_back("join_with: the join differs from " +
                      *e.join_with->equals);
    }
  }

  return out;
}

SimplicialComplex swirl(int d) {
  if (d < 2) throw UsageError("swirl requires d >= 2");
  if (d > 4)
    throw CapError("swirl beyond d = 4 has an impractical facet list");
  const int n = (d + 1) * (d + 2);
  std::vector<std::string> labels;
  for (int j = 0; j <= d; ++j) labels.push_back("a" + std::to_string(j));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      labels.push_back("b" + std::to_string(i) + std::to_string(j));
  Universe u(std::move(labels));
  auto a = [](int j) { return j; };
  auto b = [d](int i, int j) { return d + 1 + i * (d + 1) + j; };

  std::vector<Mask> removed;
  for (int i = 0; i <= d; ++i) {
    Mask pool, block;
    for (int j = 0; j <= d; ++j) {
      if (j != i) pool = pool.with(a(j));
      if (j != 0) pool = pool.with(b(i, j));
      block = block.with(b(i, j));
    }
    for_each_subset_of_size(pool, d + 1,
                            [&](Mask x) { removed.push_back(x); });
    removed.push_back(block);
  }
  std::sort(removed.begin(), removed.end(), lex_less);

  // Every d-set keeps at least one extension, so the d-skeleton is implied.
  std::vector<Mask> faces;
  for_each_combination(n, d + 1, [&](Mask top) {
    if (!std::binary_search(removed.begin(), removed.end(), top, lex_less))
      faces.push_back(top);
  });
  return SimplicialComplex(std::move(u), std::move(faces));
}

SimplicialComplex nfb_complex(int n) {
  if (n < 6) throw UsageError("nfb_complex requires n >= 6");
  std::vector<std::string> labels;
  for (int i = 0; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 2; i <= 5; ++i) labels.push_back("y" + std::to_string(i));
  for (int i = 2; i <= 5; ++i) labels.push_back("z" + std::to_string(i));
  Universe u(std::move(labels));
  auto x = [](int i) { return i; };
  auto y = [n](int i) { return n + i - 1; };
  auto z = [n](int i) { return n + i + 3; };

  // The y- and z-paths reuse x-vertices at their ends.
  const std::vector<int> ypath = {x(0), x(n), y(2), y(3), y(4), y(5), x(1)};
  const std::vector<int> zpath = {x(1), x(n), z(2), z(3), z(4), z(5), x(0)};

  std::vector<Mask> missing;
  for (int i = 0; i + 2 <= n; ++i)
    missing.push_back(Mask::single(x(i)).with(x(i + 1)).with(x(i + 2)));
  for (const auto& path : {ypath, zpath})
    for (std::size_t i = 0; i + 2 < path.size(); ++i)
      missing.push_back(
          Mask::single(path[i]).with(path[i + 1]).with(path[i + 2]));
  std::sort(missing.begin(), missing.end(), lex_less);

  // Every pair keeps at least one extension, so the 1-skeleton is implied.
  std::vector<Mask> faces;
  for_each_combination(n + 9, 3, [&](Mask t) {
    if (!std::binary_search(missing.begin(), missing.end(), t, lex_less))
      faces.push_back(t);
  });
  return SimplicialComplex(std::move(u), std::move(faces));
}

std::vector<SimplicialComplex> six_classification() {
  const std::vector<std::vector<Mask>> removed = {
      labsets({{1, 3, 4}, {2, 3, 4}, {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}),
      labsets({{1, 3, 4}, {2, 3, 4}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}}),
      labsets({{1, 3, 4}, {2, 3, 4}, {3, 5, 6}, {4, 5, 6}}),
      labsets({{1, 3, 4}, {2, 3, 4}, {1, 5, 6}, {2, 5, 6}, {4, 5, 6}}),
      labsets({{1, 3, 4}, {2, 3, 4}, {2, 5, 6}, {4, 5, 6}}),
  };
  std::vector<SimplicialComplex> out;
  out.reserve(removed.size());
  for (const auto& r : removed) out.push_back(paving_complement(6, 2, r));
  return out;
}

}  // namespace brsc
