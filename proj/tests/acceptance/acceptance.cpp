// Acceptance runner: executes the eight pinned acceptance checks and prints
// one PASS/FAIL line each, with wall-clock time against the pinned budget.
// Run with no arguments for all checks or with a number to run one.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "brsc/catalog.hpp"
#include "brsc/classify.hpp"
#include "brsc/complex.hpp"
#include "brsc/enumerate.hpp"
#include "brsc/isomorphism.hpp"
#include "brsc/matroid.hpp"
#include "brsc/moore.hpp"
#include "brsc/structure.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"
#include "suites.hpp"

namespace {

using namespace brsc;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

// 1. Every catalogued example reproduces all of its pinned properties.
Outcome fixtures_check() {
  Outcome out;
  for (const std::string& name : fixture_names()) {
    const std::vector<std::string> bad = verify_fixture(example(name));
    out.require(bad.empty(),
                bad.empty() ? "" : name + ": " + bad.front());
  }
  return out;
}

// 2. On up to five vertices, every recoverable complex is representable.
Outcome five_vertex_scan() {
  Outcome out;
  // Complexes on exactly n labeled vertices: antichains of faces of size
  // two and up, plus the all-singletons complex.
  const long long expected[] = {0, 1, 2, 9, 114, 6894};
  for (int n = 1; n <= 5; ++n) {
    long long scanned = 0;
    for_each_complex(n, [&](const SimplicialComplex& s) {
      ++scanned;
      if (is_tbrsc(s).holds && !is_boolean_representable(s).holds) {
        out.require(false, "gap on " + std::to_string(n) + " vertices");
        return false;
      }
      return true;
    });
    out.require(scanned == expected[n],
                std::to_string(n) + " vertices: scanned " +
                    std::to_string(scanned) + ", expected " +
                    std::to_string(expected[n]));
  }
  return out;
}

// 3. The six-vertex dimension-2 scan finds exactly the five known classes,
// and the two boundary complexes sit on the correct sides of the fence.
Outcome six_vertex_classes() {
  Outcome out;
  const ClassifyResult r = classify_pavings(6, 2, "tbrsc & !br", 2);
  out.require(r.scanned == (1 << 20),
              "scanned " + std::to_string(r.scanned));
  out.require(r.classes.size() == 5,
              std::to_string(r.classes.size()) + " classes");
  const std::vector<SimplicialComplex> known = six_classification();
  std::vector<char> used(known.size(), 0);
  for (const PavingClass& cls : r.classes) {
    bool matched = false;
    for (std::size_t i = 0; i < known.size(); ++i) {
      if (used[i] || !are_isomorphic(cls.representative, known[i])) continue;
      used[i] = 1;
      matched = true;
      break;
    }
    out.require(matched, "unexpected class in the scan");
  }

  const Universe u6 = Universe::numbered(6);
  const Mask line = u6.mask_of(std::vector<std::string>{"1", "2", "3", "4"});
  const SimplicialComplex base = b_complex(u6, 2, line);
  out.require(is_boolean_representable(base).holds,
              "four-point line complex not representable");
  std::vector<Mask> faces = base.facets();
  faces.push_back(u6.mask_of(std::vector<std::string>{"1", "2", "3"}));
  const SimplicialComplex extended(u6, std::move(faces));
  out.require(!is_tbrsc(extended).holds,
              "extended line complex unexpectedly recoverable");
  return out;
}

// 4. The twelve-vertex swirl is recoverable but not representable, while
// every one-vertex deletion is representable.
Outcome swirl_minimality() {
  Outcome out;
  const SimplicialComplex s = swirl(2);
  out.require(is_tbrsc(s).holds, "swirl not recoverable");
  out.require(!is_boolean_representable(s).holds,
              "swirl unexpectedly representable");
  const int n = s.universe().size();
  out.require(n == 12, "wrong vertex count");
  for (int v = 0; v < n; ++v) {
    const SimplicialComplex r = restriction(s, s.universe().all().without(v));
    out.require(is_boolean_representable(r).holds,
                "deletion of " + s.universe().label(v) + " not representable");
  }
  return out;
}

// 5. The obstruction family is never recoverable, yet every one-vertex
// deletion is a recoverable dimension-2 paving.
Outcome obstruction_family() {
  Outcome out;
  for (const int n : {6, 7, 8}) {
    const SimplicialComplex s = nfb_complex(n);
    out.require(!is_tbrsc(s).holds,
                "n=" + std::to_string(n) + " unexpectedly recoverable");
    for (int v = 0; v < s.universe().size(); ++v) {
      const SimplicialComplex r =
          restriction(s, s.universe().all().without(v));
      const bool ok = is_paving(r) && r.dim() == 2 && is_tbrsc(r).holds;
      out.require(ok, "n=" + std::to_string(n) + " deletion of " +
                          s.universe().label(v) + " left the class");
    }
  }
  return out;
}

// 6. The seven randomized invariant suites run clean.
Outcome property_suites() {
  Outcome out;
  const auto run = [&](const char* name, test::SuiteResult r) {
    out.require(r.checked >= 200,
                std::string(name) + ": only " + std::to_string(r.checked) +
                    " instances");
    out.require(r.violations == 0,
                std::string(name) + ": " + r.first_failure);
  };
  run("join closure", test::suite_join_closure(910001, 200));
  run("epsilon/flats", test::suite_epsilon_contains_flats(910002, 200));
  run("truncated cover", test::suite_truncated_cover(910003, 200));
  run("paving epsilon", test::suite_paving_epsilon_flats(910004, 200));
  run("decomposition", test::suite_decomposition_roundtrip(910005, 200));
  run("truncation flats", test::suite_nm_truncation(910006, 200));
  run("spanning joins", test::suite_y_join(910007, 200));
  return out;
}

long long choose2(long long m) { return m * (m - 1) / 2; }

// 7. On the connected dimension-2 recoverable examples, the three rank
// computations agree and homology is torsion free; the closed rank formula
// matches its expanded form over a full parameter sweep.
Outcome topology_cross_checks() {
  Outcome out;
  int covered = 0;
  for (const std::string& name : fixture_names()) {
    const SimplicialComplex s = example(name).complex;
    if (s.dim() != 2 || !is_connected(s) || !is_tbrsc(s).holds) continue;
    ++covered;
    const Homology h = homology(s);
    const int b1 = h.betti[1];
    const int p = pi1_rank(s);
    const int a = edge_path_presentation(s).abelianized_rank;
    out.require(b1 == p && p == a,
                name + ": ranks " + std::to_string(b1) + "/" +
                    std::to_string(p) + "/" + std::to_string(a));
    for (const auto& t : h.torsion)
      out.require(t.empty(), name + ": torsion present");
  }
  out.require(covered >= 4,
              "only " + std::to_string(covered) + " examples qualified");

  // Closed form versus expansion: with r marked components and parts
  // f_1..f_t, C(r + F - 1, 2) - sum C(f_i, 2) should equal
  // C(r - 1, 2) + (r - 1) F + sum_{i<j} f_i f_j.
  for (int r = 1; r <= 6; ++r) {
    for (int t = 0; t <= 6; ++t) {
      std::vector<int> f(static_cast<std::size_t>(t), 1);
      while (true) {
        long long total = 0, within = 0, cross = 0;
        for (int i = 0; i < t; ++i) {
          cross += total * f[static_cast<std::size_t>(i)];
          total += f[static_cast<std::size_t>(i)];
          within += choose2(f[static_cast<std::size_t>(i)]);
        }
        const long long closed = choose2(r + total - 1) - within;
        const long long expanded = choose2(r - 1) + (r - 1) * total + cross;
        if (closed != expanded) {
          std::ostringstream os;
          os << "forms differ at r=" << r << " t=" << t;
          out.require(false, os.str());
          return out;
        }
        int pos = t - 1;
        while (pos >= 0 && f[static_cast<std::size_t>(pos)] == 6) {
          f[static_cast<std::size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++f[static_cast<std::size_t>(pos)];
      }
    }
  }
  return out;
}

// 8. The matching-based permanent agrees with the permutation-sum definition
// on every boolean matrix up to 4x4, and the two routes from a closure
// family to its complex agree on every family over up to four vertices.
Outcome oracle_equivalences() {
  Outcome out;
  for (int k = 1; k <= 4; ++k) {
    const std::uint64_t total = 1ull << (k * k);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Mask> rows;
      for (int r = 0; r < k; ++r) {
        Mask row;
        for (int c = 0; c < k; ++c)
          if (code >> (r * k + c) & 1) row = row.with(c);
        rows.push_back(row);
      }
      int matchings = 0;
      std::vector<int> perm(static_cast<std::size_t>(k));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool hit = true;
        for (int r = 0; r < k && hit; ++r)
          hit = rows[static_cast<std::size_t>(r)].test(
              perm[static_cast<std::size_t>(r)]);
        if (hit && ++matchings == 2) break;
      } while (std::next_permutation(perm.begin(), perm.end()));
      const SbValue direct = matchings == 0   ? SbValue::zero
                             : matchings == 1 ? SbValue::one
                                              : SbValue::many;
      if (sb_permanent(rows) != direct) {
        out.require(false, "permanent mismatch at k=" + std::to_string(k) +
                               " code=" + std::to_string(code));
        return out;
      }
    }
  }

  long long families = 0;
  for (int n = 1; n <= 4; ++n) {
    const Universe u = Universe::numbered(n);
    const int sets = 1 << n;
    const std::uint64_t top = 1ull << (sets - 1);  // families containing V
    for (std::uint64_t code = 0; code < top; ++code) {
      const std::uint64_t family = code | top;
      bool closed = true;
      for (int i = 0; i < sets && closed; ++i) {
        if (!(family >> i & 1)) continue;
        for (int j = i + 1; j < sets && closed; ++j) {
          if (!(family >> j & 1)) continue;
          closed = family >> (i & j) & 1;
        }
      }
      if (!closed) continue;
      ++families;
      std::vector<Mask> members;
      for (int i = 0; i < sets; ++i)
        if (family >> i & 1) members.push_back(Mask{std::uint64_t(i)});
      const MooreFamily f = MooreFamily::trusted(u, std::move(members));
      const std::string which =
          std::to_string(n) + " vertices, family " + std::to_string(family);
      if (!f.bottom().empty()) {
        // A vertex inside every member is accepted by neither route: the
        // transversal side loses the singleton, the matrix side sees a zero
        // column. Both must refuse.
        bool left = false, right = false;
        try {
          transversals(f);
        } catch (const UsageError&) {
          left = true;
        }
        try {
          complex_from_matrix(matrix_from_moore_family(f));
        } catch (const UsageError&) {
          right = true;
        }
        if (!left || !right) {
          out.require(false, "rejection mismatch over " + which);
          return out;
        }
        continue;
      }
      if (!(transversals(f) ==
            complex_from_matrix(matrix_from_moore_family(f)))) {
        out.require(false, "complex mismatch over " + which);
        return out;
      }
    }
  }
  out.require(families > 2400,
              "only " + std::to_string(families) + " families visited");
  return out;
}

struct Criterion {
  int number;
  const char* summary;
  double budget_seconds;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "catalogued examples verify", 10.0, fixtures_check},
    {2, "five-vertex exhaustive scan", 300.0, five_vertex_scan},
    {3, "six-vertex classification", 1800.0, six_vertex_classes},
    {4, "swirl minimality", 120.0, swirl_minimality},
    {5, "obstruction family", 600.0, obstruction_family},
    {6, "randomized invariant suites", 300.0, property_suites},
    {7, "topology cross checks", 60.0, topology_cross_checks},
    {8, "oracle equivalences", 600.0, oracle_equivalences},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 8) {
      std::cerr << "usage: acceptance [1-8]\n";
      return 2;
    }
  }
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    out.require(seconds < c.budget_seconds, "over budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.number << ": "
         << (out.pass ? "PASS" : "FAIL") << " (" << seconds << "s / "
         << c.budget_seconds << "s) " << c.summary;
    if (!out.pass) line << " -- " << out.detail;
    std::cout << line.str() << "\n";
    if (!out.pass) ++failures;
  }
  return failures;
}
