#include "brsc/classify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "brsc/catalog.hpp"
#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/isomorphism.hpp"
#include "brsc/matroid.hpp"
#include "brsc/tbrsc.hpp"
#include "brsc/topology.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace brsc;

namespace {

// The complex a candidate mask stands for: the chosen (d+1)-sets over the
// full skeleton of d-sets.
SimplicialComplex candidate_complex(int n, int d, std::uint32_t m) {
  std::vector<Mask> tops;
  for_each_combination(n, d + 1, [&](Mask top) { tops.push_back(top); });
  std::vector<Mask> faces;
  for (std::size_t i = 0; i < tops.size(); ++i)
    if ((m >> i) & 1) faces.push_back(tops[i]);
  for_each_combination(n, d, [&](Mask e) { faces.push_back(e); });
  return SimplicialComplex(Universe::numbered(n), std::move(faces));
}

long long brute_count(int n, int d, const std::string& atom) {
  std::uint32_t t = 0;
  for_each_combination(n, d + 1, [&](Mask) { ++t; });
  long long count = 0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << t); ++m) {
    const SimplicialComplex s = candidate_complex(n, d, m);
    bool keep = false;
    if (atom == "tbrsc")
      keep = is_tbrsc(s).holds;
    else if (atom == "br")
      keep = is_boolean_representable(s).holds;
    else if (atom == "simple")
      keep = is_simple(s);
    else if (atom == "pure")
      keep = is_pure(s);
    else if (atom == "paving")
      keep = is_paving(s);
    else if (atom == "matroid")
      keep = is_matroid(s);
    else if (atom == "connected")
      keep = is_connected(s);
    else
      REQUIRE(false);
    if (keep) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("classify bounds and filter errors") {
  CHECK_THROWS_AS(classify_pavings(7, 2, "br"), CapError);
  CHECK_THROWS_AS(classify_pavings(1, 1, "br"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 0, "br"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 5, "br"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, ""), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, "frob"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, "br &"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, "(br"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, "br )"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, "br tbrsc"), UsageError);
  CHECK_THROWS_AS(classify_pavings(5, 2, "br ^ tbrsc"), UsageError);
}

TEST_CASE("matroids among dimension-2 pavings on four vertices") {
  const ClassifyResult r = classify_pavings(4, 2, "matroid");
  CHECK(r.scanned == 16);
  CHECK(r.matched == 6);
  REQUIRE(r.classes.size() == 3);

  std::vector<long long> counts;
  for (const PavingClass& c : r.classes) counts.push_back(c.labeled_count);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<long long>{1, 1, 4});

  // The three classes: U_{2,4}, the coloop matroids, and U_{3,4}.
  CHECK(r.classes.front().top_faces.empty());
  CHECK(are_isomorphic(r.classes.front().representative, uniform(2, 4)));
  CHECK(are_isomorphic(r.classes.back().representative, uniform(3, 4)));
}

TEST_CASE("kernel counts agree with the library on small scans") {
  const std::vector<std::string> atoms = {"tbrsc", "br",      "simple",
                                          "pure",  "paving",  "matroid",
                                          "connected"};
  const std::vector<std::pair<int, int>> sizes = {
      {4, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}};
  for (const auto& [n, d] : sizes) {
    for (const std::string& atom : atoms) {
      CAPTURE(n);
      CAPTURE(d);
      CAPTURE(atom);
      const ClassifyResult r = classify_pavings(n, d, atom);
      CHECK(r.matched == brute_count(n, d, atom));
      long long sum = 0;
      for (const PavingClass& c : r.classes) sum += c.labeled_count;
      CHECK(sum == r.matched);
    }
  }
}

TEST_CASE("kernel counts agree with the library on edge graphs") {
  // d = 1 exercises the graph-specific paths of simple and connected.
  for (const std::string& atom :
       {std::string("tbrsc"), std::string("br"), std::string("simple"),
        std::string("connected"), std::string("matroid")}) {
    CAPTURE(atom);
    const ClassifyResult r = classify_pavings(5, 1, atom);
    CHECK(r.matched == brute_count(5, 1, atom));
  }
}

TEST_CASE("recoverable but not representable needs six vertices") {
  CHECK(classify_pavings(4, 2, "tbrsc & !br").classes.empty());
  CHECK(classify_pavings(5, 2, "tbrsc & !br").classes.empty());
  CHECK(classify_pavings(5, 3, "tbrsc & !br").classes.empty());
  CHECK(classify_pavings(4, 1, "tbrsc & !br").classes.empty());
  CHECK(classify_pavings(5, 1, "tbrsc & !br").classes.empty());
}

TEST_CASE("the five classes on six vertices") {
  const ClassifyResult r = classify_pavings(6, 2, "tbrsc & !br", 2);
  CHECK(r.scanned == (1 << 20));
  REQUIRE(r.classes.size() == 5);

  const std::vector<SimplicialComplex> expected = six_classification();
  for (const PavingClass& c : r.classes) {
    CAPTURE(c.representative.facets().size());
    int hits = 0;
    for (const SimplicialComplex& e : expected)
      if (are_isomorphic(c.representative, e)) ++hits;
    CHECK(hits == 1);

    // Independent orbit count: distinct relabelings of the representative,
    // keyed by the exact bitmask over the twenty triples.
    std::array<std::uint32_t, 64> id_of{};
    {
      std::uint32_t next = 0;
      for_each_combination(6, 3, [&](Mask t) {
        id_of[static_cast<std::size_t>(t.bits)] = next++;
      });
    }
    auto triple_id = [&](Mask t) {
      return id_of[static_cast<std::size_t>(t.bits)];
    };
    std::vector<int> perm(6);
    for (int i = 0; i < 6; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint32_t> orbit;
    do {
      std::uint32_t key = 0;
      for (Mask f : c.representative.facets()) {
        if (f.count() != 3) continue;
        Mask image;
        for_each_bit(f, [&](int v) {
          image = image.with(perm[static_cast<std::size_t>(v)]);
        });
        key |= std::uint32_t{1} << triple_id(image);
      }
      orbit.push_back(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    CHECK(c.labeled_count == static_cast<long long>(orbit.size()));
  }

  long long sum = 0;
  for (const PavingClass& c : r.classes) sum += c.labeled_count;
  CHECK(sum == r.matched);
}

TEST_CASE("thread count does not change the result") {
  const ClassifyResult one = classify_pavings(5, 2, "tbrsc | !connected", 1);
  const ClassifyResult four = classify_pavings(5, 2, "tbrsc | !connected", 4);
  CHECK(one.scanned == four.scanned);
  CHECK(one.matched == four.matched);
  REQUIRE(one.classes.size() == four.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) {
    CHECK(one.classes[i].top_faces == four.classes[i].top_faces);
    CHECK(one.classes[i].labeled_count == four.classes[i].labeled_count);
  }
}

TEST_CASE("filter connectives") {
  const ClassifyResult both = classify_pavings(5, 2, "pure & matroid");
  const ClassifyResult either = classify_pavings(5, 2, "pure | matroid");
  const ClassifyResult pure = classify_pavings(5, 2, "pure");
  const ClassifyResult matroid = classify_pavings(5, 2, "matroid");
  CHECK(both.matched + either.matched == pure.matched + matroid.matched);

  const ClassifyResult neg = classify_pavings(5, 2, "!(pure | matroid)");
  CHECK(neg.matched == neg.scanned - either.matched);

  // paving is constant over the scan.
  CHECK(classify_pavings(5, 2, "paving").matched == 1 << 10);
}
