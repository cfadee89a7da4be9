#include "doctest.h"
#include "suites.hpp"

using brsc::test::SuiteResult;

namespace {

void require_clean(const SuiteResult& r, int wanted) {
  CAPTURE(r.first_failure);
  CHECK(r.violations == 0);
  CHECK(r.checked >= wanted);
}

}  // namespace

TEST_CASE("joins of recoverable dimension-2 pavings stay recoverable") {
  require_clean(brsc::test::suite_join_closure(910001, 200), 200);
}

TEST_CASE("epsilon is intersection closed and contains every flat") {
  require_clean(brsc::test::suite_epsilon_contains_flats(910002, 200), 200);
}

TEST_CASE("truncated transversals of epsilon are faces of the original") {
  require_clean(brsc::test::suite_truncated_cover(910003, 200), 200);
}

TEST_CASE("for pavings the flats of the epsilon complex are epsilon itself") {
  require_clean(brsc::test::suite_paving_epsilon_flats(910004, 200), 200);
}

TEST_CASE("line decompositions rebuild exactly the complexes that have them") {
  const SuiteResult r = brsc::test::suite_decomposition_roundtrip(910005, 200);
  require_clean(r, 200);
  CHECK(r.extra >= 80);
}

TEST_CASE("near-matroid truncation families generate every truncation") {
  require_clean(brsc::test::suite_nm_truncation(910006, 200), 200);
}

TEST_CASE("joins of spanning representable pavings keep spanning") {
  require_clean(brsc::test::suite_y_join(910007, 200), 200);
}
