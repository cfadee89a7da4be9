#include "brsc/boolmatrix.hpp"

#include <unordered_map>
#include <unordered_set>

#include "brsc/errors.hpp"

namespace brsc {

const char* to_string(SbValue v) {
  switch (v) {
    case SbValue::zero: return "zero";
    case SbValue::one: return "one";
    default: return "many";
  }
}

BooleanMatrix::BooleanMatrix(Universe columns, std::vector<std::string> row_labels,
                             std::vector<Mask> rows)
    : columns_(std::move(columns)),
      row_labels_(std::move(row_labels)),
      rows_(std::move(rows)) {
  if (row_labels_.size() != rows_.size())
    throw UsageError("matrix needs one label per row");
  std::unordered_set<std::string> seen;
  for (const auto& label : row_labels_) {
    if (label.empty()) throw UsageError("matrix row labels must be nonempty");
    if (!seen.insert(label).second)
      throw UsageError("duplicate matrix row label: " + label);
  }
  for (const Mask row : rows_)
    if (!row.subset_of(columns_.all()))
      throw UsageError("matrix row has entries outside the declared columns");
}

namespace {

// Counts perfect matchings capped at two, expanding along rows in order.
// used_cols determines the row index, so it is the whole memo key.
int matchings_capped(const std::vector<Mask>& rows, Mask used_cols,
                     std::unordered_map<std::uint64_t, int>& memo) {
  const int i = used_cols.count();
  if (i == static_cast<int>(rows.size())) return 1;
  const auto it = memo.find(used_cols.bits);
  if (it != memo.end()) return it->second;
  int total = 0;
  for_each_bit(rows[static_cast<std::size_t>(i)] - used_cols, [&](int c) {
    if (total >= 2) return;
    total += matchings_capped(rows, used_cols.with(c), memo);
  });
  if (total > 2) total = 2;
  memo.emplace(used_cols.bits, total);
  return total;
}

}  // namespace

SbValue sb_permanent(const std::vector<Mask>& rows) {
  const Mask all = Mask::full(static_cast<int>(rows.size()));
  for (const Mask row : rows)
    if (!row.subset_of(all))
      throw UsageError("permanent needs a square matrix");
  std::unordered_map<std::uint64_t, int> memo;
  const int count = matchings_capped(rows, Mask{}, memo);
  return count == 0 ? SbValue::zero : count == 1 ? SbValue::one : SbValue::many;
}

SbValue sb_permanent(const BooleanMatrix& m) {
  if (m.n_rows() != m.columns().size())
    throw UsageError("permanent needs a square matrix");
  return sb_permanent(m.rows());
}

bool is_nonsingular(const BooleanMatrix& m) { return sb_permanent(m) == SbValue::one; }

namespace {

// x is independent iff it is empty, or some row meets x in exactly one
// element whose removal leaves an independent set.
bool independent_rec(const std::vector<Mask>& rows, Mask x,
                     std::unordered_map<std::uint64_t, bool>& memo) {
  if (x.empty()) return true;
  const auto it = memo.find(x.bits);
  if (it != memo.end()) return it->second;
  bool ok = false;
  Mask tried;
  for (const Mask row : rows) {
    const Mask hit = row & x;
    if (hit.count() != 1 || hit.intersects(tried)) continue;
    tried = tried | hit;
    if (independent_rec(rows, x - hit, memo)) {
      ok = true;
      break;
    }
  }
  memo.emplace(x.bits, ok);
  return ok;
}

}  // namespace

bool m_independent(const BooleanMatrix& m, Mask x) {
  if (!x.subset_of(m.columns().all()))
    throw UsageError("column set lies outside the matrix");
  std::unordered_map<std::uint64_t, bool> memo;
  return independent_rec(m.rows(), x, memo);
}

SimplicialComplex complex_from_matrix(const BooleanMatrix& m, int max_vertices) {
  const int n = m.columns().size();
  if (n > max_vertices)
    throw CapError("matrix has " + std::to_string(n) + " columns, cap is " +
                   std::to_string(max_vertices));
  Mask covered;
  for (const Mask row : m.rows()) covered = covered | row;
  if (covered != m.columns().all()) {
    const int v = (m.columns().all() - covered).lowest();
    throw UsageError("column " + m.columns().label(v) +
                     " is all zeros, so no vertex set containing it is independent");
  }

  std::vector<char> indep(std::size_t{1} << n, 0);
  indep[0] = 1;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Mask x{bits};
    for (const Mask row : m.rows()) {
      const Mask hit = row & x;
      if (hit.count() == 1 && indep[(x - hit).bits]) {
        indep[bits] = 1;
        break;
      }
    }
  }

  std::vector<Mask> facets;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (!indep[bits]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!Mask{bits}.test(v) && indep[bits | Mask::single(v).bits]) maximal = false;
    if (maximal) facets.push_back(Mask{bits});
  }
  return SimplicialComplex(m.columns(), std::move(facets));
}

}  // namespace brsc
