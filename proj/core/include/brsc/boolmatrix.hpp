#pragma once

#include <string>
#include <vector>

#include "brsc/complex.hpp"
#include "brsc/universe.hpp"

namespace brsc {

// Value of a permanent over the superboolean semiring: matchings are counted
// as none, exactly one, or at least two.
enum class SbValue { zero, one, many };

const char* to_string(SbValue v);

// Boolean matrix whose columns are the vertices of a universe. Rows carry
// labels for reports; each row is stored as the mask of its 1-entries.
class BooleanMatrix {
 public:
  BooleanMatrix(Universe columns, std::vector<std::string> row_labels,
                std::vector<Mask> rows);

  const Universe& columns() const { return columns_; }
  int n_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<Mask>& rows() const { return rows_; }
  bool entry(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)].test(col);
  }

 private:
  Universe columns_;
  std::vector<std::string> row_labels_;
  std::vector<Mask> rows_;
};

// Permanent of the square matrix whose i-th row has 1-entries rows[i], over
// the superboolean semiring: counts the perfect matchings between rows and
// columns 0..rows.size()-1, collapsing any count past two.
SbValue sb_permanent(const std::vector<Mask>& rows);
SbValue sb_permanent(const BooleanMatrix& m);  // requires a square matrix

inline bool is_nonsingular(const std::vector<Mask>& rows) {
  return sb_permanent(rows) == SbValue::one;
}
bool is_nonsingular(const BooleanMatrix& m);

// Whether some row subset Y of equal size makes M[Y, X] nonsingular, for the
// column set x.
bool m_independent(const BooleanMatrix& m, Mask x);

// The simplicial complex of independent column sets. A zero column would
// leave a vertex dependent, which is rejected.
SimplicialComplex complex_from_matrix(const BooleanMatrix& m,
                                      int max_vertices = kDefaultEnumCap);

}  // namespace brsc
