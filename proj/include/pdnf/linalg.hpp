#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow row);
};

/// Reduced row echelon form: pivots[i] is the pivot column of rows[i], every
/// pivot equals 1 and is the only nonzero in its column.
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Null-space basis of an RREF: one vector per free column, with that free
/// variable set to 1 and the others to 0.  Deterministic ordering by free
/// column index.
std::vector<std::vector<Scalar>> nullspace_basis(const RowEchelon& e);

/// Rank of a set of dense vectors.
std::size_t rank_of(const std::vector<std::vector<Scalar>>& vectors);

}  // namespace pdnf
