#include "pdnf/linalg.hpp"

#include <algorithm>

#include "pdnf/error.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf {

void SparseMatrix::add_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow clean;
  for (auto& [c, v] : row) {
    if (c >= cols) throw Error(ErrorCode::dimension_mismatch, "sparse row column out of range");
    if (!clean.empty() && clean.back().first == c) {
      clean.back().second += v;
      if (clean.back().second.is_zero()) clean.pop_back();
    } else if (!v.is_zero()) {
      clean.emplace_back(c, std::move(v));
    }
  }
  rows.push_back(std::move(clean));
}

std::vector<std::vector<Scalar>> nullspace_basis(const RowEchelon& e) {
  std::vector<char> is_pivot(e.cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(e.cols);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      for (const auto& [c, val] : e.rows[i])
        if (c == free) v[e.pivots[i]] = -val;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  SparseMatrix m;
  m.cols = vectors.front().size();
  for (const auto& v : vectors) {
    SparseRow row;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) row.emplace_back(c, v[c]);
    m.add_row(std::move(row));
  }
  return kernels::rref(std::move(m)).rank();
}

}  // namespace pdnf
