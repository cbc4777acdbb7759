#pragma once

// Helpers shared by the parallel and reference kernels.

#include <algorithm>
#include <cstddef>

#include "pdnf/linalg.hpp"

namespace pdnf::kernels::detail {

inline const Scalar* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

/// dst - factor * src, merged by column.
inline SparseRow row_axpy(const SparseRow& dst, const Scalar& factor, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(factor * src[j].second));
      ++j;
    } else {
      Scalar v = dst[i].second - factor * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace pdnf::kernels::detail
