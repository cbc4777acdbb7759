// Serial reference implementations.  They favour the most direct algorithm
// over speed and are used only by tests and benchmarks.

#include <optional>

#include "common.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf::kernels::reference {

PolyScalar multiply(const PolyScalar& a, const PolyScalar& b, int order) {
  PolyScalar out(a.nvars(), order);
  a.for_each([&](const Monomial& ma, const Scalar& ca) {
    b.for_each([&](const Monomial& mb, const Scalar& cb) {
      if (ma.degree() + mb.degree() <= order) out.add_product_term(ma * mb, ca, cb);
    });
  });
  return out;
}

std::vector<MonomialVector> resonant_pairs(std::span<const std::vector<Scalar>> spectra,
                                           std::size_t nvars, int min_degree, int max_degree) {
  std::vector<MonomialVector> out;
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(nvars, d))
      for (std::size_t j = 0; j < nvars; ++j) {
        bool all = true;
        for (const auto& spec : spectra)
          if (m.dot(spec) != spec[j]) all = false;
        if (all) out.push_back({m, j});
      }
  return out;
}

std::vector<Monomial> invariant_monomials(std::span<const std::vector<Scalar>> spectra,
                                          std::size_t nvars, int min_degree, int max_degree) {
  std::vector<Monomial> out;
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(nvars, d)) {
      bool all = true;
      for (const auto& spec : spectra)
        if (!m.dot(spec).is_zero()) all = false;
      if (all) out.push_back(m);
    }
  return out;
}

std::vector<std::optional<Rational>> omega_degree_minima(std::span<const Scalar> spectrum, int max_degree) {
  const std::size_t n = spectrum.size();
  std::vector<std::optional<Rational>> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)));
  for (int s = 0; s <= max_degree; ++s)
    for (const auto& m : monomials_of_degree(n, s)) {
      Scalar v = m.dot(spectrum);
      for (std::size_t j = 0; j < n; ++j) {
        Rational nrm = (v - spectrum[j]).norm();
        if (nrm == 0) continue;
        auto& slot = out[static_cast<std::size_t>(s)];
        if (!slot || nrm < *slot) slot = nrm;
      }
    }
  return out;
}

RowEchelon rref(SparseMatrix m) {
  // Dense Gauss-Jordan; the RREF is unique, so this must agree exactly with
  // the sparse parallel kernel.
  const std::size_t rows = m.rows.size(), cols = m.cols;
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : m.rows[r]) a[r][c] = v;

  RowEchelon e;
  e.cols = cols;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = next; r < rows; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[next]);
    Scalar inv = Scalar(1) / a[next][col];
    for (auto& v : a[next]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        if (!a[next][c].is_zero()) a[r][c] -= factor * a[next][c];
    }
    e.pivots.push_back(col);
    ++next;
  }
  for (std::size_t r = 0; r < next; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < cols; ++c)
      if (!a[r][c].is_zero()) row.emplace_back(c, a[r][c]);
    e.rows.push_back(std::move(row));
  }
  return e;
}

}  // namespace pdnf::kernels::reference
