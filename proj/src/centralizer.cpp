#include "pdnf/centralizer.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pdnf/error.hpp"
#include "pdnf/linalg.hpp"
#include "pdnf/normalizer.hpp"

namespace pdnf {

namespace {

using Key = std::pair<Monomial, std::size_t>;

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

using KeyIndex = std::map<Key, std::size_t, KeyLess>;

KeyIndex index_terms(const std::vector<PolyVectorField>& fields, int degree) {
  KeyIndex idx;
  for (const auto& f : fields)
    for (std::size_t j = 0; j < f.dim(); ++j)
      for (int d = 0; d <= degree; ++d)
        for (const auto& [m, c] : f[j].homogeneous(d)) idx.try_emplace({m, j}, 0);
  std::size_t i = 0;
  for (auto& [k, v] : idx) v = i++;
  return idx;
}

SparseRow as_row(const PolyVectorField& f, const KeyIndex& idx, int degree) {
  SparseRow row;
  for (std::size_t j = 0; j < f.dim(); ++j)
    for (int d = 0; d <= degree; ++d)
      for (const auto& [m, c] : f[j].homogeneous(d)) row.emplace_back(idx.at({m, j}), c);
  return row;
}

// RREF rows of the given fields as fields again: a canonical basis of the
// span, independent of how the span was produced.
std::vector<PolyVectorField> canonical_basis(const std::vector<PolyVectorField>& fields, std::size_t dim,
                                             int degree) {
  const KeyIndex idx = index_terms(fields, degree);
  std::vector<Key> keys(idx.size());
  for (const auto& [k, v] : idx) keys[v] = k;
  SparseMatrix m;
  m.cols = idx.size();
  for (const auto& f : fields) m.add_row(as_row(f, idx, degree));
  const RowEchelon e = kernels::rref(std::move(m));
  std::vector<PolyVectorField> out;
  for (const auto& row : e.rows) {
    PolyVectorField g(dim, degree);
    for (const auto& [c, v] : row) g.add_term(keys[c].second, keys[c].first, v);
    out.push_back(std::move(g));
  }
  return out;
}

int lowest_nonlinear_degree(const PolyVectorField& f) {
  for (int d = 2; d <= f.order(); ++d)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (!f[j].homogeneous(d).empty()) return d;
  return -1;
}

int top_degree(const PolyVectorField& g) {
  int top = -1;
  for (std::size_t j = 0; j < g.dim(); ++j) top = std::max(top, g[j].max_degree());
  return top;
}

}  // namespace

bool CentralizerBasis::fully_constrained() const {
  return std::none_of(unconstrained_top.begin(), unconstrained_top.end(), [](bool b) { return b; });
}

CentralizerBasis centralizer_basis(const PolyVectorField& fhat, int degree_bound, CentralizerMode mode) {
  if (degree_bound < 1) throw Error(ErrorCode::order_too_small, "centralizer degree bound must be >= 1");
  if (degree_bound > fhat.order())
    throw Error(ErrorCode::order_exceeds_input, "degree bound " + std::to_string(degree_bound) +
                                                    " exceeds the order of the normal form");
  const auto spectrum = fhat.spectrum();
  if (!spectrum || !is_normal_form(fhat))
    throw Error(ErrorCode::not_normal_form, "centralizer input must be in normal form ([Ax, f] = 0)");

  const std::size_t n = fhat.dim();
  const int d = degree_bound;
  const int q = lowest_nonlinear_degree(fhat);
  const int wanted = q < 0 ? d : d + q - 1;
  const int big_d = std::min(wanted, fhat.order());

  CentralizerBasis out;
  out.degree_bound = d;
  out.constraint_degree = big_d;
  out.mode = mode;

  std::vector<kernels::MonomialVector> unknowns;
  if (mode == CentralizerMode::restricted) {
    const std::vector<std::vector<Scalar>> spectra{spectrum->eigenvalues};
    unknowns = kernels::resonant_pairs(spectra, n, 1, d);
  } else {
    for (int k = 1; k <= big_d; ++k)
      for (const auto& m : monomials_of_degree(n, k))
        for (std::size_t j = 0; j < n; ++j) unknowns.push_back({m, j});
  }

  const PolyVectorField base = fhat.truncated(big_d);
  std::vector<PolyVectorField> images;
  images.reserve(unknowns.size());
  for (const auto& u : unknowns) {
    PolyVectorField g(n, big_d);
    g.add_term(u.comp, u.m, Scalar(1));
    images.push_back(lie_bracket(base, g));
  }

  // Equations: one per (monomial, component) position reached by an image.
  const KeyIndex rows = index_terms(images, big_d);
  std::vector<SparseRow> eq(rows.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (std::size_t j = 0; j < n; ++j)
      images[col][j].for_each([&](const Monomial& m, const Scalar& c) { eq[rows.at({m, j})].emplace_back(col, c); });
  SparseMatrix system;
  system.cols = unknowns.size();
  for (auto& r : eq) system.add_row(std::move(r));
  const auto null = nullspace_basis(kernels::rref(std::move(system)));

  std::vector<PolyVectorField> raw;
  for (const auto& v : null) {
    PolyVectorField g(n, d);
    for (std::size_t col = 0; col < v.size(); ++col)
      if (!v[col].is_zero() && unknowns[col].m.degree() <= d) g.add_term(unknowns[col].comp, unknowns[col].m, v[col]);
    raw.push_back(std::move(g));
  }
  out.elements = canonical_basis(raw, n, d);

  const int safe_top = q < 0 ? d : big_d - q + 1;
  for (const auto& g : out.elements) out.unconstrained_top.push_back(top_degree(g) > safe_top);
  return out;
}

std::size_t span_rank(const std::vector<PolyVectorField>& fields, int degree) {
  if (fields.empty()) return 0;
  const KeyIndex idx = index_terms(fields, degree);
  SparseMatrix m;
  m.cols = idx.size();
  for (const auto& f : fields) m.add_row(as_row(f, idx, degree));
  return kernels::rref(std::move(m)).rank();
}

bool same_span(const std::vector<PolyVectorField>& a, const std::vector<PolyVectorField>& b, int degree) {
  std::vector<PolyVectorField> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = span_rank(both, degree);
  return span_rank(a, degree) == r && span_rank(b, degree) == r;
}

bool spanned_by_fhat_and_linear(const CentralizerBasis& basis, const PolyVectorField& fhat) {
  const int d = basis.degree_bound;
  const PolyVectorField fh = fhat.truncated(d);
  std::vector<PolyVectorField> with_f = basis.elements;
  with_f.push_back(fh);
  if (span_rank(with_f, d) != span_rank(basis.elements, d)) return false;

  std::vector<PolyVectorField> nonlinear;
  for (const auto& g : basis.elements) nonlinear.push_back(g.from_degree(2));
  const std::size_t r = span_rank(nonlinear, d);
  const PolyVectorField fn = fh.from_degree(2);
  if (fn.is_zero()) return r == 0;
  nonlinear.push_back(fn);
  return r <= 1 && span_rank(nonlinear, d) == 1;
}

std::vector<kernels::MonomialVector> kernel_intersection(const Spectrum& a, const Spectrum& b, int max_degree) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "spectra have different lengths");
  const std::vector<std::vector<Scalar>> spectra{a.eigenvalues, b.eigenvalues};
  return kernels::resonant_pairs(spectra, a.size(), 2, max_degree);
}

namespace {

// Rank over Q of Gaussian rationals viewed as vectors (re, im).
std::size_t rational_rank(const std::vector<Scalar>& values) {
  if (values.empty()) return 0;
  std::vector<std::vector<Scalar>> vecs;
  for (const auto& v : values) vecs.push_back({Scalar(v.re()), Scalar(v.im())});
  return rank_of(vecs);
}

}  // namespace

bool rationally_independent(const std::vector<Scalar>& values) {
  return rational_rank(values) == values.size();
}

std::vector<Matrix> RationalDecomposition::basis_matrices() const {
  std::vector<Matrix> out;
  for (const auto& diag : basis_diagonals) {
    std::vector<Scalar> d(diag.begin(), diag.end());
    out.push_back(Matrix::diagonal(d));
  }
  return out;
}

Matrix RationalDecomposition::reconstruct() const {
  const std::size_t n = basis_diagonals.empty() ? 0 : basis_diagonals.front().size();
  Matrix a(n, n);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t j = 0; j < n; ++j) a(j, j) += coefficients[k] * Scalar(basis_diagonals[k][j]);
  return a;
}

RationalDecomposition rational_decomposition(const Spectrum& spec) {
  RationalDecomposition out;
  std::vector<Scalar> chosen;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    std::vector<Scalar> trial = chosen;
    trial.push_back(spec[j]);
    if (rationally_independent(trial)) {
      chosen = std::move(trial);
      out.basis_indices.push_back(j);
    }
  }
  if (chosen.empty()) throw Error(ErrorCode::degenerate_input, "all eigenvalues are zero");
  out.rank = chosen.size();
  out.coefficients = chosen;
  out.basis_diagonals.assign(out.rank, std::vector<Rational>(spec.size()));

  for (std::size_t j = 0; j < spec.size(); ++j) {
    const Scalar& l = spec[j];
    if (out.rank == 1) {
      Scalar a = l / chosen[0];
      out.basis_diagonals[0][j] = a.re();
    } else {
      // Solve a*u + b*v = l over Q, u, v the chosen pair.
      const Rational &ur = chosen[0].re(), &ui = chosen[0].im();
      const Rational &vr = chosen[1].re(), &vi = chosen[1].im();
      const Rational det = ur * vi - ui * vr;
      out.basis_diagonals[0][j] = (l.re() * vi - l.im() * vr) / det;
      out.basis_diagonals[1][j] = (ur * l.im() - ui * l.re()) / det;
    }
  }
  return out;
}

std::optional<kernels::MonomialVector> resonance_equivalence_mismatch(const Spectrum& spec,
                                                                      const RationalDecomposition& dec,
                                                                      int max_degree) {
  const std::vector<std::vector<Scalar>> lam{spec.eigenvalues};
  std::vector<std::vector<Scalar>> parts;
  for (const auto& diag : dec.basis_diagonals) parts.emplace_back(diag.begin(), diag.end());
  const auto a = kernels::resonant_pairs(lam, spec.size(), 2, max_degree);
  const auto b = kernels::resonant_pairs(parts, spec.size(), 2, max_degree);
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    if (i >= a.size()) return b[i];
    if (i >= b.size()) return a[i];
    if (!(a[i] == b[i])) {
      const bool a_first = a[i].m < b[i].m || (a[i].m == b[i].m && a[i].comp < b[i].comp);
      return a_first ? a[i] : b[i];
    }
  }
  return std::nullopt;
}

Spectrum recombine(const RationalDecomposition& dec, const std::vector<Scalar>& sigmas) {
  if (sigmas.size() != dec.rank)
    throw Error(ErrorCode::invalid_argument, "need exactly " + std::to_string(dec.rank) + " sigma values");
  if (!rationally_independent(sigmas))
    throw Error(ErrorCode::invalid_argument, "sigma values are not rationally independent");
  const std::size_t n = dec.basis_diagonals.front().size();
  std::vector<Scalar> ev(n);
  for (std::size_t k = 0; k < dec.rank; ++k)
    for (std::size_t j = 0; j < n; ++j) ev[j] += sigmas[k] * Scalar(dec.basis_diagonals[k][j]);
  return Spectrum(std::move(ev));
}

std::vector<Monomial> common_invariants(const std::vector<Spectrum>& specs, int max_degree) {
  if (specs.empty()) return {};
  std::vector<std::vector<Scalar>> spectra;
  for (const auto& s : specs) {
    if (s.size() != specs.front().size())
      throw Error(ErrorCode::dimension_mismatch, "spectra have different lengths");
    spectra.push_back(s.eigenvalues);
  }
  return kernels::invariant_monomials(spectra, specs.front().size(), 1, max_degree);
}

}  // namespace pdnf
