#include "pdnf/bifurcation.hpp"

#include "pdnf/error.hpp"

namespace pdnf {

ParamFamily::ParamFamily(std::size_t n_, std::size_t p_, int order_)
    : n(n_), p(p_), state_names(default_var_names(n_, "x")), param_names(default_var_names(p_, "eta")),
      order(order_) {
  a_entries.assign(n, std::vector<PolyScalar>(n, PolyScalar(p, order)));
  f_terms.assign(n, PolyScalar(n + p, order));
}

Matrix ParamFamily::a_at_zero() const {
  Matrix a(n, n);
  const Monomial zero(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = a_entries[i][j].coeff(zero);
  return a;
}

void ParamFamily::validate() const {
  if (n == 0) throw Error(ErrorCode::invalid_family, "family has no state variables");
  if (a_entries.size() != n || f_terms.size() != n)
    throw Error(ErrorCode::invalid_family, "family shape does not match n");
  for (const auto& row : a_entries) {
    if (row.size() != n) throw Error(ErrorCode::invalid_family, "A(eta) is not square");
    for (const auto& e : row)
      if (e.nvars() != p) throw Error(ErrorCode::invalid_family, "A entry has the wrong number of parameters");
  }
  if (!a_at_zero().is_diagonal()) throw Error(ErrorCode::invalid_family, "A(0) must be diagonal");
  for (std::size_t i = 0; i < n; ++i) {
    if (f_terms[i].nvars() != n + p) throw Error(ErrorCode::invalid_family, "F term has the wrong variable count");
    f_terms[i].for_each([&](const Monomial& m, const Scalar&) {
      int xdeg = 0;
      for (std::size_t k = 0; k < n; ++k) xdeg += m[k];
      if (xdeg < 2)
        throw Error(ErrorCode::invalid_family, "F term " + exps_string(m) + " in component " + std::to_string(i + 1) +
                                                   " has x-degree " + std::to_string(xdeg) +
                                                   "; x-linear terms belong in A(eta) and f(0, eta) must vanish");
    });
  }
}

DMatrix build_D(const ParamFamily& family) {
  family.validate();
  const std::size_t n = family.n;
  if (family.p + 1 != n)
    throw Error(ErrorCode::invalid_family, "the D matrix needs p = n - 1 parameters (n = " + std::to_string(n) +
                                               ", p = " + std::to_string(family.p) + ")");
  const Matrix a0 = family.a_at_zero();
  const auto ev = a0.diagonal_entries();
  for (std::size_t i = 0; i < n; ++i) {
    if (!ev[i].is_real() && !ev[i].is_imaginary())
      throw Error(ErrorCode::invalid_family, "eigenvalue " + to_string(ev[i]) + " is neither real nor purely imaginary");
    for (std::size_t j = 0; j < i; ++j)
      if (ev[i] == ev[j])
        throw Error(ErrorCode::repeated_eigenvalues,
                    "eigenvalue " + to_string(ev[i]) +
                        " is repeated; degenerate cases typically need an extra symmetry argument");
  }
  DMatrix d{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    d.entries(i, 0) = ev[i];
    for (std::size_t k = 0; k < family.p; ++k)
      d.entries(i, k + 1) = family.a_entries[i][i].coeff(Monomial::unit(family.p, k));
  }
  return d;
}

Nondegeneracy det_nonsingular(const DMatrix& d) {
  Nondegeneracy out;
  out.det = determinant(d.entries);
  out.nonsingular = !out.det.is_zero();
  return out;
}

OscillatorMatrix build_oscillator_D(const ParamFamily& family, int m) {
  if (family.n != 4 || family.p != 3)
    throw Error(ErrorCode::invalid_family, "the oscillator layout needs n = 4 and p = 3");
  if (m < 2) throw Error(ErrorCode::invalid_family, "resonance order m must be >= 2");
  const DMatrix d = build_D(family);
  const Scalar l1 = d.entries(0, 0);
  if (!l1.is_imaginary() || sgn(l1.im()) <= 0)
    throw Error(ErrorCode::invalid_family, "first eigenvalue must be i*w with w > 0");
  const std::vector<int> pattern{1, -1, m, -m};
  for (std::size_t i = 0; i < 4; ++i)
    if (d.entries(i, 0) != l1 * Scalar(pattern[i]))
      throw Error(ErrorCode::invalid_family, "spectrum is not (i w, -i w, m i w, -m i w) for m = " + std::to_string(m));
  OscillatorMatrix out{Matrix(4, 4), l1.im(), m};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 3; ++k) out.entries(i, k) = d.entries(i, k + 1);
    out.entries(i, 3) = Scalar(pattern[i]);
  }
  return out;
}

PolyVectorField suspend(const ParamFamily& family) {
  family.validate();
  const std::size_t n = family.n, p = family.p, dim = n + p;
  PolyVectorField out(dim, family.order);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      family.a_entries[i][j].for_each([&](const Monomial& m, const Scalar& c) {
        Monomial full(dim);
        for (std::size_t k = 0; k < p; ++k) full.set(n + k, m[k]);
        out.add_term(i, full.raised(j), c);
      });
    family.f_terms[i].for_each([&](const Monomial& m, const Scalar& c) { out.add_term(i, m, c); });
  }
  return out;
}

}  // namespace pdnf
