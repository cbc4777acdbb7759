#pragma once

// Data-parallel inner loops.  Each kernel has an OpenMP implementation in
// pdnf::kernels and a plain serial implementation in
// pdnf::kernels::reference; the library calls the former, the tests check
// that both agree exactly, and bench/ compares their speed.
//
// All kernels are deterministic: work is partitioned by index and results
// are assembled in index order, so the output never depends on the thread
// count.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pdnf/linalg.hpp"
#include "pdnf/monomial.hpp"
#include "pdnf/poly.hpp"
#include "pdnf/scalar.hpp"

namespace pdnf::kernels {

/// A monomial-vector x^m e_comp.
struct MonomialVector {
  Monomial m;
  std::size_t comp = 0;

  friend bool operator==(const MonomialVector&, const MonomialVector&) = default;
};

/// Truncated product a*b keeping degrees <= order.  Parallel over output
/// degree.
PolyScalar multiply(const PolyScalar& a, const PolyScalar& b, int order);

/// All (m, j) with min_degree <= |m| <= max_degree and
/// <m, spectra[s]> == spectra[s][j] for every s.  Graded order, then j.
std::vector<MonomialVector> resonant_pairs(std::span<const std::vector<Scalar>> spectra,
                                           std::size_t nvars, int min_degree, int max_degree);

/// All m with min_degree <= |m| <= max_degree and <m, spectra[s]> == 0 for
/// every s.  Graded order.
std::vector<Monomial> invariant_monomials(std::span<const std::vector<Scalar>> spectra,
                                          std::size_t nvars, int min_degree, int max_degree);

/// For each s in [0, max_degree]: the minimum of |<Q,L> - L_j|^2 over all
/// j and all Q with |Q| = s whose value is nonzero; nullopt if there is no
/// such value.  The parallel version scales the spectrum to Gaussian
/// integers and works in 128-bit arithmetic; it falls back to the
/// reference path if the scaled values are too large.
std::vector<std::optional<Rational>> omega_degree_minima(std::span<const Scalar> spectrum,
                                                         int max_degree);

/// Gauss-Jordan reduction to RREF.  Pivot choice: columns left to right,
/// first remaining row with a nonzero entry.  Row updates run in parallel.
RowEchelon rref(SparseMatrix m);

namespace reference {

PolyScalar multiply(const PolyScalar& a, const PolyScalar& b, int order);
std::vector<MonomialVector> resonant_pairs(std::span<const std::vector<Scalar>> spectra,
                                           std::size_t nvars, int min_degree, int max_degree);
std::vector<Monomial> invariant_monomials(std::span<const std::vector<Scalar>> spectra,
                                          std::size_t nvars, int min_degree, int max_degree);
/// Exact Gaussian-rational enumeration, no scaling.
std::vector<std::optional<Rational>> omega_degree_minima(std::span<const Scalar> spectrum,
                                                         int max_degree);
RowEchelon rref(SparseMatrix m);

}  // namespace reference

/// Number of threads the parallel kernels would use (1 without OpenMP).
int max_threads();

}  // namespace pdnf::kernels
