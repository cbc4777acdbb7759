#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdnf/field.hpp"
#include "pdnf/kernels.hpp"
#include "pdnf/matrix.hpp"

namespace pdnf {

enum class CentralizerMode {
  /// Unknowns restricted to Ker(ad A) degree by degree.
  restricted,
  /// Every vector monomial up to the constraint degree is an unknown; the
  /// kernel is projected to degrees <= d afterwards.  Slow, for checking.
  unrestricted,
};

/// Basis of the solutions g = g_1 + ... + g_d of [fhat, g] = 0, imposed
/// through total degree `constraint_degree`.
///
/// With q the lowest nonlinear degree of fhat, constraints through
/// d + q - 1 involve no unknowns above degree d, so they are the complete
/// set of conditions on g_1..g_d.  When fhat is too short for that,
/// constraint_degree is lowered to fhat's order and elements that reach
/// above order - q + 1 are flagged in `unconstrained_top`: a higher
/// constraint could still remove them.  In all cases a solution here is
/// only a truncation; it may fail to extend to a formal centralizer
/// element.
struct CentralizerBasis {
  int degree_bound = 0;
  int constraint_degree = 0;
  CentralizerMode mode = CentralizerMode::restricted;
  std::vector<PolyVectorField> elements;
  std::vector<bool> unconstrained_top;

  std::size_t dimension() const { return elements.size(); }
  bool fully_constrained() const;
};

/// Throws not_normal_form, order_exceeds_input (d > order of fhat),
/// order_too_small (d < 1).
CentralizerBasis centralizer_basis(const PolyVectorField& fhat, int degree_bound,
                                   CentralizerMode mode = CentralizerMode::restricted);

/// Rank of the union of two element lists, viewed as coefficient vectors
/// through `degree`.
std::size_t span_rank(const std::vector<PolyVectorField>& fields, int degree);

/// Thm-4.4-style hypothesis at truncation: the basis is spanned by fhat
/// (truncated to d) together with linear fields.
bool spanned_by_fhat_and_linear(const CentralizerBasis& basis, const PolyVectorField& fhat);

/// Same subspace (compared through degree_bound).
bool same_span(const std::vector<PolyVectorField>& a, const std::vector<PolyVectorField>& b, int degree);

/// Vector monomials of degree 2..max_degree in Ker(ad A) and Ker(ad B).
std::vector<kernels::MonomialVector> kernel_intersection(const Spectrum& a, const Spectrum& b,
                                                         int max_degree);

/// A = lambda_{b_1} A_1 + ... + lambda_{b_d} A_d with rational diagonal
/// A_i, where lambda_{b_1}, ..., lambda_{b_d} are the first rationally
/// independent eigenvalues in input order.
struct RationalDecomposition {
  std::size_t rank = 0;
  std::vector<std::size_t> basis_indices;
  std::vector<Scalar> coefficients;
  /// A_i as diagonal entries (rational).
  std::vector<std::vector<Rational>> basis_diagonals;

  std::vector<Matrix> basis_matrices() const;
  Matrix reconstruct() const;
};

/// Throws degenerate_input for the all-zero spectrum.
RationalDecomposition rational_decomposition(const Spectrum& spec);

/// Checks that the resonances of Lambda up to max_degree are exactly the
/// vector monomials resonant for every A_i.  Returns the first mismatch.
std::optional<kernels::MonomialVector> resonance_equivalence_mismatch(const Spectrum& spec,
                                                                      const RationalDecomposition& dec,
                                                                      int max_degree);

/// True iff the values are linearly independent over the rationals.
bool rationally_independent(const std::vector<Scalar>& values);

/// Spectrum of sigma_1 A_1 + ... + sigma_d A_d.  Throws invalid_argument
/// when the sigmas are not rationally independent or have the wrong count.
Spectrum recombine(const RationalDecomposition& dec, const std::vector<Scalar>& sigmas);

/// Monomials m with 1 <= |m| <= max_degree and <m, Lambda> = 0 for every
/// spectrum.
std::vector<Monomial> common_invariants(const std::vector<Spectrum>& specs, int max_degree);

}  // namespace pdnf
