#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdnf/field.hpp"
#include "pdnf/matrix.hpp"

namespace pdnf {

/// x' = A(eta) x + F(x, eta) with n states and p parameters.
///
/// a_entries[i][j] is a polynomial in the p parameters.  F is stored as n
/// polynomials in the n + p variables (x_1..x_n, eta_1..eta_p); every F
/// term must have x-degree >= 2, so f(0, eta) = 0 and the x-linear part is
/// exactly A(eta) x.
struct ParamFamily {
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<std::string> state_names;
  std::vector<std::string> param_names;
  std::vector<std::vector<PolyScalar>> a_entries;
  std::vector<PolyScalar> f_terms;
  int order = 3;

  ParamFamily() = default;
  ParamFamily(std::size_t n, std::size_t p, int order);

  /// A(0).
  Matrix a_at_zero() const;
  /// Throws invalid_family: A(0) not diagonal, F term of x-degree < 2,
  /// shape inconsistencies.
  void validate() const;
};

/// First column: eigenvalues of A(0); column k + 1: dA_ii/deta_k at 0.
struct DMatrix {
  Matrix entries;
};

/// Throws invalid_family (p != n - 1, eigenvalue neither real nor purely
/// imaginary) and repeated_eigenvalues.
DMatrix build_D(const ParamFamily& family);

struct Nondegeneracy {
  bool nonsingular = false;
  Scalar det;
};

Nondegeneracy det_nonsingular(const DMatrix& d);

/// Matrix for the 1:m coupled-oscillator case, n = 4, p = 3, spectrum
/// (i w, -i w, m i w, -m i w): the parameter derivatives a^(i)_k in the
/// first three columns and (1, -1, m, -m) in the last.  Its determinant is
/// related to the one of build_D by det(build_D) = -i w det(this).
/// Throws invalid_family when the spectrum does not have that shape.
struct OscillatorMatrix {
  Matrix entries;
  Rational omega0;
  int m = 0;
};
OscillatorMatrix build_oscillator_D(const ParamFamily& family, int m);

/// Field on (x, eta) space with eta' = 0, order family.order.
PolyVectorField suspend(const ParamFamily& family);

}  // namespace pdnf
