#pragma once

#include <cstddef>
#include <vector>

#include "pdnf/field.hpp"
#include "pdnf/matrix.hpp"
#include "pdnf/poly.hpp"

namespace pdnf {

/// Truncated coordinate change x -> L x + h(x), with h of degree >= 2.
class NearIdentityMap {
 public:
  NearIdentityMap() = default;
  NearIdentityMap(Matrix linear, PolyVectorField h);

  static NearIdentityMap identity(std::size_t n, int order);
  static NearIdentityMap linear_map(const Matrix& l, int order);
  /// Builds a map from its full component list (linear + nonlinear terms).
  /// Constant terms are rejected.
  static NearIdentityMap from_components(const PolyVectorField& components);

  std::size_t dim() const { return linear_.rows(); }
  int order() const { return h_.order(); }
  const Matrix& linear() const { return linear_; }
  const PolyVectorField& nonlinear() const { return h_; }

  /// L x + h(x) as one vector of polynomials.
  PolyVectorField components() const;

  bool is_identity() const;

  friend bool operator==(const NearIdentityMap& a, const NearIdentityMap& b) {
    return a.linear_ == b.linear_ && a.h_ == b.h_;
  }

 private:
  Matrix linear_;
  PolyVectorField h_;
};

/// phi(map(x)) truncated at min(order phi, order map).
PolyScalar compose_scalar(const PolyScalar& phi, const NearIdentityMap& map);

/// Substitutes the map into every component of `outer`.
PolyVectorField compose_components(const PolyVectorField& outer, const NearIdentityMap& map);

/// outer o inner.
NearIdentityMap compose(const NearIdentityMap& outer, const NearIdentityMap& inner);

/// Compositional inverse to the map's order.  Throws singular_linear_part.
NearIdentityMap invert_to_order(const NearIdentityMap& map);

/// Transports f along y = map(x): returns (Dmap f) o map^{-1}, truncated at
/// min(order f, order map).
PolyVectorField push_forward(const NearIdentityMap& map, const PolyVectorField& f);

/// push_forward with the linear map y = M x; the conjugation helper that
/// brings a diagonalizable linear part to diagonal form.
PolyVectorField linear_conjugate(const Matrix& m, const PolyVectorField& f);

}  // namespace pdnf
