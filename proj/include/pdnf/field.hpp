#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdnf/matrix.hpp"
#include "pdnf/poly.hpp"

namespace pdnf {

/// Eigenvalues (lambda_1, ..., lambda_n) of a diagonal linear part.
struct Spectrum {
  std::vector<Scalar> eigenvalues;

  Spectrum() = default;
  explicit Spectrum(std::vector<Scalar> ev) : eigenvalues(std::move(ev)) {}
  Spectrum(std::initializer_list<Scalar> ev) : eigenvalues(ev) {}

  std::size_t size() const { return eigenvalues.size(); }
  const Scalar& operator[](std::size_t i) const { return eigenvalues[i]; }
  friend bool operator==(const Spectrum&, const Spectrum&) = default;

  Spectrum scaled(const Scalar& c) const;
  Matrix matrix() const { return Matrix::diagonal(eigenvalues); }
};

std::string to_string(const Spectrum& s);

/// n-component truncated polynomial vector field x' = f(x).  All components
/// share the dimension and the truncation order.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  PolyVectorField(std::size_t dim, int order);
  explicit PolyVectorField(std::vector<PolyScalar> components);

  /// The linear field diag(spectrum) x.
  static PolyVectorField linear(const Spectrum& spectrum, int order);
  static PolyVectorField linear(const Matrix& a, int order);

  std::size_t dim() const { return comps_.size(); }
  int order() const { return order_; }

  const PolyScalar& operator[](std::size_t i) const { return comps_[i]; }
  PolyScalar& component(std::size_t i) { return comps_[i]; }
  const std::vector<PolyScalar>& components() const { return comps_; }

  void add_term(std::size_t comp, const Monomial& m, const Scalar& c);
  Scalar coeff(std::size_t comp, const Monomial& m) const;

  /// Jacobian at the origin.
  Matrix linear_part() const;
  /// Eigenvalues when the linear part is diagonal, otherwise nullopt.  The
  /// spectrum is always derived from the stored terms, so it cannot drift
  /// from the degree-1 part.
  std::optional<Spectrum> spectrum() const;

  PolyVectorField homogeneous_part(int d) const;
  /// Terms of degree >= d.
  PolyVectorField from_degree(int d) const;
  PolyVectorField truncated(int order) const;
  PolyVectorField retagged(int order) const;

  bool is_zero() const;
  std::size_t term_count() const;
  int min_degree() const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const Scalar& s);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const Scalar& s, PolyVectorField a) { return a *= s; }
  friend PolyVectorField operator*(PolyVectorField a, const Scalar& s) { return a *= s; }

  /// phi * f, componentwise.
  friend PolyVectorField operator*(const PolyScalar& phi, const PolyVectorField& f);

  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.order_ == b.order_ && a.comps_ == b.comps_;
  }

 private:
  int order_ = 0;
  std::vector<PolyScalar> comps_;
};

bool equal_through(const PolyVectorField& a, const PolyVectorField& b, int degree);

/// [f, g] = Dg f - Df g, truncated to min(order f, order g).
PolyVectorField lie_bracket(const PolyVectorField& f, const PolyVectorField& g);

/// X_f(phi) = sum_i f_i d(phi)/dx_i.
PolyScalar apply_derivation(const PolyVectorField& f, const PolyScalar& phi);

/// sum_i d(f_i)/dx_i.
PolyScalar divergence(const PolyVectorField& f);

/// Lowest degree d >= 2 at which two fields fail to commute, or nullopt.
std::optional<int> first_noncommuting_degree(const PolyVectorField& f, const PolyVectorField& g);

std::string to_string(const PolyVectorField& f, const std::vector<std::string>& names);

}  // namespace pdnf
