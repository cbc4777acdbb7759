#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pdnf/monomial.hpp"
#include "pdnf/scalar.hpp"

namespace pdnf {

using TermMap = std::map<Monomial, Scalar>;

/// Truncated multivariate polynomial: exact coefficients for every degree
/// 0..order, nothing above.  Terms are bucketed by degree so homogeneous
/// parts are an O(1) lookup.
///
/// Every binary operation treats its operands as exact polynomials,
/// computes the exact result and truncates it to the smaller of the two
/// orders.  Zero coefficients are never stored.
class PolyScalar {
 public:
  PolyScalar() = default;
  PolyScalar(std::size_t nvars, int order);

  static PolyScalar constant(std::size_t nvars, int order, const Scalar& c);
  static PolyScalar variable(std::size_t nvars, int order, std::size_t var);
  static PolyScalar term(std::size_t nvars, int order, const Monomial& m, const Scalar& c);

  std::size_t nvars() const { return n_; }
  int order() const { return order_; }

  /// Degree-d terms; an empty map for d outside [0, order].
  const TermMap& homogeneous(int d) const;
  PolyScalar homogeneous_part(int d) const;

  /// Adds c*x^m; terms above the order are dropped and cancellations erased.
  void add_term(const Monomial& m, const Scalar& c);
  void add_product_term(const Monomial& m, const Scalar& a, const Scalar& b);
  void set_term(const Monomial& m, const Scalar& c);
  Scalar coeff(const Monomial& m) const;
  /// Replaces the degree-d part; zero coefficients and monomials of the
  /// wrong degree are rejected.
  void assign_homogeneous(int d, TermMap part);

  bool is_zero() const;
  std::size_t term_count() const;
  /// Lowest / highest degree carrying a term, or -1 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;

  PolyScalar truncated(int order) const;
  /// Same terms (those <= order) under a new order tag.  Raising the tag
  /// asserts that the stored polynomial is exact, not a truncation.
  PolyScalar retagged(int order) const;

  PolyScalar derivative(std::size_t var) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& part : parts_)
      for (const auto& [m, c] : part) fn(m, c);
  }

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(const Scalar& s);
  PolyScalar operator-() const;

  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(PolyScalar a, const Scalar& s) { return a *= s; }
  friend PolyScalar operator*(const Scalar& s, PolyScalar a) { return a *= s; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);

  /// Same order tag and same terms.
  friend bool operator==(const PolyScalar& a, const PolyScalar& b);
  friend bool operator!=(const PolyScalar& a, const PolyScalar& b) { return !(a == b); }

 private:
  void check_compatible(const PolyScalar& o, const char* what) const;

  std::size_t n_ = 0;
  int order_ = 0;
  std::vector<TermMap> parts_;
};

/// Terms agree for every degree <= degree.
bool equal_through(const PolyScalar& a, const PolyScalar& b, int degree);

/// Coefficients of x_var^k for k = 0..order (all other exponents zero).
std::vector<Scalar> axis_coefficients(const PolyScalar& p, std::size_t var);

/// Human-readable rendering, e.g. "x1^2 - 1/2*x1*x2".
std::string to_string(const PolyScalar& p, const std::vector<std::string>& names);

}  // namespace pdnf
