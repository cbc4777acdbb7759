#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf {

/// Exponent vector (m_1, ..., m_n) stored inline.  Dimension is capped at
/// kMaxVars and each exponent at 255; both limits are checked on
/// construction.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial unit(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return n_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return e_[i]; }

  void set(std::size_t i, int value);

  std::vector<int> exponents() const;

  /// <m, lambda> = sum m_i lambda_i.
  Scalar dot(std::span<const Scalar> lambda) const;

  Monomial operator*(const Monomial& o) const;
  /// m - e_var; requires m[var] > 0.
  Monomial lowered(std::size_t var) const;
  Monomial raised(std::size_t var) const;
  /// Exponent-wise m - o; requires o divides m.
  Monomial quotient(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;

  /// Graded order: lower degree first; within a degree, larger exponent
  /// vectors (lexicographically) first, so x1^d leads.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return b.e_ < a.e_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  int degree_ = 0;
};

/// "x1^2*x3" style rendering with the supplied variable names.
std::string to_string(const Monomial& m, std::span<const std::string> names);
/// "(2,0,1)" rendering.
std::string exps_string(const Monomial& m);

/// All monomials of exactly `degree` in nvars variables, in Monomial order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Number of monomials of exactly `degree` in nvars variables (saturating).
std::uint64_t count_monomials(std::size_t nvars, int degree);

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem = "x");

}  // namespace pdnf

template <>
struct std::hash<pdnf::Monomial> {
  std::size_t operator()(const pdnf::Monomial& m) const noexcept { return m.hash(); }
};
