#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pdnf {

using Rational = mpq_class;

/// Exact Gaussian rational re + im*i.  Both parts are kept canonical
/// (coprime, positive denominator), so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  /// this += a * b without temporaries for the common real case.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order (real part, then imaginary part); only used for
  /// deterministic sorting, not as a field ordering.
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses `a`, `a/b`, `c/d*i`, `i`, `-i`, `a/b+c/d*i` (optional signs).
/// Throws Error(parse_error) on malformed input or zero denominators.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "0", "3/2", "-i", "2*i", "1/2-3*i".
std::string to_string(const Scalar& s);
std::string to_string(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Least common multiple of the denominators of both parts.
mpz_class common_denominator(const Scalar& s);

/// Approximate modulus, for human-readable reports only.
double approx_abs(const Scalar& s);

}  // namespace pdnf
