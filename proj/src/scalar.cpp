#include "pdnf/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "pdnf/error.hpp"

namespace pdnf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::not_diagonal: return "not-diagonal";
    case ErrorCode::order_too_small: return "order-too-small";
    case ErrorCode::order_exceeds_input: return "order-exceeds-input";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::singular_linear_part: return "singular-linear-part";
    case ErrorCode::not_normal_form: return "not-normal-form";
    case ErrorCode::not_commuting: return "not-commuting";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::too_few_coefficients: return "too-few-coefficients";
    case ErrorCode::not_representable: return "not-representable";
    case ErrorCode::non_unique: return "non-unique";
    case ErrorCode::invalid_family: return "invalid-family";
    case ErrorCode::repeated_eigenvalues: return "repeated-eigenvalues";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

namespace {

[[noreturn]] void bad_scalar(std::string_view text, const char* why) {
  throw Error(ErrorCode::parse_error,
              "bad exact scalar '" + std::string(text) + "': " + why);
}

// Parses an unsigned rational "a" or "a/b" starting at pos; advances pos.
Rational parse_unsigned_rational(std::string_view text, std::size_t& pos) {
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return std::string(text.substr(start, p - start));
  };
  std::string num = digits(pos);
  if (num.empty()) bad_scalar(text, "expected digits");
  mpz_class n(num, 10);
  mpz_class d(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den = digits(pos);
    if (den.empty()) bad_scalar(text, "expected denominator digits");
    d = mpz_class(den, 10);
    if (d == 0) bad_scalar(text, "zero denominator");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view raw) {
  std::string compact;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view text(compact);
  if (text.empty()) bad_scalar(raw, "empty");

  Rational re(0), im(0);
  bool seen_re = false, seen_im = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    bool had_sign = false;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      had_sign = true;
      ++pos;
    }
    if (pos > 0 && !had_sign) bad_scalar(raw, "expected '+' or '-' between parts");
    if (pos >= text.size()) bad_scalar(raw, "dangling sign");

    Rational value(1);
    bool is_imag = false;
    if (text[pos] == 'i') {
      is_imag = true;
      ++pos;
    } else {
      value = parse_unsigned_rational(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        if (pos >= text.size() || text[pos] != 'i') bad_scalar(raw, "expected 'i' after '*'");
        ++pos;
        is_imag = true;
      } else if (pos < text.size() && text[pos] == 'i') {
        bad_scalar(raw, "write the imaginary part as c*i");
      }
    }
    if (sign < 0) value = -value;
    if (is_imag) {
      if (seen_im) bad_scalar(raw, "two imaginary parts");
      im = value;
      seen_im = true;
    } else {
      if (seen_re || seen_im) bad_scalar(raw, "real part must come first and only once");
      re = value;
      seen_re = true;
    }
  }
  return Scalar(re, im);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Scalar& s) {
  const bool has_re = sgn(s.re()) != 0;
  const bool has_im = sgn(s.im()) != 0;
  if (!has_re && !has_im) return "0";
  std::string out;
  if (has_re) out = to_string(s.re());
  if (has_im) {
    Rational mag = abs(s.im());
    bool neg = sgn(s.im()) < 0;
    if (neg) {
      out += "-";
    } else if (has_re) {
      out += "+";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

mpz_class common_denominator(const Scalar& s) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), s.re().get_den_mpz_t(), s.im().get_den_mpz_t());
  return out;
}

double approx_abs(const Scalar& s) { return std::sqrt(s.norm().get_d()); }

}  // namespace pdnf
