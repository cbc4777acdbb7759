#pragma once

// Independent reference arithmetic for tests.  Coefficients are plain
// (re, im) pairs of mpq_class and polynomials are std::map keyed by
// exponent vectors; nothing here goes through the library's Scalar,
// Monomial or PolyScalar arithmetic, only through their accessors when
// converting.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pdnf/field.hpp"
#include "pdnf/matrix.hpp"

namespace oracle {

struct Gq {
  mpq_class re{0}, im{0};

  Gq() = default;
  Gq(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Gq(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool zero() const { return re == 0 && im == 0; }
  friend Gq operator+(const Gq& a, const Gq& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gq operator-(const Gq& a, const Gq& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gq operator*(const Gq& a, const Gq& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gq operator/(const Gq& a, const Gq& b) {
    const mpq_class n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Gq& a, const Gq& b) { return a.re == b.re && a.im == b.im; }
};

inline Gq from_scalar(const pdnf::Scalar& s) { return {mpq_class(s.re()), mpq_class(s.im())}; }
inline pdnf::Scalar to_scalar(const Gq& g) { return pdnf::Scalar(pdnf::Rational(g.re), pdnf::Rational(g.im)); }

using Exps = std::vector<int>;
using Poly = std::map<Exps, Gq>;
using Field = std::vector<Poly>;

inline int degree(const Exps& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

inline void add_to(Poly& p, const Exps& e, const Gq& c) {
  auto it = p.find(e);
  if (it == p.end()) {
    if (!c.zero()) p.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.zero()) p.erase(it);
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b) add_to(out, e, c);
  return out;
}

inline Poly scale(const Poly& a, const Gq& s) {
  Poly out;
  for (const auto& [e, c] : a) add_to(out, e, c * s);
  return out;
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, Gq(-1))); }

inline Poly mul(const Poly& a, const Poly& b, int order) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      if (degree(ea) + degree(eb) > order) continue;
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_to(out, e, ca * cb);
    }
  return out;
}

inline Poly deriv(const Poly& a, std::size_t var) {
  Poly out;
  for (const auto& [e, c] : a) {
    if (e[var] == 0) continue;
    Exps d = e;
    --d[var];
    add_to(out, d, c * Gq(e[var]));
  }
  return out;
}

inline Poly truncate(const Poly& a, int order) {
  Poly out;
  for (const auto& [e, c] : a)
    if (degree(e) <= order) out.emplace(e, c);
  return out;
}

/// X_f(phi) truncated at `order`.
inline Poly derivation(const Field& f, const Poly& phi, int order) {
  Poly out;
  for (std::size_t i = 0; i < f.size(); ++i) out = add(out, mul(f[i], deriv(phi, i), order));
  return out;
}

/// [f, g] = Dg f - Df g.
inline Field bracket(const Field& f, const Field& g, int order) {
  Field out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out[j] = sub(derivation(f, g[j], order), derivation(g, f[j], order));
  return out;
}

/// phi(map(x)) truncated at `order`; map has no constant terms.
inline Poly substitute(const Poly& phi, const Field& map, int order) {
  const std::size_t n = map.size();
  Poly out;
  for (const auto& [e, c] : phi) {
    Poly term{{Exps(n, 0), c}};
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) term = mul(term, map[i], order);
    out = add(out, term);
  }
  return out;
}

inline Poly from_poly(const pdnf::PolyScalar& p) {
  Poly out;
  p.for_each([&](const pdnf::Monomial& m, const pdnf::Scalar& c) { out.emplace(m.exponents(), from_scalar(c)); });
  return out;
}

inline Field from_field(const pdnf::PolyVectorField& f) {
  Field out;
  for (std::size_t j = 0; j < f.dim(); ++j) out.push_back(from_poly(f[j]));
  return out;
}

inline bool is_zero(const Field& f) {
  for (const auto& p : f)
    if (!p.empty()) return false;
  return true;
}

inline bool equal(const Field& a, const Field& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) return false;
  return true;
}

/// Cofactor-expansion determinant.
inline Gq determinant(const std::vector<std::vector<Gq>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Gq out;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Gq>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Gq> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Gq term = m[0][c] * determinant(minor);
    out = (c % 2 == 0) ? out + term : out - term;
  }
  return out;
}

/// Random sparse field with diagonal integer spectrum in [-spec_range,
/// spec_range] and `terms` nonlinear terms of degree 2..max_degree with
/// small integer coefficients.
inline pdnf::PolyVectorField random_field(std::mt19937_64& rng, std::size_t n, int max_degree, int order, int terms,
                                          int spec_range = 3) {
  std::uniform_int_distribution<int> ev(-spec_range, spec_range), coeff(-3, 3), deg(2, max_degree);
  std::uniform_int_distribution<std::size_t> comp(0, n - 1);
  std::vector<pdnf::Scalar> lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.emplace_back(ev(rng));
  pdnf::PolyVectorField f = pdnf::PolyVectorField::linear(pdnf::Spectrum(lambda), order);
  for (int t = 0; t < terms; ++t) {
    const int d = deg(rng);
    std::vector<int> e(n, 0);
    for (int k = 0; k < d; ++k) ++e[comp(rng)];
    int c = coeff(rng);
    if (c == 0) c = 1;
    f.add_term(comp(rng), pdnf::Monomial(std::span<const int>(e)), pdnf::Scalar(c));
  }
  return f;
}

/// Random field without a linear part.
inline pdnf::PolyVectorField random_nonlinear(std::mt19937_64& rng, std::size_t n, int min_degree, int max_degree,
                                              int order, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), deg(min_degree, max_degree);
  std::uniform_int_distribution<std::size_t> comp(0, n - 1);
  pdnf::PolyVectorField f(n, order);
  for (int t = 0; t < terms; ++t) {
    const int d = deg(rng);
    std::vector<int> e(n, 0);
    for (int k = 0; k < d; ++k) ++e[comp(rng)];
    int c = coeff(rng);
    if (c == 0) c = 2;
    f.add_term(comp(rng), pdnf::Monomial(std::span<const int>(e)), pdnf::Scalar(c));
  }
  return f;
}

}  // namespace oracle
