#include "pdnf/field.hpp"

#include <algorithm>

#include "pdnf/error.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf {

Spectrum Spectrum::scaled(const Scalar& c) const {
  Spectrum s = *this;
  for (auto& v : s.eigenvalues) v *= c;
  return s;
}

std::string to_string(const Spectrum& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s[i]);
  }
  return out + ")";
}

PolyVectorField::PolyVectorField(std::size_t dim, int order) : order_(order) {
  comps_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) comps_.emplace_back(dim, order);
}

PolyVectorField::PolyVectorField(std::vector<PolyScalar> components) : comps_(std::move(components)) {
  if (comps_.empty()) return;
  order_ = comps_.front().order();
  for (const auto& c : comps_) {
    if (c.nvars() != comps_.size())
      throw Error(ErrorCode::dimension_mismatch, "vector field component has wrong number of variables");
    if (c.order() != order_)
      throw Error(ErrorCode::invalid_argument, "vector field components must share one truncation order");
  }
}

PolyVectorField PolyVectorField::linear(const Spectrum& spectrum, int order) {
  return linear(spectrum.matrix(), order);
}

PolyVectorField PolyVectorField::linear(const Matrix& a, int order) {
  if (!a.is_square()) throw Error(ErrorCode::dimension_mismatch, "linear field needs a square matrix");
  const std::size_t n = a.rows();
  PolyVectorField f(n, order);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) f.add_term(r, Monomial::unit(n, c), a(r, c));
  return f;
}

void PolyVectorField::add_term(std::size_t comp, const Monomial& m, const Scalar& c) {
  if (comp >= comps_.size()) throw Error(ErrorCode::dimension_mismatch, "component index out of range");
  comps_[comp].add_term(m, c);
}

Scalar PolyVectorField::coeff(std::size_t comp, const Monomial& m) const {
  if (comp >= comps_.size()) throw Error(ErrorCode::dimension_mismatch, "component index out of range");
  return comps_[comp].coeff(m);
}

Matrix PolyVectorField::linear_part() const {
  const std::size_t n = dim();
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [m, c] : comps_[r].homogeneous(1))
      for (std::size_t v = 0; v < n; ++v)
        if (m[v] == 1) a(r, v) = c;
  return a;
}

std::optional<Spectrum> PolyVectorField::spectrum() const {
  Matrix a = linear_part();
  if (!a.is_diagonal()) return std::nullopt;
  return Spectrum(a.diagonal_entries());
}

PolyVectorField PolyVectorField::homogeneous_part(int d) const {
  std::vector<PolyScalar> c;
  for (const auto& p : comps_) c.push_back(p.homogeneous_part(d));
  PolyVectorField f(std::move(c));
  f.order_ = order_;
  return f;
}

PolyVectorField PolyVectorField::from_degree(int d) const {
  PolyVectorField f(dim(), order_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (int k = std::max(d, 0); k <= order_; ++k)
      for (const auto& [m, c] : comps_[i].homogeneous(k)) f.comps_[i].add_term(m, c);
  return f;
}

PolyVectorField PolyVectorField::truncated(int order) const { return retagged(std::min(order, order_)); }

PolyVectorField PolyVectorField::retagged(int order) const {
  PolyVectorField f(dim(), order);
  for (std::size_t i = 0; i < dim(); ++i) f.comps_[i] = comps_[i].retagged(order);
  return f;
}

bool PolyVectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const PolyScalar& p) { return p.is_zero(); });
}

std::size_t PolyVectorField::term_count() const {
  std::size_t n = 0;
  for (const auto& c : comps_) n += c.term_count();
  return n;
}

int PolyVectorField::min_degree() const {
  int best = -1;
  for (const auto& c : comps_) {
    int d = c.min_degree();
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  return best;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::dimension_mismatch, "vector field sum dimension");
  for (std::size_t i = 0; i < dim(); ++i) comps_[i] += o.comps_[i];
  order_ = std::min(order_, o.order_);
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  if (o.dim() != dim()) throw Error(ErrorCode::dimension_mismatch, "vector field difference dimension");
  for (std::size_t i = 0; i < dim(); ++i) comps_[i] -= o.comps_[i];
  order_ = std::min(order_, o.order_);
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const Scalar& s) {
  for (auto& c : comps_) c *= s;
  return *this;
}

PolyVectorField operator*(const PolyScalar& phi, const PolyVectorField& f) {
  if (phi.nvars() != f.dim()) throw Error(ErrorCode::dimension_mismatch, "scalar times field dimension");
  std::vector<PolyScalar> c;
  for (const auto& p : f.components()) c.push_back(phi * p);
  return PolyVectorField(std::move(c));
}

bool equal_through(const PolyVectorField& a, const PolyVectorField& b, int degree) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!equal_through(a[i], b[i], degree)) return false;
  return true;
}

PolyVectorField lie_bracket(const PolyVectorField& f, const PolyVectorField& g) {
  if (f.dim() != g.dim())
    throw Error(ErrorCode::dimension_mismatch, "lie_bracket: fields of dimension " +
                                                   std::to_string(f.dim()) + " and " +
                                                   std::to_string(g.dim()));
  const std::size_t n = f.dim();
  const int order = std::min(f.order(), g.order());
  std::vector<PolyScalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyScalar acc(n, order);
    for (std::size_t k = 0; k < n; ++k) {
      if (!f[k].is_zero()) acc += kernels::multiply(f[k], g[i].derivative(k), order);
      if (!g[k].is_zero()) acc -= kernels::multiply(g[k], f[i].derivative(k), order);
    }
    out.push_back(std::move(acc));
  }
  return PolyVectorField(std::move(out));
}

PolyScalar apply_derivation(const PolyVectorField& f, const PolyScalar& phi) {
  if (phi.nvars() != f.dim())
    throw Error(ErrorCode::dimension_mismatch, "apply_derivation: dimension mismatch");
  const int order = std::min(f.order(), phi.order());
  PolyScalar acc(f.dim(), order);
  for (std::size_t k = 0; k < f.dim(); ++k)
    if (!f[k].is_zero()) acc += kernels::multiply(f[k], phi.derivative(k), order);
  return acc;
}

PolyScalar divergence(const PolyVectorField& f) {
  PolyScalar acc(f.dim(), f.order());
  for (std::size_t k = 0; k < f.dim(); ++k) acc += f[k].derivative(k);
  return acc;
}

std::optional<int> first_noncommuting_degree(const PolyVectorField& f, const PolyVectorField& g) {
  PolyVectorField b = lie_bracket(f, g);
  int d = b.min_degree();
  if (d < 0) return std::nullopt;
  return d;
}

std::string to_string(const PolyVectorField& f, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    std::string lhs = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    out += lhs + "' = " + to_string(f[i], names) + "\n";
  }
  return out;
}

}  // namespace pdnf
