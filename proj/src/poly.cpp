#include "pdnf/poly.hpp"

#include <algorithm>

#include "pdnf/error.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf {

PolyScalar::PolyScalar(std::size_t nvars, int order) : n_(nvars), order_(order) {
  if (order < 0 || order > 255)
    throw Error(ErrorCode::invalid_argument, "truncation order must lie in [0,255]");
  if (nvars > Monomial::kMaxVars)
    throw Error(ErrorCode::invalid_argument, "too many variables");
  parts_.resize(static_cast<std::size_t>(order) + 1);
}

PolyScalar PolyScalar::constant(std::size_t nvars, int order, const Scalar& c) {
  PolyScalar p(nvars, order);
  p.add_term(Monomial(nvars), c);
  return p;
}

PolyScalar PolyScalar::variable(std::size_t nvars, int order, std::size_t var) {
  PolyScalar p(nvars, order);
  p.add_term(Monomial::unit(nvars, var), Scalar(1));
  return p;
}

PolyScalar PolyScalar::term(std::size_t nvars, int order, const Monomial& m, const Scalar& c) {
  PolyScalar p(nvars, order);
  p.add_term(m, c);
  return p;
}

const TermMap& PolyScalar::homogeneous(int d) const {
  static const TermMap empty;
  if (d < 0 || d > order_) return empty;
  return parts_[static_cast<std::size_t>(d)];
}

PolyScalar PolyScalar::homogeneous_part(int d) const {
  PolyScalar p(n_, order_);
  if (d >= 0 && d <= order_) p.parts_[static_cast<std::size_t>(d)] = parts_[static_cast<std::size_t>(d)];
  return p;
}

void PolyScalar::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != n_) throw Error(ErrorCode::dimension_mismatch, "monomial dimension != polynomial dimension");
  if (m.degree() > order_ || c.is_zero()) return;
  auto& part = parts_[static_cast<std::size_t>(m.degree())];
  auto [it, inserted] = part.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) part.erase(it);
  }
}

void PolyScalar::add_product_term(const Monomial& m, const Scalar& a, const Scalar& b) {
  if (m.nvars() != n_) throw Error(ErrorCode::dimension_mismatch, "monomial dimension != polynomial dimension");
  if (m.degree() > order_ || a.is_zero() || b.is_zero()) return;
  auto& part = parts_[static_cast<std::size_t>(m.degree())];
  auto [it, inserted] = part.try_emplace(m);
  it->second.add_product(a, b);
  if (it->second.is_zero()) part.erase(it);
}

void PolyScalar::set_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != n_) throw Error(ErrorCode::dimension_mismatch, "monomial dimension != polynomial dimension");
  if (m.degree() > order_) return;
  auto& part = parts_[static_cast<std::size_t>(m.degree())];
  if (c.is_zero()) {
    part.erase(m);
  } else {
    part[m] = c;
  }
}

Scalar PolyScalar::coeff(const Monomial& m) const {
  if (m.degree() > order_ || m.nvars() != n_) return Scalar(0);
  const auto& part = parts_[static_cast<std::size_t>(m.degree())];
  auto it = part.find(m);
  return it == part.end() ? Scalar(0) : it->second;
}

void PolyScalar::assign_homogeneous(int d, TermMap part) {
  if (d < 0 || d > order_) return;
  for (auto it = part.begin(); it != part.end();) {
    if (it->first.nvars() != n_ || it->first.degree() != d)
      throw Error(ErrorCode::invalid_argument, "assign_homogeneous: monomial of wrong shape");
    it = it->second.is_zero() ? part.erase(it) : std::next(it);
  }
  parts_[static_cast<std::size_t>(d)] = std::move(part);
}

bool PolyScalar::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const TermMap& p) { return p.empty(); });
}

std::size_t PolyScalar::term_count() const {
  std::size_t n = 0;
  for (const auto& p : parts_) n += p.size();
  return n;
}

int PolyScalar::min_degree() const {
  for (std::size_t d = 0; d < parts_.size(); ++d)
    if (!parts_[d].empty()) return static_cast<int>(d);
  return -1;
}

int PolyScalar::max_degree() const {
  for (std::size_t d = parts_.size(); d-- > 0;)
    if (!parts_[d].empty()) return static_cast<int>(d);
  return -1;
}

PolyScalar PolyScalar::truncated(int order) const { return retagged(std::min(order, order_)); }

PolyScalar PolyScalar::retagged(int order) const {
  PolyScalar p(n_, order);
  for (int d = 0; d <= std::min(order, order_); ++d)
    p.parts_[static_cast<std::size_t>(d)] = parts_[static_cast<std::size_t>(d)];
  return p;
}

PolyScalar PolyScalar::derivative(std::size_t var) const {
  if (var >= n_) throw Error(ErrorCode::dimension_mismatch, "derivative variable out of range");
  PolyScalar p(n_, order_);
  for (std::size_t d = 1; d < parts_.size(); ++d) {
    auto& target = p.parts_[d - 1];
    for (const auto& [m, c] : parts_[d]) {
      const int e = m[var];
      if (e == 0) continue;
      target.emplace_hint(target.end(), m.lowered(var), c * Scalar(e));
    }
  }
  return p;
}

void PolyScalar::check_compatible(const PolyScalar& o, const char* what) const {
  if (o.n_ != n_)
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + ": " + std::to_string(n_) + " vs " + std::to_string(o.n_) +
                    " variables");
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  check_compatible(o, "polynomial sum");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int d = 0; d <= order_; ++d)
    for (const auto& [m, c] : o.parts_[static_cast<std::size_t>(d)]) add_term(m, c);
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
  check_compatible(o, "polynomial difference");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int d = 0; d <= order_; ++d)
    for (const auto& [m, c] : o.parts_[static_cast<std::size_t>(d)]) add_term(m, -c);
  return *this;
}

PolyScalar& PolyScalar::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    for (auto& p : parts_) p.clear();
    return *this;
  }
  for (auto& p : parts_)
    for (auto& [m, c] : p) c *= s;
  return *this;
}

PolyScalar PolyScalar::operator-() const {
  PolyScalar p(*this);
  for (auto& part : p.parts_)
    for (auto& [m, c] : part) c = -c;
  return p;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  a.check_compatible(b, "polynomial product");
  return kernels::multiply(a, b, std::min(a.order_, b.order_));
}

bool operator==(const PolyScalar& a, const PolyScalar& b) {
  return a.n_ == b.n_ && a.order_ == b.order_ && a.parts_ == b.parts_;
}

bool equal_through(const PolyScalar& a, const PolyScalar& b, int degree) {
  if (a.nvars() != b.nvars()) return false;
  for (int d = 0; d <= degree; ++d)
    if (a.homogeneous(d) != b.homogeneous(d)) return false;
  return true;
}

std::vector<Scalar> axis_coefficients(const PolyScalar& p, std::size_t var) {
  std::vector<Scalar> out(static_cast<std::size_t>(p.order()) + 1);
  for (int k = 0; k <= p.order(); ++k) {
    Monomial m(p.nvars());
    if (k > 0) m.set(var, k);
    out[static_cast<std::size_t>(k)] = p.coeff(m);
  }
  return out;
}

std::string to_string(const PolyScalar& p, const std::vector<std::string>& names) {
  std::string out;
  p.for_each([&](const Monomial& m, const Scalar& c) {
    std::string coeff = to_string(c);
    const bool compound = !c.is_real() && !c.is_imaginary();
    bool negative = !compound && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (compound) coeff = "(" + coeff + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.degree() == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += to_string(m, names);
    }
  });
  return out.empty() ? "0" : out;
}

}  // namespace pdnf
