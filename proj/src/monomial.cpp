#include "pdnf/monomial.hpp"

#include <limits>

#include "pdnf/error.hpp"

namespace pdnf {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars)
    throw Error(ErrorCode::invalid_argument,
                "dimension " + std::to_string(nvars) + " exceeds the supported maximum of " +
                    std::to_string(kMaxVars));
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var) {
  Monomial m(nvars);
  m.set(var, 1);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= n_) throw Error(ErrorCode::dimension_mismatch, "monomial index out of range");
  if (value < 0 || value > 255)
    throw Error(ErrorCode::invalid_argument, "monomial exponent out of range [0,255]");
  degree_ += value - e_[i];
  e_[i] = static_cast<std::uint8_t>(value);
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = e_[i];
  return out;
}

Scalar Monomial::dot(std::span<const Scalar> lambda) const {
  if (lambda.size() != n_) throw Error(ErrorCode::dimension_mismatch, "spectrum length != dimension");
  Scalar s;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) s.add_product(Scalar(static_cast<int>(e_[i])), lambda[i]);
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.n_ != n_) throw Error(ErrorCode::dimension_mismatch, "monomial product dimension");
  Monomial m(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    int v = e_[i] + o.e_[i];
    if (v > 255) throw Error(ErrorCode::invalid_argument, "monomial exponent overflow");
    m.e_[i] = static_cast<std::uint8_t>(v);
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

Monomial Monomial::lowered(std::size_t var) const {
  Monomial m(*this);
  m.set(var, e_[var] - 1);
  return m;
}

Monomial Monomial::raised(std::size_t var) const {
  Monomial m(*this);
  m.set(var, e_[var] + 1);
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (o.n_ != n_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (o.e_[i] > e_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!divisible_by(o)) throw Error(ErrorCode::invalid_argument, "monomial quotient not exact");
  Monomial m(*this);
  for (std::size_t i = 0; i < n_; ++i) m.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
  m.degree_ = degree_ - o.degree_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 131 + e_[i];
  return h;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string exps_string(const Monomial& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (i) out += ",";
    out += std::to_string(m[i]);
  }
  return out + ")";
}

namespace {

void enumerate(std::size_t nvars, int remaining, std::size_t idx, Monomial& cur,
               std::vector<Monomial>& out) {
  if (idx + 1 == nvars) {
    cur.set(idx, remaining);
    out.push_back(cur);
    cur.set(idx, 0);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.set(idx, v);
    enumerate(nvars, remaining - v, idx + 1, cur, out);
  }
  cur.set(idx, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  enumerate(nvars, degree, 0, cur, out);
  return out;
}

std::uint64_t count_monomials(std::size_t nvars, int degree) {
  // C(degree + nvars - 1, nvars - 1), saturating at uint64 max.
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  const auto sat = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  const std::uint64_t k = nvars - 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (static_cast<unsigned __int128>(degree) + i) / i;
    if (acc > sat) return sat;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::string> default_var_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

}  // namespace pdnf
