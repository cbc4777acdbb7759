#include "pdnf/transform.hpp"

#include <algorithm>
#include <map>

#include "pdnf/error.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf {

NearIdentityMap::NearIdentityMap(Matrix linear, PolyVectorField h)
    : linear_(std::move(linear)), h_(std::move(h)) {
  if (!linear_.is_square() || linear_.rows() != h_.dim())
    throw Error(ErrorCode::dimension_mismatch, "map linear part and nonlinear part disagree in dimension");
  for (int d = 0; d <= std::min(1, h_.order()); ++d)
    if (!h_.homogeneous_part(d).is_zero())
      throw Error(ErrorCode::invalid_argument, "nonlinear part of a map must start at degree 2");
}

NearIdentityMap NearIdentityMap::identity(std::size_t n, int order) {
  return NearIdentityMap(Matrix::identity(n), PolyVectorField(n, order));
}

NearIdentityMap NearIdentityMap::linear_map(const Matrix& l, int order) {
  return NearIdentityMap(l, PolyVectorField(l.rows(), order));
}

NearIdentityMap NearIdentityMap::from_components(const PolyVectorField& components) {
  if (!components.homogeneous_part(0).is_zero())
    throw Error(ErrorCode::invalid_argument, "map components must vanish at the origin");
  return NearIdentityMap(components.linear_part(), components.from_degree(2));
}

PolyVectorField NearIdentityMap::components() const {
  return PolyVectorField::linear(linear_, h_.order()) + h_;
}

bool NearIdentityMap::is_identity() const {
  return linear_ == Matrix::identity(dim()) && h_.is_zero();
}

namespace {

/// Lazily evaluates map(x)^m for the monomials an outer polynomial needs.
/// x^m is built as x^(m - e_i) * map_i for the first i with m_i > 0, so each
/// distinct monomial costs one truncated product.
class SubstitutionCache {
 public:
  SubstitutionCache(const PolyVectorField& comps, int order)
      : comps_(comps.truncated(order)), order_(order) {}

  const PolyScalar& power(const Monomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    PolyScalar value;
    if (m.degree() == 0) {
      value = PolyScalar::constant(m.nvars(), order_, Scalar(1));
    } else {
      std::size_t var = 0;
      while (m[var] == 0) ++var;
      if (m.degree() == 1) {
        value = comps_[var];
      } else {
        const PolyScalar& lower = power(m.lowered(var));
        value = kernels::multiply(lower, comps_[var], order_);
      }
    }
    return memo_.emplace(m, std::move(value)).first->second;
  }

  PolyScalar substitute(const PolyScalar& phi) {
    PolyScalar out(phi.nvars(), order_);
    for (int d = 0; d <= std::min(order_, phi.order()); ++d) {
      for (const auto& [m, c] : phi.homogeneous(d)) {
        const PolyScalar& p = power(m);
        p.for_each([&](const Monomial& mm, const Scalar& cc) { out.add_product_term(mm, c, cc); });
      }
    }
    return out;
  }

 private:
  PolyVectorField comps_;
  int order_;
  std::map<Monomial, PolyScalar> memo_;
};

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw Error(ErrorCode::dimension_mismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

PolyScalar compose_scalar(const PolyScalar& phi, const NearIdentityMap& map) {
  check_same_dim(phi.nvars(), map.dim(), "compose_scalar");
  SubstitutionCache cache(map.components(), std::min(phi.order(), map.order()));
  return cache.substitute(phi);
}

PolyVectorField compose_components(const PolyVectorField& outer, const NearIdentityMap& map) {
  check_same_dim(outer.dim(), map.dim(), "compose");
  SubstitutionCache cache(map.components(), std::min(outer.order(), map.order()));
  std::vector<PolyScalar> out;
  out.reserve(outer.dim());
  for (const auto& c : outer.components()) out.push_back(cache.substitute(c));
  return PolyVectorField(std::move(out));
}

NearIdentityMap compose(const NearIdentityMap& outer, const NearIdentityMap& inner) {
  check_same_dim(outer.dim(), inner.dim(), "compose");
  return NearIdentityMap::from_components(compose_components(outer.components(), inner));
}

NearIdentityMap invert_to_order(const NearIdentityMap& map) {
  auto linv = inverse(map.linear());
  if (!linv) throw Error(ErrorCode::singular_linear_part, "invert_to_order: linear part is singular");
  const std::size_t n = map.dim();
  const int order = map.order();

  // psi = L^{-1} (y - h(psi)); after the pass at truncation j, psi is exact
  // through degree j, so each pass only needs order j.
  PolyVectorField psi = PolyVectorField::linear(*linv, order);
  for (int j = 2; j <= order; ++j) {
    NearIdentityMap current = NearIdentityMap::from_components(psi.truncated(j - 1).retagged(j));
    PolyVectorField h_of_psi = compose_components(map.nonlinear().truncated(j), current);
    PolyVectorField rhs = PolyVectorField::linear(Matrix::identity(n), j) - h_of_psi;
    PolyVectorField next(n, order);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Scalar& a = (*linv)(r, c);
        if (a.is_zero()) continue;
        rhs[c].for_each([&](const Monomial& m, const Scalar& v) { next.component(r).add_product_term(m, a, v); });
      }
    psi = next;
  }
  return NearIdentityMap::from_components(psi);
}

PolyVectorField push_forward(const NearIdentityMap& map, const PolyVectorField& f) {
  check_same_dim(map.dim(), f.dim(), "push_forward");
  const int order = std::min(map.order(), f.order());
  PolyVectorField comps = map.components().truncated(order);
  std::vector<PolyScalar> transported;
  transported.reserve(f.dim());
  PolyVectorField ft = f.truncated(order);
  for (const auto& c : comps.components()) transported.push_back(apply_derivation(ft, c));
  NearIdentityMap inv = invert_to_order(NearIdentityMap::from_components(comps));
  return compose_components(PolyVectorField(std::move(transported)), inv);
}

PolyVectorField linear_conjugate(const Matrix& m, const PolyVectorField& f) {
  if (!m.is_square() || m.rows() != f.dim())
    throw Error(ErrorCode::dimension_mismatch, "conjugation matrix does not match the field dimension");
  return push_forward(NearIdentityMap::linear_map(m, f.order()), f);
}

}  // namespace pdnf
