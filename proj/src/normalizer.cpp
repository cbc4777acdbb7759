#include "pdnf/normalizer.hpp"

#include "pdnf/error.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf {

std::string_view to_string(NormalizationStyle s) {
  switch (s) {
    case NormalizationStyle::distinguished: return "distinguished";
  }
  return "distinguished";
}

NormalizationStyle parse_style(std::string_view text) {
  if (text == "distinguished") return NormalizationStyle::distinguished;
  throw Error(ErrorCode::invalid_argument, "unknown normalization style '" + std::string(text) + "'");
}

namespace {

// exp(ad w) f = f + [w,f] + [w,[w,f]]/2 + ...
PolyVectorField lie_exp(const PolyVectorField& w, const PolyVectorField& f) {
  PolyVectorField result = f;
  PolyVectorField term = f;
  for (int i = 1;; ++i) {
    term = lie_bracket(w, term);
    if (term.is_zero()) break;
    term *= Scalar(Rational(1, i));
    result += term;
  }
  return result;
}

// phi o (time-one flow of w) = phi + X_w phi + X_w^2 phi / 2 + ...
PolyScalar flow_exp(const PolyVectorField& w, const PolyScalar& phi) {
  PolyScalar result = phi;
  PolyScalar term = phi;
  for (int i = 1;; ++i) {
    term = apply_derivation(w, term);
    if (term.is_zero()) break;
    term *= Scalar(Rational(1, i));
    result += term;
  }
  return result;
}

}  // namespace

NormalFormResult normalize_carrying(const PolyVectorField& f, int order,
                                    std::vector<PolyVectorField>& passengers, NormalizationStyle style) {
  if (order < 2) throw Error(ErrorCode::order_too_small, "normal form order must be >= 2");
  if (order > f.order())
    throw Error(ErrorCode::order_exceeds_input, "requested order " + std::to_string(order) +
                                                    " exceeds the input truncation order " +
                                                    std::to_string(f.order()));
  const std::size_t n = f.dim();
  for (std::size_t j = 0; j < n; ++j)
    if (!f[j].homogeneous(0).empty())
      throw Error(ErrorCode::degenerate_input, "field has a constant term; the origin must be stationary");
  const auto spectrum = f.spectrum();
  if (!spectrum) throw Error(ErrorCode::not_diagonal, "linear part is not diagonal; conjugate it first");
  for (const auto& p : passengers)
    if (p.dim() != n) throw Error(ErrorCode::dimension_mismatch, "passenger field has the wrong dimension");

  NormalFormResult out;
  out.order = order;
  out.style = style;
  out.spectrum = *spectrum;

  PolyVectorField cur = f.truncated(order);
  for (auto& p : passengers) p = p.truncated(order);
  PolyVectorField t(n, order);
  for (std::size_t i = 0; i < n; ++i) t.add_term(i, Monomial::unit(n, i), Scalar(1));

  const std::vector<std::vector<Scalar>> spectra{spectrum->eigenvalues};
  for (int k = 2; k <= order; ++k) {
    DegreeRecord rec;
    rec.degree = k;
    rec.kernel_dim = kernels::resonant_pairs(spectra, n, k, k).size();
    rec.range_dim = static_cast<std::size_t>(count_monomials(n, k)) * n - rec.kernel_dim;

    PolyVectorField w(n, order);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : cur[j].homogeneous(k)) {
        const Scalar mu = m.dot(spectrum->eigenvalues) - (*spectrum)[j];
        if (mu.is_zero()) {
          ++rec.kept_terms;
        } else {
          w.add_term(j, m, c / mu);
          ++rec.removed_terms;
        }
      }

    if (!w.is_zero()) {
      cur = lie_exp(w, cur);
      for (auto& p : passengers) p = lie_exp(w, p);
      for (std::size_t i = 0; i < n; ++i) t.component(i) = flow_exp(w, t[i]);
    }
    out.generators.push_back(std::move(w));
    out.per_degree.push_back(rec);
  }

  out.normal_form = std::move(cur);
  out.inverse_transformation = NearIdentityMap::from_components(t);
  out.transformation = invert_to_order(out.inverse_transformation);
  return out;
}

NormalFormResult normalize(const PolyVectorField& f, int order, NormalizationStyle style) {
  std::vector<PolyVectorField> none;
  return normalize_carrying(f, order, none, style);
}

SymmetryNormalization normalize_with_symmetry(const PolyVectorField& f, const PolyVectorField& g,
                                              int order) {
  if (f.dim() != g.dim()) throw Error(ErrorCode::dimension_mismatch, "f and g have different dimensions");
  if (order > f.order() || order > g.order())
    throw Error(ErrorCode::order_exceeds_input, "requested order exceeds an input truncation order");
  if (auto bad = first_noncommuting_degree(f.truncated(order), g.truncated(order)))
    throw Error(ErrorCode::not_commuting,
                "[f, g] != 0 at degree " + std::to_string(*bad) + " (order " + std::to_string(order) + ")");

  std::vector<PolyVectorField> passengers{f};
  SymmetryNormalization out;
  out.symmetry = normalize_carrying(g, order, passengers);
  out.transformed = std::move(passengers.front());
  const PolyVectorField bx = PolyVectorField::linear(g.linear_part(), order);
  out.residual = lie_bracket(bx, out.transformed);
  return out;
}

bool is_normal_form(const PolyVectorField& f) {
  const auto spectrum = f.spectrum();
  if (!spectrum) return false;
  return lie_bracket(PolyVectorField::linear(*spectrum, f.order()), f).is_zero();
}

}  // namespace pdnf
