#include "pdnf/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pdnf/error.hpp"

namespace pdnf {

namespace {

bool violation_before(const ConditionAViolation& a, const ConditionAViolation& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.term != b.term) return a.term < b.term;
  return a.comp < b.comp;
}

}  // namespace

ConditionAResult condition_A(const PolyVectorField& fhat) {
  if (!is_normal_form(fhat)) throw Error(ErrorCode::not_normal_form, "Condition A needs a normal form");
  const Spectrum spec = *fhat.spectrum();
  const std::size_t n = fhat.dim();
  const int order = fhat.order();

  ConditionAResult out;
  out.alpha = PolyScalar(n, std::max(order - 1, 0));
  std::map<Monomial, std::pair<Scalar, std::size_t>> source;
  std::vector<ConditionAViolation> bad;

  for (int d = 2; d <= order; ++d)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : fhat[j].homogeneous(d)) {
        if (m[j] == 0) {
          bad.push_back({d, m, j, std::nullopt, "term carries no factor x" + std::to_string(j + 1)});
          continue;
        }
        if (spec[j].is_zero()) {
          bad.push_back({d, m, j, std::nullopt, "eigenvalue of component " + std::to_string(j + 1) +
                                                    " is zero, so alpha*Ax has no such term"});
          continue;
        }
        const Monomial base = m.lowered(j);
        const Scalar a = c / spec[j];
        auto [it, fresh] = source.try_emplace(base, a, j);
        if (!fresh && it->second.first != a)
          bad.push_back({d, m, j, it->second.second,
                         "alpha coefficient differs from the one fixed by component " +
                             std::to_string(it->second.second + 1)});
      }

  for (const auto& [base, entry] : source) {
    out.alpha.add_term(base, entry.first);
    if (base.degree() + 1 > order) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (spec[j].is_zero()) continue;
      const Monomial m = base.raised(j);
      if (fhat.coeff(j, m).is_zero())
        bad.push_back({m.degree(), m, j, entry.second,
                       "term required by alpha*Ax is missing (alpha fixed by component " +
                           std::to_string(entry.second + 1) + ")"});
    }
  }

  if (!bad.empty()) out.violation = *std::min_element(bad.begin(), bad.end(), violation_before);
  out.satisfied = bad.empty();
  out.alpha_invariant_under_fhat = apply_derivation(fhat, out.alpha).is_zero();
  out.alpha_invariant_under_a =
      apply_derivation(PolyVectorField::linear(spec, out.alpha.order()), out.alpha).is_zero();
  return out;
}

bool pliss_linear(const PolyVectorField& fhat) { return fhat.from_degree(2).is_zero(); }

std::string_view to_string(GrowthKind k) {
  switch (k) {
    case GrowthKind::geometric: return "geometric";
    case GrowthKind::factorial: return "factorial";
    case GrowthKind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GrowthResult growth_classify(const std::vector<Scalar>& coeffs) {
  int last = static_cast<int>(coeffs.size()) - 1;
  while (last >= 0 && coeffs[static_cast<std::size_t>(last)].is_zero()) --last;
  int first = last;
  while (first > 0 && !coeffs[static_cast<std::size_t>(first - 1)].is_zero()) --first;
  if (last < 0 || last - first + 1 < 6)
    throw Error(ErrorCode::too_few_coefficients, "growth classification needs 6 consecutive nonzero coefficients");

  // Squared ratios r_k^2, exact.
  std::vector<std::pair<int, Rational>> r2;
  for (int k = first; k < last; ++k)
    r2.emplace_back(k, coeffs[static_cast<std::size_t>(k + 1)].norm() / coeffs[static_cast<std::size_t>(k)].norm());
  const std::size_t start = r2.size() / 2;

  GrowthResult out;
  out.first_index = first;
  out.last_index = last;

  bool factorial = true;
  double slope = 0;
  for (std::size_t i = start; i < r2.size(); ++i) {
    const Rational k2(r2[i].first * r2[i].first);
    if (r2[i].second * 4 < k2 || r2[i].second > k2 * 4) factorial = false;
    if (i > start && !(r2[i].second > r2[i - 1].second)) factorial = false;
    slope += std::sqrt(r2[i].second.get_d()) / r2[i].first;
  }
  if (factorial && r2[start].first > 0) {
    out.kind = GrowthKind::factorial;
    out.estimate = slope / static_cast<double>(r2.size() - start);
    return out;
  }

  auto [lo, hi] = std::minmax_element(r2.begin() + static_cast<std::ptrdiff_t>(start), r2.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
  if (hi->second <= lo->second * 4) {
    out.kind = GrowthKind::geometric;
    out.estimate = std::sqrt(r2.back().second.get_d());
    return out;
  }
  out.kind = GrowthKind::inconclusive;
  return out;
}

GrowthResult growth_classify(const PolyScalar& series, std::size_t var) {
  return growth_classify(axis_coefficients(series, var));
}

PolyScalar integrating_factor_residual(const PolyScalar& rho, const PolyVectorField& f) {
  if (rho.nvars() != f.dim()) throw Error(ErrorCode::dimension_mismatch, "rho and f have different dimensions");
  return divergence(rho * f);
}

PolyScalar reciprocal_integrating_factor_residual(const PolyScalar& phi, const PolyVectorField& f) {
  if (phi.nvars() != f.dim()) throw Error(ErrorCode::dimension_mismatch, "phi and f have different dimensions");
  return phi * divergence(f) - apply_derivation(f, phi);
}

AlphaBeta decompose_2d(const PolyVectorField& fhat) {
  if (fhat.dim() != 2) throw Error(ErrorCode::dimension_mismatch, "alpha/beta decomposition is two-dimensional");
  const auto spec = fhat.spectrum();
  if (!spec) throw Error(ErrorCode::not_diagonal, "linear part is not diagonal");
  const Scalar l1 = (*spec)[0], l2 = (*spec)[1];
  if (l1 == l2) throw Error(ErrorCode::non_unique, "equal eigenvalues: alpha and beta are not unique");

  const int order = std::max(fhat.order() - 1, 0);
  std::map<Monomial, std::pair<Scalar, Scalar>> coeff;  // base -> (c1, c2)
  for (std::size_t j = 0; j < 2; ++j)
    for (int d = 2; d <= fhat.order(); ++d)
      for (const auto& [m, c] : fhat[j].homogeneous(d)) {
        if (m[j] == 0)
          throw Error(ErrorCode::not_representable, "term " + exps_string(m) + " in component " +
                                                        std::to_string(j + 1) + " is not a multiple of x" +
                                                        std::to_string(j + 1));
        auto& slot = coeff[m.lowered(j)];
        (j == 0 ? slot.first : slot.second) = c;
      }

  AlphaBeta out{PolyScalar(2, order), PolyScalar(2, order)};
  for (const auto& [base, cs] : coeff) {
    // l1 a + b = c1, l2 a + b = c2.
    const Scalar a = (cs.first - cs.second) / (l1 - l2);
    out.alpha.add_term(base, a);
    out.beta.add_term(base, cs.first - l1 * a);
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified_to_order: return "hypotheses-verified-to-order-N";
    case Verdict::hypothesis_failed: return "hypothesis-failed";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

const TheoremEntry* DiagnosticsReport::find(std::string_view id) const {
  for (const auto& t : theorems)
    if (t.id == id) return &t;
  return nullptr;
}

namespace {

void settle(TheoremEntry& e) {
  e.verdict = Verdict::verified_to_order;
  for (const auto& c : e.checks)
    if (c.required && !c.passed) {
      e.verdict = Verdict::hypothesis_failed;
      if (e.witness.empty()) e.witness = c.name + ": " + c.detail;
    }
}

std::string describe(const ConditionAViolation& v) {
  return "degree " + std::to_string(v.degree) + ", term " + exps_string(v.term) + " in component " +
         std::to_string(v.comp + 1) + ": " + v.reason;
}

HypothesisCheck commute_check(const PolyVectorField& f, const PolyVectorField& g, int order) {
  HypothesisCheck c{"[f, g] = 0 to order " + std::to_string(order), false, false, true, ""};
  if (g.dim() != f.dim() || g.order() < order) {
    c.detail = g.dim() != f.dim() ? "dimension mismatch" : "symmetry truncated below the requested order";
    return c;
  }
  const auto bad = first_noncommuting_degree(f.truncated(order), g.truncated(order));
  c.passed = !bad.has_value();
  c.detail = bad ? "nonzero bracket at degree " + std::to_string(*bad) : "bracket vanishes";
  return c;
}

bool is_identity(const Matrix& m) { return m == Matrix::identity(m.rows()); }

// B = beta A for some scalar beta, returned when it exists.
std::optional<Scalar> multiple_of(const Matrix& b, const Matrix& a) {
  std::optional<Scalar> beta;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) {
        if (!b(i, j).is_zero()) return std::nullopt;
        continue;
      }
      const Scalar r = b(i, j) / a(i, j);
      if (beta && *beta != r) return std::nullopt;
      beta = r;
    }
  return beta ? beta : std::optional<Scalar>(Scalar(0));
}

std::string order_text(int order) { return std::to_string(order); }

}  // namespace

DiagnosticsReport diagnose(const PolyVectorField& f, int order, const DiagnoseOptions& options) {
  const auto spectrum = f.spectrum();
  if (!spectrum) throw Error(ErrorCode::not_diagonal, "linear part is not diagonal; conjugate it first");
  for (const auto& g : options.symmetries)
    if (g.dim() != f.dim()) throw Error(ErrorCode::dimension_mismatch, "symmetry has the wrong dimension");

  DiagnosticsReport r;
  r.order = order;
  r.spectrum = *spectrum;
  r.normal = normalize(f, order);
  const PolyVectorField& fh = r.normal.normal_form;
  r.condition_a = condition_A(fh);
  r.pliss = pliss_linear(fh);
  r.poincare = poincare_domain(*spectrum);
  r.omega = omega_condition(*spectrum, options.omega_k, options.omega_budget);
  const bool omega_ok = r.omega.verdict == OmegaVerdict::holds_by_rational_bound;
  const std::string n_text = order_text(order);

  int q = -1;
  for (int d = 2; d <= fh.order() && q < 0; ++d)
    for (std::size_t j = 0; j < fh.dim(); ++j)
      if (!fh[j].homogeneous(d).empty()) q = d;
  int cdeg = options.centralizer_degree;
  if (cdeg <= 0) cdeg = q < 0 ? order : std::max(1, order - q + 1);
  r.centralizer = centralizer_basis(fh, std::min(cdeg, order));

  // Growth of the normalizing map y -> x, nonlinear axis coefficients.
  {
    std::optional<GrowthFinding> geometric, other;
    const auto comps = r.normal.inverse_transformation.components();
    for (std::size_t i = 0; i < comps.dim() && !r.growth; ++i)
      for (std::size_t v = 0; v < comps.dim(); ++v) {
        auto c = axis_coefficients(comps[i], v);
        for (std::size_t k = 0; k < std::min<std::size_t>(2, c.size()); ++k) c[k] = Scalar(0);
        try {
          GrowthFinding g{i, v, growth_classify(c)};
          if (g.result.kind == GrowthKind::factorial) {
            r.growth = g;
            break;
          }
          if (g.result.kind == GrowthKind::geometric && !geometric) geometric = g;
          if (!other) other = g;
        } catch (const Error&) {
        }
      }
    if (!r.growth) r.growth = geometric ? geometric : other;
  }

  {
    TheoremEntry e{"poincare-domain", "eigenvalues in the Poincare domain imply a convergent normalizing transformation",
                   Verdict::not_applicable, "convergent normalizing transformation exists", "", {}, {}};
    e.checks.push_back({"0 outside the convex hull of the eigenvalues", r.poincare, true, true,
                        r.poincare ? "exact hull test" : "0 lies in the convex hull"});
    settle(e);
    r.theorems.push_back(std::move(e));
  }
  {
    TheoremEntry e{"bruno", "Condition omega and Condition A imply a convergent normalizing transformation",
                   Verdict::not_applicable, "convergent normalizing transformation exists", "", {}, {}};
    e.checks.push_back({"Condition omega", omega_ok, true, true, std::string(to_string(r.omega.verdict))});
    e.checks.push_back({"Condition A to order " + n_text, r.condition_a.satisfied, false, true,
                        r.condition_a.violation ? describe(*r.condition_a.violation) : "fhat = (1 + alpha) Ax"});
    settle(e);
    e.caveats.push_back("Condition A is checked on the truncated normal form only");
    r.theorems.push_back(std::move(e));
  }
  {
    TheoremEntry e{"pliss", "a linear formal normal form implies a convergent normalizing transformation",
                   Verdict::not_applicable, "convergent linearizing transformation exists", "", {}, {}};
    e.checks.push_back({"normal form linear to order " + n_text, r.pliss, false, true,
                        r.pliss ? "no nonlinear terms" : "normal form keeps resonant nonlinear terms"});
    e.checks.push_back({"Condition omega", omega_ok, true, true, std::string(to_string(r.omega.verdict))});
    settle(e);
    e.caveats.push_back("linearity is observed through order " + n_text + " only");
    r.theorems.push_back(std::move(e));
  }

  const auto& syms = options.symmetries;
  const Matrix a = f.linear_part();
  {
    TheoremEntry e{"linear-symmetry-kernel",
                   "a symmetry g = Bx + G with Ker ad A and Ker ad B meeting only in linear fields implies a "
                   "convergent linearizing transformation",
                   Verdict::not_applicable, "convergent transformation exists; normal forms of f and g are linear",
                   "", {}, {}};
    if (syms.empty()) {
      e.witness = "no commuting field supplied";
    } else {
      std::optional<TheoremEntry> first;
      for (std::size_t s = 0; s < syms.size(); ++s) {
        TheoremEntry t = e;
        const auto& g = syms[s];
        t.checks.push_back(commute_check(f, g, order));
        const auto bspec = g.spectrum();
        t.checks.push_back({"B diagonal", bspec.has_value(), true, true,
                            bspec ? to_string(*bspec) : "linear part of symmetry is not diagonal"});
        if (bspec) {
          t.checks.push_back({"B satisfies Condition omega", true, true, true, "Gaussian-rational spectrum"});
          const auto inter = kernel_intersection(*spectrum, *bspec, order);
          t.checks.push_back({"Ker ad A and Ker ad B share no nonlinear field to degree " + n_text, inter.empty(),
                              false, true,
                              inter.empty() ? "empty"
                                            : "contains " + exps_string(inter.front().m) + " in component " +
                                                  std::to_string(inter.front().comp + 1)});
        }
        t.checks.push_back({"normal form linear to order " + n_text, r.pliss, false, false, ""});
        settle(t);
        t.caveats.push_back("symmetry #" + std::to_string(s + 1) + " is assumed analytic");
        if (t.verdict == Verdict::verified_to_order) {
          first = std::move(t);
          break;
        }
        if (!first) first = std::move(t);
      }
      e = std::move(*first);
    }
    r.theorems.push_back(std::move(e));
  }
  {
    TheoremEntry e{"identity-symmetry",
                   "a symmetry with B = Dg(0) = I makes f formally linearizable, convergently if g is analytic",
                   Verdict::not_applicable, "f is linearizable by a convergent transformation", "", {}, {}};
    if (syms.empty()) {
      e.witness = "no commuting field supplied";
    } else {
      auto it = std::find_if(syms.begin(), syms.end(), [](const PolyVectorField& g) { return is_identity(g.linear_part()); });
      if (it == syms.end()) {
        e.checks.push_back({"B = I", false, true, true, "no supplied symmetry has identity linear part"});
      } else {
        e.checks.push_back({"B = I", true, true, true, "symmetry #" + std::to_string(it - syms.begin() + 1)});
        e.checks.push_back(commute_check(f, *it, order));
        e.checks.push_back({"normal form linear to order " + n_text, r.pliss, false, false, ""});
        e.caveats.push_back("the symmetry is assumed analytic");
      }
      settle(e);
    }
    r.theorems.push_back(std::move(e));
  }
  {
    TheoremEntry e{"planar-symmetry",
                   "in dimension two a nontrivial commuting analytic field implies a convergent normalizing transformation",
                   Verdict::not_applicable, "convergent normalizing transformation exists", "", {}, {}};
    if (f.dim() != 2) {
      e.witness = "dimension is not two";
    } else if (syms.empty()) {
      e.witness = "no commuting field supplied";
    } else {
      std::optional<TheoremEntry> first;
      for (std::size_t s = 0; s < syms.size(); ++s) {
        TheoremEntry t = e;
        t.checks.push_back(commute_check(f, syms[s], order));
        const bool nontrivial = span_rank({f.truncated(order), syms[s].truncated(order)}, order) == 2;
        t.checks.push_back({"g is not a constant multiple of f", nontrivial, false, true,
                            nontrivial ? "independent through order " + n_text : "g is proportional to f"});
        settle(t);
        t.caveats.push_back("analyticity of symmetry #" + std::to_string(s + 1) +
                            " is assumed; it cannot be verified from a truncation");
        if (t.verdict == Verdict::verified_to_order) {
          first = std::move(t);
          break;
        }
        if (!first) first = std::move(t);
      }
      e = std::move(*first);
    }
    r.theorems.push_back(std::move(e));
  }
  {
    TheoremEntry e{"centralizer-span",
                   "a formal centralizer spanned by fhat and linear fields plus an analytic symmetry g = beta Ax + G, "
                   "g != beta f, imply a convergent normalizing transformation",
                   Verdict::not_applicable, "convergent normalizing transformation exists", "", {}, {}};
    const auto& cb = *r.centralizer;
    const bool spanned = spanned_by_fhat_and_linear(cb, fh);
    HypothesisCheck span{"centralizer of fhat spanned by fhat and linear fields to degree " +
                             std::to_string(cb.degree_bound),
                         spanned, false, true,
                         "dimension " + std::to_string(cb.dimension()) + ", constraints through degree " +
                             std::to_string(cb.constraint_degree) +
                             (cb.fully_constrained() ? "" : ", some elements not fully constrained")};
    if (syms.empty()) {
      e.checks.push_back(span);
      e.checks.back().required = false;
      e.witness = "no commuting field supplied";
    } else {
      std::optional<TheoremEntry> first;
      for (std::size_t s = 0; s < syms.size(); ++s) {
        TheoremEntry t = e;
        t.checks.push_back(span);
        const auto& g = syms[s];
        t.checks.push_back(commute_check(f, g, order));
        const auto beta = multiple_of(g.linear_part(), a);
        t.checks.push_back({"linear part of g is beta A", beta.has_value(), true, true,
                            beta ? "beta = " + to_string(*beta) : "linear part is not a multiple of A"});
        if (beta) {
          const bool differs = !(g.truncated(order) - (*beta) * f.truncated(order)).is_zero();
          t.checks.push_back({"g != beta f", differs, false, true,
                              differs ? "differs through order " + n_text : "g equals beta f"});
        }
        settle(t);
        t.caveats.push_back("symmetry #" + std::to_string(s + 1) + " is assumed analytic");
        if (t.verdict == Verdict::verified_to_order) {
          first = std::move(t);
          break;
        }
        if (!first) first = std::move(t);
      }
      e = std::move(*first);
    }
    e.caveats.push_back("the centralizer is computed to a finite degree; its true dimension may be smaller");
    r.theorems.push_back(std::move(e));
  }

  const bool any_verified = std::any_of(r.theorems.begin(), r.theorems.end(), [](const TheoremEntry& t) {
    return t.verdict == Verdict::verified_to_order;
  });
  if (r.growth && r.growth->result.kind == GrowthKind::factorial && !any_verified)
    r.notes.push_back("factorial coefficient growth in component " + std::to_string(r.growth->component + 1) +
                      " of the normalizing map along x" + std::to_string(r.growth->var + 1) +
                      " suggests divergence (heuristic, not certified)");
  r.notes.push_back("divergence is never certified; growth classification is a heuristic (" +
                    std::string(kGrowthRule) + ")");
  return r;
}

}  // namespace pdnf
