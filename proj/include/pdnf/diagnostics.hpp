#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdnf/centralizer.hpp"
#include "pdnf/field.hpp"
#include "pdnf/normalizer.hpp"
#include "pdnf/resonance.hpp"

namespace pdnf {

/// First place where F^ fails to be alpha(x) * Ax: the offending vector
/// monomial is x^term e_comp.
struct ConditionAViolation {
  int degree = 0;
  Monomial term;
  std::size_t comp = 0;
  /// Component whose coefficient fixed alpha_m first, for inconsistencies.
  std::optional<std::size_t> other_comp;
  std::string reason;
};

struct ConditionAResult {
  bool satisfied = false;
  /// alpha to order N - 1 (the terms recovered before any violation are
  /// still reported).
  PolyScalar alpha;
  std::optional<ConditionAViolation> violation;
  /// X_fhat(alpha) == 0 and X_A(alpha) == 0 to order N - 1.
  bool alpha_invariant_under_fhat = false;
  bool alpha_invariant_under_a = false;
};

/// Throws not_normal_form.
ConditionAResult condition_A(const PolyVectorField& fhat);

/// F^ == 0 to the truncation order.
bool pliss_linear(const PolyVectorField& fhat);

enum class GrowthKind { geometric, factorial, inconclusive };
std::string_view to_string(GrowthKind k);

/// Fixed heuristic thresholds.
///   r_k = |c_{k+1}| / |c_k| over the later half of the longest trailing run
///   of nonzero coefficients;
///   factorial:  1/2 <= r_k / k <= 2 and r_k strictly increasing;
///   geometric:  max r_k / min r_k <= 2;
///   otherwise inconclusive.
inline constexpr std::string_view kGrowthRule =
    "r_k=|c_(k+1)/c_k| on the later half of the nonzero run; factorial if 1/2<=r_k/k<=2 and r_k "
    "increasing; geometric if max r/min r<=2; heuristic";

struct GrowthResult {
  GrowthKind kind = GrowthKind::inconclusive;
  /// factorial: mean of r_k / k; geometric: last r_k.  Approximate.
  double estimate = 0;
  /// Indices k (exponents) of the run that was examined.
  int first_index = 0;
  int last_index = 0;
};

/// coeffs[k] is the coefficient of x^k.  Needs at least 6 consecutive
/// nonzero coefficients (too_few_coefficients otherwise).
GrowthResult growth_classify(const std::vector<Scalar>& coeffs);
GrowthResult growth_classify(const PolyScalar& series, std::size_t var);

/// div(rho * f).
PolyScalar integrating_factor_residual(const PolyScalar& rho, const PolyVectorField& f);

/// phi * div f - X_f(phi); zero iff 1/phi is an integrating factor, with no
/// division needed.
PolyScalar reciprocal_integrating_factor_residual(const PolyScalar& phi, const PolyVectorField& f);

/// fhat = A0 x + alpha A0 x + beta x in dimension two.  Throws
/// dimension_mismatch, non_unique (lambda_1 == lambda_2),
/// not_representable (a term x^m e_j with m_j == 0).
struct AlphaBeta {
  PolyScalar alpha;
  PolyScalar beta;
};
AlphaBeta decompose_2d(const PolyVectorField& fhat);

enum class Verdict { verified_to_order, hypothesis_failed, not_applicable };
std::string_view to_string(Verdict v);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  /// Exact statement vs truncated evidence.
  bool exact = false;
  /// Informational checks do not enter the verdict.
  bool required = true;
  std::string detail;
};

struct TheoremEntry {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::not_applicable;
  std::string conclusion;
  std::string witness;
  std::vector<HypothesisCheck> checks;
  std::vector<std::string> caveats;
};

struct GrowthFinding {
  std::size_t component = 0;
  std::size_t var = 0;
  GrowthResult result;
};

struct DiagnoseOptions {
  /// Candidate commuting fields g (same dimension).
  std::vector<PolyVectorField> symmetries;
  int omega_k = 3;
  std::uint64_t omega_budget = kDefaultOmegaBudget;
  /// Degree bound for the centralizer check; 0 picks order - q + 1.
  int centralizer_degree = 0;
};

struct DiagnosticsReport {
  int order = 0;
  Spectrum spectrum;
  NormalFormResult normal;
  ConditionAResult condition_a;
  bool pliss = false;
  bool poincare = false;
  OmegaReport omega;
  std::optional<CentralizerBasis> centralizer;
  std::optional<GrowthFinding> growth;
  std::vector<TheoremEntry> theorems;
  /// Heuristic remarks; never a certified divergence claim.
  std::vector<std::string> notes;

  const TheoremEntry* find(std::string_view id) const;
};

DiagnosticsReport diagnose(const PolyVectorField& f, int order, const DiagnoseOptions& options = {});

}  // namespace pdnf
