#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pdnf/field.hpp"
#include "pdnf/kernels.hpp"

namespace pdnf {

/// (m, comp) with <m, Lambda> == lambda_comp and |m| >= 2.
using ResonanceRelation = kernels::MonomialVector;

/// Every resonance with 2 <= |m| <= max_degree, graded order then component.
/// Throws order_too_small when max_degree < 2.
std::vector<ResonanceRelation> resonant_monomials(const Spectrum& spectrum, int max_degree);

/// True iff 0 lies outside the convex hull of the eigenvalues in the
/// complex plane.  Exact; handles point and segment hulls.
bool poincare_domain(const Spectrum& spectrum);

enum class OmegaVerdict { holds_by_rational_bound, holds_empirically_to_k, inconclusive };
std::string_view to_string(OmegaVerdict v);

struct OmegaRecord {
  int k = 0;
  /// min |<Q,L> - L_j|^2 over nonzero values with 1 < |Q| < 2^k.  nullopt
  /// stands for +infinity (empty range or no nonzero value).
  std::optional<Rational> omega_squared;
  /// 2^-k * ln(1/omega_k); 0 when omega_k is infinite.
  double term = 0;
  double partial_sum = 0;
};

struct OmegaReport {
  int max_k = 0;
  std::vector<OmegaRecord> records;
  OmegaVerdict verdict = OmegaVerdict::inconclusive;
  /// q such that every nonzero |<Q,L> - L_j| >= 1/q.
  mpz_class denominator{1};
  /// Number of multi-indices Q that were enumerated.
  std::uint64_t tuples = 0;
};

inline constexpr std::uint64_t kDefaultOmegaBudget = 10'000'000;

/// Multi-indices with 2 <= |Q| <= 2^max_k - 1 in n variables (saturating).
std::uint64_t omega_enumeration_size(std::size_t n, int max_k);

/// Exhaustive evaluation of omega_k for k = 1..max_k.  Refuses with
/// budget_exceeded when the enumeration would visit more than `budget`
/// multi-indices.
OmegaReport omega_condition(const Spectrum& spectrum, int max_k,
                            std::uint64_t budget = kDefaultOmegaBudget);

/// ln of a positive rational, accurate for huge numerators and
/// denominators.
double log_rational(const Rational& q);

}  // namespace pdnf
