#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pdnf/field.hpp"
#include "pdnf/transform.hpp"

namespace pdnf {

/// Distinguished: the generator never carries a Ker(ad A) component.
enum class NormalizationStyle { distinguished };
std::string_view to_string(NormalizationStyle s);
NormalizationStyle parse_style(std::string_view text);

struct DegreeRecord {
  int degree = 0;
  /// dim Ker(ad A) on degree-k vector monomials.
  std::size_t kernel_dim = 0;
  /// dim Ran(ad A) on degree-k vector monomials.
  std::size_t range_dim = 0;
  /// Non-resonant terms of the degree-k part that the step removed.
  std::size_t removed_terms = 0;
  /// Resonant terms left in the normal form at degree k.
  std::size_t kept_terms = 0;
};

/// Coordinates: x is the input, y the normal-form coordinate.
///
/// At degree k the step uses the generator w_k and replaces the field by
/// exp(ad w_k) f, which is the field seen in coordinates y where x is the
/// time-one flow of w_k started at y.  Steps are composed with the earliest
/// step outermost:  x = T(y) = phi_2(phi_3(...phi_N(y))).
struct NormalFormResult {
  int order = 0;
  NormalizationStyle style = NormalizationStyle::distinguished;
  Spectrum spectrum;
  PolyVectorField normal_form;
  /// Psi: x -> y, so normal_form = push_forward(transformation, f).
  NearIdentityMap transformation;
  /// T = Psi^{-1}: y -> x.
  NearIdentityMap inverse_transformation;
  /// generators[i] is w_{i+2}; zero when nothing was removed.
  std::vector<PolyVectorField> generators;
  std::vector<DegreeRecord> per_degree;
};

inline constexpr std::string_view kCompositionOrder =
    "x = T(y) = phi_2(phi_3(...phi_N(y))), phi_k = time-one flow of generator w_k; "
    "transformation = T^{-1}";

/// Normal form to degree `order`.  The input must have a diagonal linear
/// part and no constant terms; it is truncated to `order` first.  Throws
/// not_diagonal, order_too_small, order_exceeds_input, degenerate_input.
NormalFormResult normalize(const PolyVectorField& f, int order,
                           NormalizationStyle style = NormalizationStyle::distinguished);

/// Like normalize, but also carries `passengers` through every step, i.e.
/// returns each passenger written in the normal-form coordinates.
NormalFormResult normalize_carrying(const PolyVectorField& f, int order,
                                    std::vector<PolyVectorField>& passengers,
                                    NormalizationStyle style = NormalizationStyle::distinguished);

struct SymmetryNormalization {
  /// Normal form of the symmetry g and its transformation.
  NormalFormResult symmetry;
  /// f in the coordinates that normalize g.
  PolyVectorField transformed;
  /// [Bx, transformed], B the linear part of g.
  PolyVectorField residual;

  bool residual_vanishes() const { return residual.is_zero(); }
};

/// Normalizes g, applies the same change of coordinates to f and reports
/// [Bx, f~].  Throws not_commuting, naming the first degree where
/// [f, g] != 0, when the inputs do not commute to the given order.
SymmetryNormalization normalize_with_symmetry(const PolyVectorField& f, const PolyVectorField& g,
                                              int order);

/// True iff [Ax, f] == 0 to f's order, A the diagonal linear part.
bool is_normal_form(const PolyVectorField& f);

}  // namespace pdnf
