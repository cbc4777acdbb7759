#include <doctest.h>

#include <functional>

#include <random>

#include "pdnf/error.hpp"
#include "pdnf/normalizer.hpp"
#include "support/oracle.hpp"

using namespace pdnf;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("normal form keeps exactly the resonant terms at the first nonlinear degree") {
  // L = (1, 2): x1^2 e2 is resonant, x1 x2 e1 is not.
  PolyVectorField f = PolyVectorField::linear(Spectrum{1, 2}, 4);
  f.add_term(1, Monomial{2, 0}, 3);
  f.add_term(0, Monomial{1, 1}, 5);
  const NormalFormResult r = normalize(f, 4);
  CHECK(r.normal_form.coeff(1, Monomial{2, 0}) == Scalar(3));
  CHECK(r.normal_form.coeff(0, Monomial{1, 1}).is_zero());
  CHECK(is_normal_form(r.normal_form));
  REQUIRE(r.per_degree.size() == 3);
  CHECK(r.per_degree[0].degree == 2);
  CHECK(r.per_degree[0].kernel_dim == 1);
  CHECK(r.per_degree[0].range_dim == 5);
  CHECK(r.per_degree[0].removed_terms == 1);
  CHECK(r.per_degree[0].kept_terms == 1);
}

TEST_CASE("transformations are mutually inverse and conjugate f to the normal form") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    const PolyVectorField f = oracle::random_field(rng, 3, 4, 6, 5);
    const NormalFormResult r = normalize(f, 6);
    CHECK(is_normal_form(r.normal_form));
    CHECK(compose(r.transformation, r.inverse_transformation) == NearIdentityMap::identity(3, 6));
    CHECK(push_forward(r.transformation, f) == r.normal_form);
    CHECK(push_forward(r.inverse_transformation, r.normal_form) == f);
  }
}

TEST_CASE("distinguished generators have no kernel component") {
  std::mt19937_64 rng(22);
  const PolyVectorField f = oracle::random_field(rng, 2, 4, 5, 8, 2);
  const NormalFormResult r = normalize(f, 5);
  const PolyVectorField ax = PolyVectorField::linear(r.spectrum, 5);
  for (const auto& w : r.generators) {
    // Every generator term is non-resonant: [Ax, term] != 0.
    for (std::size_t j = 0; j < w.dim(); ++j)
      w[j].for_each([&](const Monomial& m, const Scalar&) {
        CHECK(m.dot(r.spectrum.eigenvalues) != r.spectrum.eigenvalues[j]);
      });
  }
  (void)ax;
}

TEST_CASE("normalizing an already normal field is the identity") {
  PolyVectorField f = PolyVectorField::linear(Spectrum{1, -1}, 6);
  f.add_term(0, Monomial{2, 1}, 1);
  f.add_term(1, Monomial{1, 2}, -1);
  const NormalFormResult r = normalize(f, 6);
  CHECK(r.normal_form == f);
  CHECK(r.transformation.is_identity());
}

TEST_CASE("normalize errors") {
  PolyVectorField f = PolyVectorField::linear(Spectrum{1, 2}, 3);
  CHECK(code_of([&] { normalize(f, 1); }) == ErrorCode::order_too_small);
  CHECK(code_of([&] { normalize(f, 5); }) == ErrorCode::order_exceeds_input);
  PolyVectorField nd(2, 3);
  nd.add_term(0, Monomial{0, 1}, 1);
  CHECK(code_of([&] { normalize(nd, 3); }) == ErrorCode::not_diagonal);
  PolyVectorField c = f;
  c.add_term(0, Monomial{0, 0}, 1);
  CHECK(code_of([&] { normalize(c, 3); }) == ErrorCode::degenerate_input);
  CHECK(to_string(parse_style("distinguished")) == "distinguished");
  CHECK_THROWS_AS(parse_style("other"), Error);
}

TEST_CASE("normalize_with_symmetry on the SO(2) pair") {
  const int order = 5;
  const std::size_t n = 3;
  const PolyScalar x1 = PolyScalar::variable(n, order, 0), x2 = PolyScalar::variable(n, order, 1),
                   x3 = PolyScalar::variable(n, order, 2);
  const PolyScalar rho = x1 * x1 + x2 * x2;
  const std::vector<PolyScalar> rot{x1 + x2, x2 - x1, x3};
  PolyVectorField f = PolyVectorField::linear(Spectrum{1, 1, -2}, order), g(n, order);
  for (std::size_t j = 0; j < n; ++j) {
    f.component(j) += (rho * x3 + x3 * x3 * x3) * rot[j];
    g.component(j) += rho * x3 * rot[j];
  }
  // Roles swapped: normalize f, carry g.
  const SymmetryNormalization s = normalize_with_symmetry(g, f, order);
  CHECK(s.residual_vanishes());
  CHECK(is_normal_form(s.symmetry.normal_form));

  PolyVectorField h = g;
  h.add_term(0, Monomial{0, 0, 2}, 1);
  try {
    normalize_with_symmetry(h, f, order);
    FAIL("expected not_commuting");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_commuting);
  }
}

TEST_CASE("normalize_carrying transports passengers") {
  std::mt19937_64 rng(23);
  const PolyVectorField f = oracle::random_field(rng, 2, 3, 5, 4);
  std::vector<PolyVectorField> passengers{oracle::random_nonlinear(rng, 2, 1, 3, 5, 3)};
  const PolyVectorField original = passengers[0];
  const NormalFormResult r = normalize_carrying(f, 5, passengers);
  CHECK(passengers[0] == push_forward(r.transformation, original));
}
