#include <doctest.h>

#include <random>

#include "pdnf/error.hpp"
#include "pdnf/field.hpp"
#include "pdnf/matrix.hpp"
#include "pdnf/transform.hpp"
#include "support/oracle.hpp"

using namespace pdnf;

TEST_CASE("scalar parsing and canonical text") {
  CHECK(to_string(parse_scalar("3")) == "3");
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(parse_scalar("i")) == "i");
  CHECK(to_string(parse_scalar("-i")) == "-i");
  CHECK(to_string(parse_scalar("2*i")) == "2*i");
  CHECK(to_string(parse_scalar("1/2-3*i")) == "1/2-3*i");
  CHECK(to_string(parse_scalar("+1/2+3/4*i")) == "1/2+3/4*i");
  CHECK(parse_scalar("0/5").is_zero());
  for (const char* bad : {"", "1/0", "abc", "1//2", "2*j", "1+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_scalar(bad), Error);
  }
}

TEST_CASE("scalar text round trip") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
  for (int t = 0; t < 200; ++t) {
    const Scalar s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    CHECK(parse_scalar(to_string(s)) == s);
  }
}

TEST_CASE("scalar field arithmetic") {
  const Scalar a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 3));
  CHECK((a * b) / b == a);
  CHECK(a - a == Scalar(0));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(a.conj().conj() == a);
  CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("monomial graded order puts x1^d first") {
  const auto deg2 = monomials_of_degree(3, 2);
  REQUIRE(deg2.size() == 6);
  CHECK(deg2.front() == Monomial{2, 0, 0});
  CHECK(deg2.back() == Monomial{0, 0, 2});
  CHECK(Monomial{1, 0, 0} < Monomial{0, 0, 2});
  CHECK(count_monomials(3, 2) == 6);
  CHECK(Monomial{1, 2}.dot(std::vector<Scalar>{1, -3}) == Scalar(-5));
}

TEST_CASE("polynomial product and derivative agree with the oracle") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const PolyVectorField f = oracle::random_nonlinear(rng, 3, 0, 4, 6, 6);
    const PolyScalar a = f[0], b = f[1];
    const auto prod = oracle::mul(oracle::from_poly(a), oracle::from_poly(b), 6);
    CHECK(oracle::from_poly(a * b) == prod);
    CHECK(oracle::from_poly(a.derivative(1)) == oracle::deriv(oracle::from_poly(a), 1));
  }
}

TEST_CASE("truncation keeps the smaller order") {
  PolyScalar a(2, 5), b(2, 3);
  a.add_term(Monomial{2, 0}, 1);
  b.add_term(Monomial{1, 1}, 1);
  const PolyScalar c = a * b;
  CHECK(c.order() == 3);
  CHECK(c.is_zero());
  CHECK_THROWS_AS(a + PolyScalar(3, 5), Error);
}

TEST_CASE("lie bracket matches the oracle") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const PolyVectorField f = oracle::random_field(rng, 3, 3, 5, 4);
    const PolyVectorField g = oracle::random_nonlinear(rng, 3, 1, 3, 5, 4);
    CHECK(oracle::equal(oracle::from_field(lie_bracket(f, g)),
                        oracle::bracket(oracle::from_field(f), oracle::from_field(g), 5)));
  }
}

TEST_CASE("linear bracket eigenvalue: [Ax, x^m e_j] = (<m,L> - L_j) x^m e_j") {
  const Spectrum l{2, -1, 3};
  const PolyVectorField ax = PolyVectorField::linear(l, 4);
  PolyVectorField h(3, 4);
  h.add_term(1, Monomial{1, 2, 0}, 1);
  const PolyVectorField br = lie_bracket(ax, h);
  CHECK(br.coeff(1, Monomial{1, 2, 0}) == Scalar(2 - 2 + 1));
}

TEST_CASE("first_noncommuting_degree") {
  PolyVectorField f = PolyVectorField::linear(Spectrum{1, 2}, 4);
  PolyVectorField g(2, 4);
  g.add_term(1, Monomial{2, 0}, 1);  // resonant: 2*1 = 2
  CHECK_FALSE(first_noncommuting_degree(f, g).has_value());
  g.add_term(0, Monomial{0, 3}, 1);  // non-resonant
  CHECK(first_noncommuting_degree(f, g) == 3);
}

TEST_CASE("composition and inversion of near-identity maps") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const NearIdentityMap m(Matrix::identity(2), oracle::random_nonlinear(rng, 2, 2, 4, 6, 4));
    const NearIdentityMap inv = invert_to_order(m);
    CHECK(compose(m, inv) == NearIdentityMap::identity(2, 6));
    CHECK(compose(inv, m) == NearIdentityMap::identity(2, 6));
  }
  CHECK_THROWS_AS(invert_to_order(NearIdentityMap::linear_map(Matrix{{1, 2}, {2, 4}}, 3)), Error);
}

TEST_CASE("push_forward along a linear map is conjugation") {
  PolyVectorField f(2, 3);
  f.add_term(0, Monomial{1, 0}, 1);
  f.add_term(1, Monomial{0, 1}, 2);
  f.add_term(0, Monomial{0, 2}, 1);
  const Matrix m{{1, 1}, {0, 1}};
  const PolyVectorField g = linear_conjugate(m, f);
  // Back again.
  CHECK(linear_conjugate(*inverse(m), g) == f);
  CHECK(g.linear_part() == m * f.linear_part() * *inverse(m));
}

TEST_CASE("matrix determinant, inverse and rank") {
  const Matrix a{{2, 1}, {Scalar::i(), 3}};
  CHECK(determinant(a) == Scalar(6) - Scalar::i());
  CHECK(a * *inverse(a) == Matrix::identity(2));
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("divergence and derivation") {
  PolyVectorField f(2, 3);
  f.add_term(0, Monomial{2, 0}, 1);
  f.add_term(1, Monomial{1, 1}, 3);
  const PolyScalar div = divergence(f);
  CHECK(div.coeff(Monomial{1, 0}) == Scalar(5));
  const PolyScalar x = PolyScalar::variable(2, 3, 0);
  CHECK(apply_derivation(f, x) == f[0]);
}
