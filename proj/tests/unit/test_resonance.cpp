#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pdnf/error.hpp"
#include "pdnf/resonance.hpp"

using namespace pdnf;

namespace {

bool contains(const std::vector<ResonanceRelation>& rels, const Monomial& m, std::size_t comp) {
  return std::find(rels.begin(), rels.end(), ResonanceRelation{m, comp}) != rels.end();
}

}  // namespace

TEST_CASE("resonances of (1,-3,9)") {
  const auto rels = resonant_monomials(Spectrum{1, -3, 9}, 5);
  CHECK(contains(rels, Monomial{4, 1, 0}, 0));
  for (const auto& r : rels) {
    CHECK(r.m.degree() >= 2);
    CHECK(r.m.degree() <= 5);
    CHECK(r.m.dot(std::vector<Scalar>{1, -3, 9}) == std::vector<Scalar>{1, -3, 9}[r.comp]);
  }
  CHECK(std::is_sorted(rels.begin(), rels.end(), [](const auto& a, const auto& b) {
    return a.m < b.m || (a.m == b.m && a.comp < b.comp);
  }));
}

TEST_CASE("resonance errors and empty cases") {
  CHECK_THROWS_AS(resonant_monomials(Spectrum{1, 2}, 1), Error);
  try {
    resonant_monomials(Spectrum{1}, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::order_too_small);
  }
  CHECK(resonant_monomials(Spectrum{2, 3}, 6).empty());
}

TEST_CASE("poincare domain") {
  CHECK(poincare_domain(Spectrum{1, Scalar::i()}));
  CHECK_FALSE(poincare_domain(Spectrum{1, -3}));
  CHECK(poincare_domain(Spectrum{2, 2, 2}));
  CHECK_FALSE(poincare_domain(Spectrum{0, 1}));
  CHECK_FALSE(poincare_domain(Spectrum{Scalar::i(), -Scalar::i()}));
  CHECK(poincare_domain(Spectrum{Scalar(1, 1), Scalar(1, -1), Scalar(2)}));
  CHECK_FALSE(poincare_domain(Spectrum{Scalar(1, 1), Scalar(-1, 0), Scalar(1, -1)}));
}

TEST_CASE("omega condition for spectrum (0,1)") {
  const OmegaReport r = omega_condition(Spectrum{0, 1}, 3);
  REQUIRE(r.records.size() == 3);
  CHECK_FALSE(r.records[0].omega_squared.has_value());
  CHECK(*r.records[1].omega_squared == 1);
  CHECK(*r.records[2].omega_squared == 1);
  CHECK(r.verdict == OmegaVerdict::holds_by_rational_bound);
  CHECK(r.denominator == 1);
  CHECK(r.records[2].partial_sum == doctest::Approx(0.0));
}

TEST_CASE("omega condition with rational spectrum certifies 1/q") {
  const OmegaReport r = omega_condition(Spectrum{Scalar(Rational(1, 3)), Scalar(Rational(1, 2))}, 4);
  CHECK(r.denominator == 6);
  for (const auto& rec : r.records)
    if (rec.omega_squared) CHECK(*rec.omega_squared >= Rational(1, 36));
}

TEST_CASE("omega budget") {
  CHECK(omega_enumeration_size(2, 3) == 33);  // |Q| = 2..7 in 2 variables: 3+4+...+8
  CHECK(omega_enumeration_size(3, 40) == UINT64_MAX);
  CHECK_THROWS_AS(omega_condition(Spectrum{1, 2, 3, 4}, 12, 1000), Error);
}

TEST_CASE("log of huge rationals") {
  const Rational big(mpz_class("1" + std::string(400, '0')));
  CHECK(log_rational(big) == doctest::Approx(400 * std::log(10.0)).epsilon(1e-9));
  CHECK(log_rational(Rational(1, 8)) == doctest::Approx(-std::log(8.0)));
}
