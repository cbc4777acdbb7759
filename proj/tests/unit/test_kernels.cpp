#include <doctest.h>

#include <random>

#include "pdnf/kernels.hpp"
#include "support/oracle.hpp"

using namespace pdnf;

TEST_CASE("parallel multiply equals reference") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const PolyVectorField f = oracle::random_nonlinear(rng, 4, 0, 6, 10, 40);
    CHECK(kernels::multiply(f[0], f[1], 10) == kernels::reference::multiply(f[0], f[1], 10));
    CHECK(kernels::multiply(f[2], f[3], 7) == kernels::reference::multiply(f[2], f[3], 7));
  }
}

TEST_CASE("parallel resonance enumeration equals reference") {
  const std::vector<std::vector<Scalar>> specs[] = {
      {{1, -3, 9}},
      {{1, -3, 9}, {1, -2, 4}},
      {{1, 1, -2}},
      {{Scalar::i(), -Scalar::i(), Scalar(0)}},
      {{1, -1, Scalar(Rational(1, 2))}},
  };
  for (const auto& s : specs) {
    const std::size_t n = s[0].size();
    CHECK(kernels::resonant_pairs(s, n, 2, 8) == kernels::reference::resonant_pairs(s, n, 2, 8));
    CHECK(kernels::invariant_monomials(s, n, 1, 8) == kernels::reference::invariant_monomials(s, n, 1, 8));
  }
}

TEST_CASE("parallel omega minima equal reference") {
  const std::vector<Scalar> specs[] = {
      {0, 1},
      {1, -1},
      {1, -3, 9},
      {Scalar(Rational(1, 3)), Scalar(Rational(2, 5)), 1},
      {Scalar::i(), -Scalar::i(), Scalar(2) * Scalar::i()},
  };
  for (const auto& s : specs) CHECK(kernels::omega_degree_minima(s, 9) == kernels::reference::omega_degree_minima(s, 9));
}

TEST_CASE("parallel rref equals reference") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-3, 3), col(0, 29), len(0, 6);
  for (int t = 0; t < 20; ++t) {
    SparseMatrix m;
    m.cols = 30;
    for (int r = 0; r < 25; ++r) {
      SparseRow row;
      const int k = len(rng);
      for (int i = 0; i < k; ++i) row.emplace_back(static_cast<std::size_t>(col(rng)), Scalar(val(rng)));
      m.add_row(row);
    }
    const RowEchelon a = kernels::rref(m), b = kernels::reference::rref(m);
    CHECK(a.rows == b.rows);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("nullspace basis vectors are annihilated") {
  SparseMatrix m;
  m.cols = 4;
  m.add_row({{0, Scalar(1)}, {1, Scalar(2)}});
  m.add_row({{1, Scalar(1)}, {3, Scalar(-1)}});
  const RowEchelon e = kernels::rref(m);
  const auto basis = nullspace_basis(e);
  CHECK(basis.size() == 2);
  for (const auto& v : basis)
    for (const auto& row : m.rows) {
      Scalar s;
      for (const auto& [c, x] : row) s += x * v[c];
      CHECK(s.is_zero());
    }
  CHECK(rank_of({{1, 2}, {2, 4}, {0, 1}}) == 2);
}

TEST_CASE("sparse rows reject out-of-range columns") {
  SparseMatrix m;
  m.cols = 2;
  CHECK_THROWS(m.add_row({{5, Scalar(1)}}));
}
