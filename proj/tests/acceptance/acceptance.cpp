// Acceptance criteria 1-8.  Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../support/oracle.hpp"
#include "pdnf/bifurcation.hpp"
#include "pdnf/centralizer.hpp"
#include "pdnf/diagnostics.hpp"
#include "pdnf/io.hpp"
#include "pdnf/normalizer.hpp"
#include "pdnf/resonance.hpp"
#include "pdnf/transform.hpp"

using namespace pdnf;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && passed) {
      passed = false;
      detail = what;
    }
  }
};

PolyScalar var(std::size_t n, int order, std::size_t i) { return PolyScalar::variable(n, order, i); }

// Criterion 1: forced factorial coefficients in Horn's example.
Outcome horn_factorials() {
  Outcome out;
  constexpr int kOrder = 12;
  PolyVectorField f(2, kOrder);
  f.add_term(0, Monomial{2, 0}, 1);
  f.add_term(1, Monomial{0, 1}, 1);
  f.add_term(1, Monomial{1, 0}, -1);
  const Matrix c{{1, 0}, {-1, 1}};
  const PolyVectorField g = linear_conjugate(c, f);
  const NormalFormResult r = normalize(g, kOrder);
  const NearIdentityMap back = invert_to_order(compose(r.transformation, NearIdentityMap::linear_map(c, kOrder)));
  const oracle::Poly second = oracle::from_poly(back.components()[1]);
  mpz_class fact = 1;
  std::string got;
  for (int k = 1; k <= kOrder; ++k) {
    if (k > 1) fact *= k - 1;
    const auto it = second.find({k, 0});
    const oracle::Gq coeff = it == second.end() ? oracle::Gq() : it->second;
    got += (k > 1 ? "," : "") + coeff.re.get_str();
    out.require(coeff == oracle::Gq(mpq_class(fact), 0), "c_" + std::to_string(k) + " = " + coeff.re.get_str() +
                                                             ", expected " + fact.get_str());
  }
  if (out.passed) out.detail = "c_1..c_12 = " + got;
  return out;
}

// Criterion 2: normal-form characterization on 100 random fields.
Outcome random_normal_forms() {
  Outcome out;
  constexpr int kOrder = 6;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 4), nterms(1, 6);
  std::size_t kept = 0;
  for (int trial = 0; trial < 100 && out.passed; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const PolyVectorField f = oracle::random_field(rng, n, 4, kOrder, nterms(rng));
    const NormalFormResult r = normalize(f, kOrder);
    const std::string tag = "field #" + std::to_string(trial) + " (n=" + std::to_string(n) + ")";
    const PolyVectorField ax = PolyVectorField::linear(*f.spectrum(), kOrder);
    out.require(lie_bracket(ax, r.normal_form).is_zero(), tag + ": [Ax, fhat] != 0");
    const oracle::Field fh = oracle::from_field(r.normal_form);
    out.require(oracle::is_zero(oracle::bracket(oracle::from_field(ax), fh, kOrder)),
                tag + ": oracle [Ax, fhat] != 0");
    out.require(push_forward(r.transformation, f) == r.normal_form, tag + ": push_forward(Psi, f) != fhat");
    // Conjugacy D Psi . f == fhat o Psi, checked with the oracle.
    const oracle::Field psi = oracle::from_field(r.transformation.components());
    const oracle::Field fo = oracle::from_field(f);
    for (std::size_t j = 0; j < n; ++j)
      out.require(oracle::derivation(fo, psi[j], kOrder) == oracle::substitute(fh[j], psi, kOrder),
                  tag + ": oracle conjugacy fails in component " + std::to_string(j + 1));
    for (const auto& p : fh) kept += p.size();
  }
  if (out.passed) out.detail = "100 fields, n<=4, order 6; " + std::to_string(kept) + " normal-form terms checked";
  return out;
}

// Criterion 3: joint kernels of diag(1,-3,9) and diag(1,-2,4).
Outcome joint_kernel_example() {
  Outcome out;
  const Spectrum a{1, -3, 9}, b{1, -2, 4};
  out.require(kernel_intersection(a, b, 10).empty(), "kernel intersection is nonempty");
  // Oracle: exhaustive enumeration with machine integers.
  const int la[3] = {1, -3, 9}, lb[3] = {1, -2, 4};
  std::size_t joint = 0, only_a = 0, only_b = 0;
  for (int d = 2; d <= 10; ++d)
    for (int m0 = 0; m0 <= d; ++m0)
      for (int m1 = 0; m0 + m1 <= d; ++m1) {
        const int m2 = d - m0 - m1;
        for (int j = 0; j < 3; ++j) {
          const bool ra = m0 * la[0] + m1 * la[1] + m2 * la[2] == la[j];
          const bool rb = m0 * lb[0] + m1 * lb[1] + m2 * lb[2] == lb[j];
          joint += ra && rb;
          only_a += ra && d <= 5;
          only_b += rb && d <= 5;
        }
      }
  out.require(joint == 0, "oracle finds joint resonances");
  out.require(only_a > 0 && resonant_monomials(a, 5).size() == only_a, "Ker(ad A) at degree <= 5 mismatch");
  out.require(only_b > 0 && resonant_monomials(b, 5).size() == only_b, "Ker(ad B) at degree <= 5 mismatch");

  constexpr int kOrder = 8;
  PolyVectorField f = PolyVectorField::linear(a, kOrder);
  f.add_term(0, Monomial{3, 1, 0}, 1);
  f.add_term(0, Monomial{1, 2, 1}, 1);
  f.add_term(1, Monomial{2, 2, 0}, 1);
  f.add_term(1, Monomial{0, 3, 1}, 1);
  f.add_term(2, Monomial{0, 2, 2}, 2);
  const NormalFormResult r = normalize(f, kOrder);
  const oracle::Field fh = oracle::from_field(r.normal_form.from_degree(2));
  out.require(oracle::is_zero(fh), "normal form is not linear to order 8");
  if (out.passed)
    out.detail = "intersection empty to degree 10; |Ker A|=" + std::to_string(only_a) +
                 ", |Ker B|=" + std::to_string(only_b) + " at degree <= 5; normal form linear to order 8";
  return out;
}

// f = diag(1,1,-2) x + phi (I + L) x and g = rho x3 (I + L) x.
std::pair<PolyVectorField, PolyVectorField> so2_pair(int order) {
  const std::size_t n = 3;
  const PolyScalar x1 = var(n, order, 0), x2 = var(n, order, 1), x3 = var(n, order, 2);
  const PolyScalar rho = x1 * x1 + x2 * x2;
  const std::vector<PolyScalar> rot{x1 + x2, x2 - x1, x3};
  PolyVectorField f = PolyVectorField::linear(Spectrum{1, 1, -2}, order), g(n, order);
  for (std::size_t j = 0; j < n; ++j) {
    f.component(j) += (rho * x3 + x3 * x3 * x3) * rot[j];
    g.component(j) += rho * x3 * rot[j];
  }
  return {f, g};
}

// Criterion 4: the SO(2) example.
Outcome so2_example() {
  Outcome out;
  {
    const auto [f, g] = so2_pair(7);
    out.require(!first_noncommuting_degree(f, g).has_value(), "[f, g] != 0 to order 7");
    out.require(oracle::is_zero(oracle::bracket(oracle::from_field(f), oracle::from_field(g), 7)),
                "oracle [f, g] != 0 to order 7");
  }
  const auto [f, g] = so2_pair(8);
  const NormalFormResult r = normalize(f, 8);
  // Oracle for the quartic part: the input monomials x^m e_j with
  // <m, L> = L_j, evaluated with integers.
  const int lambda[3] = {1, 1, -2};
  oracle::Field expected(3);
  const oracle::Field fo = oracle::from_field(f);
  for (std::size_t j = 0; j < 3; ++j)
    for (const auto& [e, c] : fo[j])
      if (oracle::degree(e) == 4 && e[0] * lambda[0] + e[1] * lambda[1] + e[2] * lambda[2] == lambda[j])
        expected[j].emplace(e, c);
  out.require(oracle::equal(oracle::from_field(r.normal_form.homogeneous_part(4)), expected),
              "normal-form quartic part differs from the resonant input terms");
  out.require(oracle::equal(expected, oracle::from_field(g.homogeneous_part(4))),
              "resonant quartic terms are not rho x3 (I+L) x");
  const CentralizerBasis restricted = centralizer_basis(r.normal_form, 5);
  const CentralizerBasis full = centralizer_basis(r.normal_form, 5, CentralizerMode::unrestricted);
  out.require(restricted.dimension() == full.dimension(),
              "dimension " + std::to_string(restricted.dimension()) + " vs unrestricted oracle " +
                  std::to_string(full.dimension()));
  out.require(same_span(restricted.elements, full.elements, 5), "spans differ from the unrestricted oracle");
  out.require(spanned_by_fhat_and_linear(restricted, r.normal_form), "centralizer not spanned by fhat and linear fields");
  if (out.passed)
    out.detail = "[f,g]=0 to order 7; quartic part = rho x3 (I+L) x; centralizer dim " +
                 std::to_string(restricted.dimension()) + " = unrestricted oracle";
  return out;
}

// Criterion 5: centralizer of Ax for spectrum (1,-1).
Outcome linear_centralizer_structure() {
  Outcome out;
  const PolyVectorField f = PolyVectorField::linear(Spectrum{1, -1}, 7);
  const CentralizerBasis basis = centralizer_basis(f, 7);
  std::set<std::pair<oracle::Exps, std::size_t>> got, want;
  for (const auto& g : basis.elements) {
    const oracle::Field go = oracle::from_field(g);
    for (std::size_t j = 0; j < 2; ++j)
      for (const auto& [e, c] : go[j]) {
        got.insert({e, j});
        const int l = std::min(e[0], e[1]);
        out.require(e[1 - j] == l && e[j] == l + 1, "term not of the form rho^l x_j e_j");
      }
  }
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; a + b <= 7; ++b)
      for (std::size_t j = 0; j < 2; ++j)
        if (a + b >= 1 && a - b == (j == 0 ? 1 : -1)) want.insert({{a, b}, j});
  out.require(got == want, "term set differs from exhaustive enumeration");
  out.require(basis.dimension() == want.size(), "dimension differs from enumeration");
  if (out.passed) out.detail = "dimension " + std::to_string(basis.dimension()) + ", terms rho^l x_j e_j, set equality";
  return out;
}

// Oracle for omega_k^2 by direct enumeration over 2 <= |Q| <= 2^k - 1.
std::vector<long> omega_oracle(const std::vector<int>& lambda, int max_k) {
  const std::size_t n = lambda.size();
  std::vector<long> out;
  for (int k = 1; k <= max_k; ++k) {
    const int top = (1 << k) - 1;
    long best = -1;
    std::vector<int> q(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == n - 1) {
        q[i] = left;
        int s = 0;
        long dot = 0;
        for (std::size_t t = 0; t < n; ++t) s += q[t], dot += long(q[t]) * lambda[t];
        if (s < 2) return;
        for (int lj : lambda) {
          const long v = (dot - lj) * (dot - lj);
          if (v != 0 && (best < 0 || v < best)) best = v;
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        q[i] = v;
        rec(i + 1, left - v);
      }
    };
    for (int s = 2; s <= top; ++s) rec(0, s);
    out.push_back(best);
  }
  return out;
}

// Criterion 6: Condition omega for integer spectra.
Outcome omega_rational_shortcut() {
  Outcome out;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> ev(-5, 5), dim(1, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Scalar> l;
    const int n = dim(rng);
    for (int i = 0; i < n; ++i) l.emplace_back(ev(rng));
    const OmegaReport r = omega_condition(Spectrum(l), 4);
    out.require(r.verdict == OmegaVerdict::holds_by_rational_bound, "integer spectrum without rational-bound verdict");
    for (const auto& rec : r.records)
      out.require(!rec.omega_squared || *rec.omega_squared >= 1, "omega_k < 1 for an integer spectrum");
  }
  for (const std::vector<int>& lambda : {std::vector<int>{0, 1}, std::vector<int>{1, -1}}) {
    const OmegaReport r = omega_condition(Spectrum{lambda[0], lambda[1]}, 3);
    const auto want = omega_oracle(lambda, 3);
    for (int k = 1; k <= 3; ++k) {
      const auto& got = r.records[k - 1].omega_squared;
      const bool same = want[k - 1] < 0 ? !got : (got && *got == want[k - 1]);
      out.require(same, "omega_" + std::to_string(k) + " differs from the oracle");
      if (k >= 2) out.require(got && *got == 1, "omega_" + std::to_string(k) + " != 1");
    }
  }
  if (out.passed) out.detail = "20 integer spectra certified; (0,1) and (1,-1): omega_1 empty, omega_2 = omega_3 = 1";
  return out;
}

// Criterion 7: det D against the transversality derivative.
Outcome hopf_transversality() {
  Outcome out;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> small(-4, 4), nz(1, 4), sign(0, 1);
  for (int t = 0; t < 20 && out.passed; ++t) {
    // Real A(eta) = A0 + eta A1, A0 = [[a, b], [c, -a]] with eigenvalues +-i.
    const Rational a(small(rng), nz(rng));
    const Rational b(sign(rng) ? nz(rng) : -nz(rng), nz(rng));
    Rational c = -(1 + a * a) / b;
    c.canonicalize();
    Rational a1[2][2];
    for (auto& row : a1)
      for (auto& x : row) {
        x = Rational(small(rng), nz(rng));
        x.canonicalize();
      }
    // Complexify with the eigenvector matrix of A0.
    const Matrix p{{Scalar(b), Scalar(b)}, {Scalar(-a, 1), Scalar(-a, -1)}};
    const Matrix pinv = *inverse(p);
    const Matrix m0 = pinv * Matrix{{Scalar(a), Scalar(b)}, {Scalar(c), Scalar(-a)}} * p;
    const Matrix m1 = pinv * Matrix{{Scalar(a1[0][0]), Scalar(a1[0][1])}, {Scalar(a1[1][0]), Scalar(a1[1][1])}} * p;
    ParamFamily fam(2, 1, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        fam.a_entries[i][j].add_term(Monomial{0}, m0(i, j));
        fam.a_entries[i][j].add_term(Monomial{1}, m1(i, j));
      }
    fam.f_terms[0].add_term(Monomial{2, 1, 0}, Scalar(small(rng)));
    fam.f_terms[1].add_term(Monomial{1, 1, 1}, Scalar(small(rng)));
    // Through the file format, as a user would supply it.
    const ParamFamily parsed = parse_family_file(serialize_family_file(fam));
    const Scalar det = det_nonsingular(build_D(parsed)).det;
    // Oracle: lambda' = (tr' lambda - det') / (2 lambda - tr) at eta = 0,
    // lambda = i, tr = 0.
    using oracle::Gq;
    const Gq tr1 = Gq(a1[0][0], 0) + Gq(a1[1][1], 0);
    const Gq det1 = Gq(a * a1[1][1], 0) + Gq(a1[0][0] * -a, 0) - Gq(b * a1[1][0], 0) - Gq(a1[0][1] * c, 0);
    const Gq lambda(0, 1);
    const Gq dlambda = (tr1 * lambda - det1) / (Gq(2) * lambda);
    const Gq expected = Gq(0, 2) * Gq(dlambda.re, 0);
    out.require(oracle::from_scalar(det) == expected, "family #" + std::to_string(t) + ": det D = " + to_string(det) +
                                                          ", expected " + to_string(oracle::to_scalar(expected)));
  }
  if (out.passed) out.detail = "20 random families: det D = 2i Re lambda'(0)";
  return out;
}

// Criterion 8: algebraic property suite.
Outcome property_suite() {
  Outcome out;
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> dim(1, 3), small(-3, 3);
  std::size_t checks = 0;
  // Bracket: Jacobi, antisymmetry, bilinearity.
  for (int t = 0; t < 40 && out.passed; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const int order = 5;
    const PolyVectorField f = oracle::random_field(rng, n, 4, order, 4);
    const PolyVectorField g = oracle::random_field(rng, n, 4, order, 4);
    const PolyVectorField h = oracle::random_nonlinear(rng, n, 1, 3, order, 4);
    const PolyVectorField jac =
        lie_bracket(f, lie_bracket(g, h)) + lie_bracket(g, lie_bracket(h, f)) + lie_bracket(h, lie_bracket(f, g));
    out.require(jac.is_zero(), "Jacobi identity fails");
    out.require(lie_bracket(f, g) == Scalar(-1) * lie_bracket(g, f), "antisymmetry fails");
    const Scalar s(small(rng)), u(Rational(1, 2), Rational(small(rng)));
    out.require(lie_bracket(s * f + u * g, h) == s * lie_bracket(f, h) + u * lie_bracket(g, h), "bilinearity fails");
    out.require(oracle::equal(oracle::from_field(lie_bracket(f, g)),
                              oracle::bracket(oracle::from_field(f), oracle::from_field(g), order)),
                "bracket differs from the oracle");
    checks += 4;
  }
  // Inverse-to-order round trips.
  for (int t = 0; t < 30 && out.passed; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const int order = 6;
    Matrix l = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) l(i, j) = Scalar(small(rng));
    const NearIdentityMap map(l, oracle::random_nonlinear(rng, n, 2, 4, order, 5));
    const NearIdentityMap inv = invert_to_order(map);
    const NearIdentityMap id = NearIdentityMap::identity(n, order);
    out.require(compose(inv, map) == id, "inverse o map != identity");
    out.require(compose(map, inv) == id, "map o inverse != identity");
    checks += 2;
  }
  // Symmetries of a normal form commute with its linear part; pliss implies
  // Condition A.
  std::size_t pliss_cases = 0;
  for (int t = 0; t < 40 && out.passed; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const int order = 5;
    const PolyVectorField f = oracle::random_field(rng, n, 3, order, 3, 2);
    const NormalFormResult r = normalize(f, order);
    const PolyVectorField ax = PolyVectorField::linear(r.spectrum, order);
    for (CentralizerMode mode : {CentralizerMode::restricted, CentralizerMode::unrestricted}) {
      if (mode == CentralizerMode::unrestricted && n == 3) continue;
      const CentralizerBasis basis = centralizer_basis(r.normal_form, 3, mode);
      for (const auto& g : basis.elements) {
        out.require(lie_bracket(ax.truncated(3), g).is_zero(), "centralizer element does not commute with Ax");
        out.require(commutator(ax.linear_part(), g.linear_part()).is_zero(),
                    "linear part of a centralizer element does not commute with A");
        checks += 2;
      }
    }
    const bool pliss = pliss_linear(r.normal_form);
    pliss_cases += pliss;
    if (pliss) out.require(condition_A(r.normal_form).satisfied, "pliss holds but Condition A fails");
    ++checks;
  }
  out.require(pliss_cases > 0, "no pliss case was generated");
  if (out.passed)
    out.detail = std::to_string(checks) + " property checks, " + std::to_string(pliss_cases) + " pliss cases";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Horn factorial coefficients", 1.0, horn_factorials},
      {2, "normal-form characterization", 30.0, random_normal_forms},
      {3, "joint-kernel linearization example", 10.0, joint_kernel_example},
      {4, "SO(2) nonlinear symmetry", 30.0, so2_example},
      {5, "linear centralizer structure", 10.0, linear_centralizer_structure},
      {6, "Condition omega rational bound", 5.0, omega_rational_shortcut},
      {7, "bifurcation transversality", 5.0, hopf_transversality},
      {8, "property suite", 60.0, property_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.passed && secs >= c.limit_seconds) {
      o.passed = false;
      o.detail += "; exceeded time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.3f s, limit %.0f s]", secs, c.limit_seconds);
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
              << timing << std::endl;
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
