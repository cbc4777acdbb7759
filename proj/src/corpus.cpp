#include "pdnf/corpus.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "pdnf/bifurcation.hpp"
#include "pdnf/centralizer.hpp"
#include "pdnf/diagnostics.hpp"
#include "pdnf/error.hpp"
#include "pdnf/io.hpp"
#include "pdnf/normalizer.hpp"
#include "pdnf/resonance.hpp"
#include "pdnf/transform.hpp"

namespace pdnf {

namespace {

constexpr const char* kHornField = R"(# Horn's example; analysed in y = M x with y2 = x2 - x1.
format pdnf 1
dim 2
vars x1 x2
term comp=1 coeff=1 exps=2,0
term comp=2 coeff=-1 exps=1,0
term comp=2 coeff=1 exps=0,1
linear_matrix
1 0
-1 1
end
)";

constexpr const char* kLinearizableField = R"(# A = diag(1,-3,9) system commuting with Bx = diag(1,-2,4)x.
format pdnf 1
dim 3
vars x1 x2 x3
eigenvalues 1 -3 9
term comp=1 coeff=1 exps=3,1,0
term comp=1 coeff=1 exps=1,2,1
term comp=2 coeff=1 exps=2,2,0
term comp=2 coeff=1 exps=0,3,1
term comp=3 coeff=2 exps=0,2,2
)";

constexpr const char* kLinearizableSymmetry = R"(format pdnf 1
dim 3
vars x1 x2 x3
eigenvalues 1 -2 4
)";

// f = diag(1,1,-2) x + (rho x3 + x3^3)(I + L) x, rho = x1^2 + x2^2,
// L the rotation generator in the (x1, x2) plane.
constexpr const char* kSo2Field = R"(format pdnf 1
dim 3
vars x1 x2 x3
eigenvalues 1 1 -2
term comp=1 coeff=1 exps=3,0,1
term comp=1 coeff=1 exps=2,1,1
term comp=1 coeff=1 exps=1,2,1
term comp=1 coeff=1 exps=0,3,1
term comp=1 coeff=1 exps=1,0,3
term comp=1 coeff=1 exps=0,1,3
term comp=2 coeff=-1 exps=3,0,1
term comp=2 coeff=1 exps=2,1,1
term comp=2 coeff=-1 exps=1,2,1
term comp=2 coeff=1 exps=0,3,1
term comp=2 coeff=-1 exps=1,0,3
term comp=2 coeff=1 exps=0,1,3
term comp=3 coeff=1 exps=2,0,2
term comp=3 coeff=1 exps=0,2,2
term comp=3 coeff=1 exps=0,0,4
)";

// g = rho x3 (I + L) x: the nonlinear symmetry, and also the quartic part
// the normal form must keep.
constexpr const char* kSo2Symmetry = R"(format pdnf 1
dim 3
vars x1 x2 x3
term comp=1 coeff=1 exps=3,0,1
term comp=1 coeff=1 exps=2,1,1
term comp=1 coeff=1 exps=1,2,1
term comp=1 coeff=1 exps=0,3,1
term comp=2 coeff=-1 exps=3,0,1
term comp=2 coeff=1 exps=2,1,1
term comp=2 coeff=-1 exps=1,2,1
term comp=2 coeff=1 exps=0,3,1
term comp=3 coeff=1 exps=2,0,2
term comp=3 coeff=1 exps=0,2,2
)";

// u + i v = z^2.
constexpr const char* kHolomorphicField = R"(format pdnf 1
dim 2
vars x y
term comp=1 coeff=1 exps=2,0
term comp=1 coeff=-1 exps=0,2
term comp=2 coeff=2 exps=1,1
)";

// (v, -u).
constexpr const char* kHolomorphicSymmetry = R"(format pdnf 1
dim 2
vars x y
term comp=1 coeff=2 exps=1,1
term comp=2 coeff=-1 exps=2,0
term comp=2 coeff=1 exps=0,2
)";

constexpr const char* kHopfFamily = R"(# Complexified Hopf family: A(eta) = diag(i + eta, -i + eta).
format pdnf 1
dim 2
vars z w
params eta
order 3
a_entry row=1 col=1 coeff=i exps=0
a_entry row=1 col=1 coeff=1 exps=1
a_entry row=2 col=2 coeff=-i exps=0
a_entry row=2 col=2 coeff=1 exps=1
f_term comp=1 coeff=-1 xexps=2,1 pexps=0
f_term comp=2 coeff=-1 xexps=1,2 pexps=0
)";

constexpr const char* kOscillatorFamily = R"(# 1:2 resonant oscillators, omega0 = 1.
format pdnf 1
dim 4
vars z1 w1 z2 w2
params eta1 eta2 eta3
order 3
a_entry row=1 col=1 coeff=i exps=0,0,0
a_entry row=1 col=1 coeff=1 exps=1,0,0
a_entry row=1 col=1 coeff=i exps=0,1,0
a_entry row=2 col=2 coeff=-i exps=0,0,0
a_entry row=2 col=2 coeff=1 exps=1,0,0
a_entry row=2 col=2 coeff=-i exps=0,1,0
a_entry row=3 col=3 coeff=2*i exps=0,0,0
a_entry row=3 col=3 coeff=1 exps=0,1,0
a_entry row=3 col=3 coeff=i exps=0,0,1
a_entry row=4 col=4 coeff=-2*i exps=0,0,0
a_entry row=4 col=4 coeff=1 exps=0,1,0
a_entry row=4 col=4 coeff=-i exps=0,0,1
f_term comp=1 coeff=1 xexps=1,0,1,0 pexps=0,0,0
f_term comp=3 coeff=1 xexps=2,0,0,0 pexps=0,0,0
)";

constexpr const char* kCentralizerField = R"(format pdnf 1
dim 2
vars x1 x2
order 7
eigenvalues 1 -1
)";

void check(CorpusOutcome& out, std::string name, bool passed, std::string expected, std::string actual) {
  out.checks.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string field_str(const PolyVectorField& f) {
  std::string s = to_string(f, {});
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

void run_horn(const CorpusEntry& e, CorpusOutcome& out) {
  constexpr int kOrder = 12;
  const FieldFile file = parse_field_file(e.input);
  const PolyVectorField g = file.prepared(kOrder);
  const NormalFormResult r = normalize(g, kOrder);
  const NearIdentityMap total = compose(r.transformation, NearIdentityMap::linear_map(*file.linear_matrix, kOrder));
  const NearIdentityMap back = invert_to_order(total);
  const std::vector<Scalar> c = axis_coefficients(back.components()[1], 0);
  bool ok = c.size() == kOrder + 1 && c[0].is_zero();
  std::string expected, actual;
  mpz_class fact = 1;
  for (int k = 1; k <= kOrder; ++k) {
    if (k > 1) fact *= k - 1;
    const Scalar want{Rational(fact)};
    const Scalar got = k < static_cast<int>(c.size()) ? c[k] : Scalar(0);
    ok = ok && got == want;
    expected += (k > 1 ? "," : "") + to_string(want);
    actual += (k > 1 ? "," : "") + to_string(got);
    out.table.push_back("k=" + std::to_string(k) + "  c_k=" + to_string(got));
  }
  check(out, "second component on x2=0 has c_k=(k-1)!", ok, expected, actual);
  const GrowthResult growth = growth_classify(c);
  check(out, "growth heuristic reports factorial", growth.kind == GrowthKind::factorial, "factorial",
        std::string(to_string(growth.kind)));
}

void run_linearizable(const CorpusEntry& e, CorpusOutcome& out) {
  const FieldFile file = parse_field_file(e.input);
  const FieldFile sym = parse_field_file(e.companion);
  const Spectrum a = *file.field.spectrum();
  const Spectrum b = *sym.field.spectrum();
  const auto inter = kernel_intersection(a, b, 10);
  check(out, "Ker(ad A) ∩ Ker(ad B) empty to degree 10", inter.empty(), "0 monomial-vectors",
        std::to_string(inter.size()) + " monomial-vectors");
  const auto ra = resonant_monomials(a, 5), rb = resonant_monomials(b, 5);
  check(out, "Ker(ad A) nonempty at degree <= 5", !ra.empty(), "> 0", std::to_string(ra.size()));
  check(out, "Ker(ad B) nonempty at degree <= 5", !rb.empty(), "> 0", std::to_string(rb.size()));
  const auto bad = first_noncommuting_degree(file.prepared(10), sym.prepared(10));
  check(out, "f commutes with Bx to order 10", !bad, "none", bad ? "degree " + std::to_string(*bad) : "none");
  const NormalFormResult r = normalize(file.prepared(8), 8);
  check(out, "normal form linear to order 8", pliss_linear(r.normal_form), "Ax", field_str(r.normal_form));
}

void run_so2(const CorpusEntry& e, CorpusOutcome& out) {
  const FieldFile file = parse_field_file(e.input);
  const FieldFile sym = parse_field_file(e.companion);
  const PolyVectorField bracket = lie_bracket(file.prepared(7), sym.prepared(7));
  check(out, "[f, g] = 0 to order 7", bracket.is_zero(), "0", field_str(bracket));
  const NormalFormResult r = normalize(file.prepared(8), 8);
  const PolyVectorField quartic = r.normal_form.homogeneous_part(4);
  const PolyVectorField want = sym.prepared(8).homogeneous_part(4);
  check(out, "normal form degree-4 part is rho x3 (I+L) x", quartic == want, field_str(want), field_str(quartic));
  check(out, "normal form commutes with Ax", is_normal_form(r.normal_form), "yes", yes(is_normal_form(r.normal_form)));
  const CentralizerBasis restricted = centralizer_basis(r.normal_form, 5);
  const CentralizerBasis full = centralizer_basis(r.normal_form, 5, CentralizerMode::unrestricted);
  check(out, "centralizer dimension matches unrestricted oracle", restricted.dimension() == full.dimension(),
        std::to_string(full.dimension()), std::to_string(restricted.dimension()));
  check(out, "centralizer spans agree", same_span(restricted.elements, full.elements, 5), "yes",
        yes(same_span(restricted.elements, full.elements, 5)));
  const bool spanned = spanned_by_fhat_and_linear(restricted, r.normal_form);
  check(out, "centralizer to degree 5 spanned by fhat and linear fields", spanned, "yes", yes(spanned));
}

void run_holomorphic(const CorpusEntry& e, CorpusOutcome& out) {
  const FieldFile file = parse_field_file(e.input);
  const FieldFile sym = parse_field_file(e.companion);
  const PolyVectorField bracket = lie_bracket(file.prepared(6), sym.prepared(6));
  check(out, "[f, g] = 0 to order 6", bracket.is_zero(), "0", field_str(bracket));
}

void run_hopf(const CorpusEntry& e, CorpusOutcome& out) {
  const ParamFamily fam = parse_family_file(e.input);
  const DMatrix d = build_D(fam);
  const Nondegeneracy nd = det_nonsingular(d);
  const Scalar want = Scalar(2) * Scalar::i();
  check(out, "det D = 2*i", nd.det == want, to_string(want), to_string(nd.det));
  check(out, "D nonsingular", nd.nonsingular, "yes", yes(nd.nonsingular));
  const PolyVectorField s = suspend(fam);
  const auto spec = s.spectrum();
  const Spectrum want_spec{Scalar::i(), -Scalar::i(), Scalar(0)};
  check(out, "suspended linear part diag(i,-i,0)", spec && *spec == want_spec, to_string(want_spec),
        spec ? to_string(*spec) : "not diagonal");
  const bool mixed = s.coeff(0, Monomial{1, 0, 1}) == Scalar(1) && s.coeff(1, Monomial{0, 1, 1}) == Scalar(1);
  check(out, "suspended field has eta*z and eta*w terms", mixed, "1, 1",
        to_string(s.coeff(0, Monomial{1, 0, 1})) + ", " + to_string(s.coeff(1, Monomial{0, 1, 1})));
}

void run_oscillator(const CorpusEntry& e, CorpusOutcome& out) {
  const ParamFamily fam = parse_family_file(e.input);
  const Nondegeneracy nd = det_nonsingular(build_D(fam));
  const OscillatorMatrix osc = build_oscillator_D(fam, 2);
  const Scalar det_osc = determinant(osc.entries);
  out.table.push_back("oscillator matrix:");
  std::istringstream rows(matrix_text(osc.entries));
  for (std::string line; std::getline(rows, line);) out.table.push_back(line);
  check(out, "det D = 4", nd.det == Scalar(4), "4", to_string(nd.det));
  check(out, "det of oscillator matrix = 4*i", det_osc == Scalar(4) * Scalar::i(), "4*i", to_string(det_osc));
  const Scalar related = -Scalar::i() * Scalar(osc.omega0) * det_osc;
  check(out, "det D = -i*omega0*det(oscillator matrix)", related == nd.det, to_string(nd.det), to_string(related));
}

void run_centralizer(const CorpusEntry& e, CorpusOutcome& out) {
  const FieldFile file = parse_field_file(e.input);
  const PolyVectorField f = file.prepared(7);
  const CentralizerBasis basis = centralizer_basis(f, 7);
  std::set<std::pair<std::vector<int>, std::size_t>> got, want;
  bool shaped = true, commuting = true;
  for (const auto& g : basis.elements) {
    commuting = commuting && lie_bracket(f, g).is_zero();
    for (std::size_t j = 0; j < 2; ++j)
      g[j].for_each([&](const Monomial& m, const Scalar&) {
        got.insert({{m[0], m[1]}, j});
        const int l = std::min(m[0], m[1]);
        shaped = shaped && m[1 - j] == l && m[j] == l + 1;
      });
  }
  // Exhaustive enumeration of x^m e_j with |m| <= 7 and <m, (1,-1)> = lambda_j.
  const int lambda[2] = {1, -1};
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; a + b <= 7; ++b)
      for (std::size_t j = 0; j < 2; ++j)
        if (a + b >= 1 && a - b == lambda[j]) want.insert({{a, b}, j});
  auto render = [](const auto& s) {
    std::string out;
    for (const auto& [m, j] : s)
      out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(m[0]) + "," + std::to_string(m[1]) +
             ")e" + std::to_string(j + 1);
    return out;
  };
  check(out, "dimension 8", basis.dimension() == 8, "8", std::to_string(basis.dimension()));
  check(out, "every term is rho^l x_j e_j", shaped, "yes", yes(shaped));
  check(out, "term set equals exhaustive enumeration", got == want, render(want), render(got));
  check(out, "every element commutes with Ax", commuting, "yes", yes(commuting));
}

struct Runner {
  const char* id;
  void (*run)(const CorpusEntry&, CorpusOutcome&);
};

constexpr Runner kRunners[] = {
    {"horn", run_horn},
    {"linearizable", run_linearizable},
    {"so2", run_so2},
    {"holomorphic", run_holomorphic},
    {"hopf", run_hopf},
    {"oscillator-1to2", run_oscillator},
    {"centralizer-linear", run_centralizer},
};

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"horn", "Horn's example: forced factorial growth of the inverse normalizing map",
       "Horn example, forced series (k-1)! x1^k", "none", kHornField, false, ""},
      {"linearizable", "diag(1,-3,9) system with a linear symmetry diag(1,-2,4)",
       "joint-kernel linearization example", "a_i = b_i = 1", kLinearizableField, false, kLinearizableSymmetry},
      {"so2", "SO(2)-symmetric field with a nonlinear symmetry", "SO(2) example and its nonlinear symmetry",
       "a_1 = a_2 = b = 1", kSo2Field, false, kSo2Symmetry},
      {"holomorphic", "holomorphic planar system z' = z^2 and its symmetry (v, -u)",
       "holomorphic planar systems", "f(z) = z^2", kHolomorphicField, false, kHolomorphicSymmetry},
      {"hopf", "complexified Hopf family and its transversality matrix", "Hopf transversality",
       "Re lambda'(0) = 1", kHopfFamily, true, ""},
      {"oscillator-1to2", "1:m resonant oscillators with m = 2", "resonant oscillator matrix",
       "omega0 = 1, m = 2", kOscillatorFamily, true, ""},
      {"centralizer-linear", "centralizer of Ax for spectrum (1,-1)", "monomial structure of the linear centralizer",
       "none", kCentralizerField, false, ""},
  };
  return entries;
}

bool corpus_filter_matches(std::string_view pattern, std::string_view id) {
  // Iterative glob with single-star backtracking.
  std::size_t p = 0, s = 0, star = std::string_view::npos, mark = 0;
  while (s < id.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == id[s])) {
      ++p;
      ++s;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = s;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      s = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<CorpusOutcome> run_corpus(const std::optional<std::string>& filter) {
  std::vector<CorpusOutcome> outcomes;
  for (const auto& entry : corpus_entries()) {
    if (filter && !filter->empty() && !corpus_filter_matches(*filter, entry.id)) continue;
    CorpusOutcome out;
    out.id = entry.id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      for (const auto& r : kRunners)
        if (entry.id == r.id) r.run(entry, out);
      if (out.checks.empty()) out.error = "no checks ran";
    } catch (const std::exception& ex) {
      out.error = ex.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.passed = out.error.empty();
    for (const auto& c : out.checks) out.passed = out.passed && c.passed;
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

Json corpus_json(const std::vector<CorpusOutcome>& outcomes) {
  Json entries = Json::array();
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed;
    Json e;
    e["id"] = o.id;
    e["passed"] = o.passed;
    Json checks = Json::array();
    for (const auto& c : o.checks)
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
    e["checks"] = std::move(checks);
    e["table"] = o.table;
    e["error"] = o.error.empty() ? Json(nullptr) : Json(o.error);
    entries.push_back(std::move(e));
  }
  Json out;
  out["entries"] = std::move(entries);
  out["passed"] = passed;
  out["failed"] = outcomes.size() - passed;
  return out;
}

std::string corpus_text(const std::vector<CorpusOutcome>& outcomes) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed;
    os << (o.passed ? "PASS " : "FAIL ") << o.id << "\n";
    for (const auto& line : o.table) os << "  " << line << "\n";
    for (const auto& c : o.checks) {
      os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << "\n";
      if (!c.passed) os << "    expected: " << c.expected << "\n    actual:   " << c.actual << "\n";
    }
    if (!o.error.empty()) os << "  error: " << o.error << "\n";
  }
  os << passed << "/" << outcomes.size() << " entries passed\n";
  return os.str();
}

}  // namespace pdnf
