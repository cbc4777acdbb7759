#include "pdnf/report.hpp"

#include <sstream>

namespace pdnf {

namespace {

Json exps_json(const Monomial& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.nvars(); ++i) a.push_back(m[i]);
  return a;
}

Json poly_terms_json(const PolyScalar& p) {
  Json terms = Json::array();
  p.for_each([&](const Monomial& m, const Scalar& c) {
    terms.push_back(Json{{"coeff", to_string(c)}, {"exps", exps_json(m)}});
  });
  return terms;
}

Json scalar_list_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(to_string(s));
  return a;
}

Json optional_rational(const std::optional<Rational>& q) {
  return q ? Json(to_string(*q)) : Json("inf");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string mv_string(const kernels::MonomialVector& mv) {
  return exps_string(mv.m) + " -> comp " + std::to_string(mv.comp + 1);
}

Json mv_json(const kernels::MonomialVector& mv) {
  return Json{{"exps", exps_json(mv.m)}, {"comp", mv.comp + 1}};
}

}  // namespace

Json report_envelope(std::string_view command, Json result) {
  Json out;
  out["tool"] = std::string(kToolVersion);
  out["command"] = std::string(command);
  out["result"] = std::move(result);
  return out;
}

Json field_json(const PolyVectorField& f) {
  Json out;
  out["dim"] = f.dim();
  out["order"] = f.order();
  Json terms = Json::array();
  for (std::size_t j = 0; j < f.dim(); ++j)
    f[j].for_each([&](const Monomial& m, const Scalar& c) {
      terms.push_back(Json{{"comp", j + 1}, {"coeff", to_string(c)}, {"exps", exps_json(m)}});
    });
  out["terms"] = std::move(terms);
  return out;
}

Json map_json(const NearIdentityMap& map) { return field_json(map.components()); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]\n";
  }
  return out;
}

Json normal_form_json(const NormalFormResult& r) {
  Json out;
  out["order"] = r.order;
  out["style"] = std::string(to_string(r.style));
  out["spectrum"] = scalar_list_json(r.spectrum.eigenvalues);
  out["composition_order"] = std::string(kCompositionOrder);
  out["normal_form"] = field_json(r.normal_form);
  out["transformation"] = map_json(r.transformation);
  out["inverse_transformation"] = map_json(r.inverse_transformation);
  Json gens = Json::array();
  for (std::size_t i = 0; i < r.generators.size(); ++i)
    gens.push_back(Json{{"degree", static_cast<int>(i) + 2}, {"generator", field_json(r.generators[i])}});
  out["generators"] = std::move(gens);
  Json table = Json::array();
  for (const auto& d : r.per_degree)
    table.push_back(Json{{"degree", d.degree},
                         {"kernel_dim", d.kernel_dim},
                         {"range_dim", d.range_dim},
                         {"removed_terms", d.removed_terms},
                         {"kept_terms", d.kept_terms}});
  out["per_degree"] = std::move(table);
  return out;
}

std::string normal_form_text(const NormalFormResult& r, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "normal form to order " << r.order << " (style " << to_string(r.style) << ")\n";
  os << "spectrum " << to_string(r.spectrum) << "\n";
  os << to_string(r.normal_form, names);
  os << "transformation x -> y (truncated at order " << r.transformation.order() << "):\n";
  os << to_string(r.transformation.components(), names);
  os << "inverse transformation y -> x:\n";
  os << to_string(r.inverse_transformation.components(), names);
  os << "composition: " << kCompositionOrder << "\n";
  os << "degree  ker(adA)  ran(adA)  removed  kept\n";
  for (const auto& d : r.per_degree)
    os << "  " << d.degree << "      " << d.kernel_dim << "        " << d.range_dim << "        "
       << d.removed_terms << "        " << d.kept_terms << "\n";
  return os.str();
}

Json resonances_json(const Spectrum& spec, int max_degree, const std::vector<ResonanceRelation>& rels) {
  Json out;
  out["spectrum"] = scalar_list_json(spec.eigenvalues);
  out["max_degree"] = max_degree;
  Json list = Json::array();
  for (const auto& r : rels) list.push_back(mv_json(r));
  out["relations"] = std::move(list);
  out["count"] = rels.size();
  return out;
}

std::string resonances_text(const Spectrum& spec, int max_degree, const std::vector<ResonanceRelation>& rels) {
  std::ostringstream os;
  os << "resonances of " << to_string(spec) << " with 2 <= |m| <= " << max_degree << ": " << rels.size() << "\n";
  for (const auto& r : rels) os << mv_string(r) << "\n";
  return os.str();
}

Json omega_json(const OmegaReport& r) {
  Json out;
  out["max_k"] = r.max_k;
  out["verdict"] = std::string(to_string(r.verdict));
  out["denominator"] = r.denominator.get_str();
  out["tuples"] = r.tuples;
  Json recs = Json::array();
  for (const auto& rec : r.records)
    recs.push_back(Json{{"k", rec.k},
                        {"omega_squared", optional_rational(rec.omega_squared)},
                        {"term", rec.term},
                        {"partial_sum", rec.partial_sum}});
  out["records"] = std::move(recs);
  return out;
}

Json centralizer_json(const CentralizerBasis& basis) {
  Json out;
  out["degree_bound"] = basis.degree_bound;
  out["constraint_degree"] = basis.constraint_degree;
  out["mode"] = basis.mode == CentralizerMode::restricted ? "restricted" : "unrestricted";
  out["dimension"] = basis.dimension();
  out["fully_constrained"] = basis.fully_constrained();
  Json elems = Json::array();
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    Json e = field_json(basis.elements[i]);
    e["unconstrained_top"] = static_cast<bool>(basis.unconstrained_top[i]);
    elems.push_back(std::move(e));
  }
  out["elements"] = std::move(elems);
  return out;
}

std::string centralizer_text(const CentralizerBasis& basis, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "centralizer to degree " << basis.degree_bound << ", constraints through degree "
     << basis.constraint_degree << ": dimension " << basis.dimension() << "\n";
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    os << "element " << (i + 1);
    if (basis.unconstrained_top[i]) os << " (top degree not fully constrained)";
    os << ":\n" << to_string(basis.elements[i], names);
  }
  if (!basis.fully_constrained())
    os << "caveat: the input order is too low to impose every constraint on the top degrees\n";
  os << "caveat: elements are truncations and may not extend to formal symmetries\n";
  return os.str();
}

Json kernel_intersection_json(const Spectrum& a, const Spectrum& b, int max_degree,
                              const std::vector<kernels::MonomialVector>& result) {
  Json out;
  out["spec_a"] = scalar_list_json(a.eigenvalues);
  out["spec_b"] = scalar_list_json(b.eigenvalues);
  out["max_degree"] = max_degree;
  out["empty"] = result.empty();
  Json list = Json::array();
  for (const auto& r : result) list.push_back(mv_json(r));
  out["monomials"] = std::move(list);
  return out;
}

std::string kernel_intersection_text(const Spectrum& a, const Spectrum& b, int max_degree,
                                     const std::vector<kernels::MonomialVector>& result) {
  std::ostringstream os;
  os << "Ker(ad A) ∩ Ker(ad B) for A = diag" << to_string(a) << ", B = diag" << to_string(b)
     << ", degrees 2.." << max_degree << ": ";
  if (result.empty()) {
    os << "empty (joint-linearization kernel hypothesis holds to degree " << max_degree << ")\n";
  } else {
    os << result.size() << " monomial-vectors\n";
    for (const auto& r : result) os << mv_string(r) << "\n";
  }
  return os.str();
}

Json diagnostics_json(const DiagnosticsReport& r) {
  Json out;
  out["order"] = r.order;
  out["spectrum"] = scalar_list_json(r.spectrum.eigenvalues);
  out["normal_form"] = normal_form_json(r.normal);

  Json ca;
  ca["satisfied"] = r.condition_a.satisfied;
  ca["alpha"] = poly_terms_json(r.condition_a.alpha);
  ca["alpha_order"] = r.condition_a.alpha.order();
  if (r.condition_a.violation) {
    const auto& v = *r.condition_a.violation;
    Json vj{{"degree", v.degree}, {"exps", exps_json(v.term)}, {"comp", v.comp + 1}};
    vj["other_comp"] = v.other_comp ? Json(*v.other_comp + 1) : Json(nullptr);
    vj["reason"] = v.reason;
    ca["violation"] = std::move(vj);
  } else {
    ca["violation"] = nullptr;
  }
  ca["alpha_invariant_under_fhat"] = r.condition_a.alpha_invariant_under_fhat;
  ca["alpha_invariant_under_a"] = r.condition_a.alpha_invariant_under_a;
  out["condition_a"] = std::move(ca);
  out["pliss"] = r.pliss;
  out["poincare_domain"] = r.poincare;
  out["omega"] = omega_json(r.omega);
  out["centralizer"] = r.centralizer ? centralizer_json(*r.centralizer) : Json(nullptr);
  if (r.growth) {
    Json g;
    g["component"] = r.growth->component + 1;
    g["variable"] = r.growth->var + 1;
    g["kind"] = std::string(to_string(r.growth->result.kind));
    g["estimate"] = r.growth->result.estimate;
    g["first_index"] = r.growth->result.first_index;
    g["last_index"] = r.growth->result.last_index;
    g["rule"] = std::string(kGrowthRule);
    out["growth"] = std::move(g);
  } else {
    out["growth"] = nullptr;
  }
  Json thms = Json::array();
  for (const auto& t : r.theorems) {
    Json tj;
    tj["id"] = t.id;
    tj["statement"] = t.statement;
    tj["verdict"] = std::string(to_string(t.verdict));
    tj["conclusion"] = t.conclusion;
    tj["witness"] = t.witness;
    Json checks = Json::array();
    for (const auto& c : t.checks)
      checks.push_back(Json{{"name", c.name},
                            {"passed", c.passed},
                            {"exact", c.exact},
                            {"required", c.required},
                            {"detail", c.detail}});
    tj["checks"] = std::move(checks);
    tj["caveats"] = t.caveats;
    thms.push_back(std::move(tj));
  }
  out["theorems"] = std::move(thms);
  out["notes"] = r.notes;
  return out;
}

std::string diagnostics_text(const DiagnosticsReport& r, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "diagnostics at truncation order " << r.order << "\n";
  os << "spectrum " << to_string(r.spectrum) << "\n";
  os << "normal form:\n" << to_string(r.normal.normal_form, names);
  os << "poincare domain: " << yes_no(r.poincare) << "\n";
  os << "pliss (linear normal form to order " << r.order << "): " << yes_no(r.pliss) << "\n";
  os << "condition A to order " << r.order << ": " << yes_no(r.condition_a.satisfied);
  if (r.condition_a.violation) {
    const auto& v = *r.condition_a.violation;
    os << " (degree " << v.degree << ", term " << exps_string(v.term) << " in comp " << (v.comp + 1) << ": "
       << v.reason << ")";
  }
  os << "\n";
  if (!r.condition_a.alpha.is_zero()) os << "  alpha = " << to_string(r.condition_a.alpha, names) << "\n";
  os << "condition omega to k = " << r.omega.max_k << ": " << to_string(r.omega.verdict) << " (q = "
     << r.omega.denominator.get_str() << ")\n";
  for (const auto& rec : r.omega.records)
    os << "  k=" << rec.k << " omega_k^2=" << (rec.omega_squared ? to_string(*rec.omega_squared) : "inf")
       << " partial_sum=" << rec.partial_sum << "\n";
  if (r.centralizer)
    os << "centralizer to degree " << r.centralizer->degree_bound << ": dimension " << r.centralizer->dimension()
       << "\n";
  if (r.growth)
    os << "growth of inverse transformation comp " << (r.growth->component + 1) << " along var "
       << (r.growth->var + 1) << ": " << to_string(r.growth->result.kind) << " (heuristic)\n";
  for (const auto& t : r.theorems) {
    os << "[" << t.id << "] " << to_string(t.verdict) << "\n";
    os << "  " << t.statement << "\n";
    for (const auto& c : t.checks)
      os << "  - " << c.name << ": " << (c.passed ? "pass" : "fail") << (c.exact ? " (exact)" : " (truncated)")
         << (c.required ? "" : " (informational)") << (c.detail.empty() ? "" : "; " + c.detail) << "\n";
    if (!t.conclusion.empty()) os << "  conclusion: " << t.conclusion << "\n";
    if (!t.witness.empty()) os << "  witness: " << t.witness << "\n";
    for (const auto& c : t.caveats) os << "  caveat: " << c << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

Json bifurcation_json(const ParamFamily& family, const BifurcationOutcome& out) {
  Json j;
  j["n"] = family.n;
  j["p"] = family.p;
  j["eigenvalues"] = scalar_list_json(family.a_at_zero().diagonal_entries());
  j["D"] = matrix_json(out.d.entries);
  j["det"] = to_string(out.nondegeneracy.det);
  j["nonsingular"] = out.nondegeneracy.nonsingular;
  j["verdict"] = out.nondegeneracy.nonsingular ? "nonsingular" : "singular";
  return j;
}

std::string bifurcation_text(const ParamFamily& family, const BifurcationOutcome& out) {
  std::ostringstream os;
  os << "family with n = " << family.n << ", p = " << family.p << "\n";
  os << "D =\n" << matrix_text(out.d.entries);
  os << "det D = " << to_string(out.nondegeneracy.det) << "\n";
  os << (out.nondegeneracy.nonsingular ? "nonsingular" : "singular") << "\n";
  return os.str();
}

}  // namespace pdnf
