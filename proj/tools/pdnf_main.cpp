// pdnf command-line front end.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdnf/bifurcation.hpp"
#include "pdnf/centralizer.hpp"
#include "pdnf/corpus.hpp"
#include "pdnf/diagnostics.hpp"
#include "pdnf/error.hpp"
#include "pdnf/io.hpp"
#include "pdnf/normalizer.hpp"
#include "pdnf/report.hpp"
#include "pdnf/resonance.hpp"

namespace {

using namespace pdnf;

constexpr int kExitOk = 0;
constexpr int kExitStrict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Output {
  bool json = false;
  std::string out;
  bool strict = false;

  void emit(std::string_view command, const Json& result, const std::string& text) const {
    std::string body = json ? report_envelope(command, result).dump(2) + "\n" : text;
    if (out.empty())
      std::cout << body;
    else
      write_text_file(out, body);
  }
};

std::uint64_t omega_budget() {
  const char* env = std::getenv("PDNF_ENUM_BUDGET");
  if (!env || !*env) return kDefaultOmegaBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0)
    throw Error(ErrorCode::invalid_argument, "PDNF_ENUM_BUDGET must be a positive integer");
  return v;
}

Spectrum parse_spectrum_list(const std::string& text, const std::string& flag) {
  std::vector<Scalar> ev;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      ev.push_back(parse_scalar(part));
    } catch (const Error& e) {
      throw Error(ErrorCode::invalid_argument, flag + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Spectrum(std::move(ev));
}

FieldFile load_field(const std::string& path) { return parse_field_file(read_text_file(path)); }

Spectrum spectrum_of(const FieldFile& file) {
  const PolyVectorField f = file.prepared(1);
  auto s = f.spectrum();
  if (!s) throw Error(ErrorCode::not_diagonal, "linear part is not diagonal; add a linear_matrix block");
  return *s;
}

/// Lowest nonlinear degree of f, or -1.
int lowest_nonlinear_degree(const PolyVectorField& f) {
  for (int d = 2; d <= f.order(); ++d)
    for (std::size_t j = 0; j < f.dim(); ++j)
      if (!f[j].homogeneous(d).empty()) return d;
  return -1;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Poincare-Dulac normal forms, symmetries and diagnostics"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Output output;
  app.add_flag("--json", output.json, "Emit the structured JSON report");
  app.add_option("--out", output.out, "Write the report to this file");
  app.add_flag("--strict", output.strict, "Exit with status 1 when a requested hypothesis fails");

  // normalize
  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form and normalizing transformation");
  std::string nz_input, nz_style = "distinguished";
  int nz_order = 0;
  normalize_cmd->add_option("--input", nz_input, "Field file")->required();
  normalize_cmd->add_option("--order", nz_order, "Truncation order N >= 2")->required();
  normalize_cmd->add_option("--style", nz_style, "Normalization style")->check(CLI::IsMember({"distinguished"}));

  // resonances
  auto* res_cmd = app.add_subcommand("resonances", "Resonance relations <m, L> = L_j");
  std::string res_input, res_spec;
  int res_degree = 0;
  auto* res_in_opt = res_cmd->add_option("--input", res_input, "Field file");
  auto* res_spec_opt = res_cmd->add_option("--spec", res_spec, "Eigenvalues, comma separated");
  res_in_opt->excludes(res_spec_opt);
  res_cmd->add_option("--max-degree", res_degree, "Largest |m|")->required();

  // diagnose
  auto* diag_cmd = app.add_subcommand("diagnose", "Convergence hypotheses and symmetry checks");
  std::string dg_input;
  std::vector<std::string> dg_symmetries;
  int dg_order = 0, dg_omega_k = 3, dg_cdeg = 0;
  diag_cmd->add_option("--input", dg_input, "Field file")->required();
  diag_cmd->add_option("--order", dg_order, "Truncation order N >= 2")->required();
  diag_cmd->add_option("--symmetry", dg_symmetries, "Field file of a commuting field (repeatable)");
  diag_cmd->add_option("--omega-k", dg_omega_k, "Largest k for Condition omega")->check(CLI::Range(1, 62));
  diag_cmd->add_option("--centralizer-degree", dg_cdeg, "Degree bound for the centralizer check (0: auto)");

  // centralizer
  auto* cent_cmd = app.add_subcommand("centralizer", "Truncated centralizer of the normal form");
  std::string ce_input;
  int ce_degree = 0, ce_order = 0;
  bool ce_unrestricted = false;
  cent_cmd->add_option("--input", ce_input, "Field file")->required();
  cent_cmd->add_option("--degree", ce_degree, "Degree bound d")->required();
  cent_cmd->add_option("--order", ce_order, "Normalization order (0: d + q - 1)");
  cent_cmd->add_flag("--unrestricted", ce_unrestricted, "Solve over all monomial-vectors (slow oracle)");

  // kernel-intersection
  auto* ki_cmd = app.add_subcommand("kernel-intersection", "Ker(ad A) ∩ Ker(ad B) for diagonal A, B");
  std::string ki_a, ki_b;
  int ki_degree = 0;
  ki_cmd->add_option("--spec-a", ki_a, "Eigenvalues of A, comma separated")->required();
  ki_cmd->add_option("--spec-b", ki_b, "Eigenvalues of B, comma separated")->required();
  ki_cmd->add_option("--max-degree", ki_degree, "Largest degree")->required();

  // bifurcation
  auto* bif_cmd = app.add_subcommand("bifurcation", "Matrix D and its nondegeneracy");
  std::string bf_family;
  int bf_m = 0;
  bif_cmd->add_option("--family", bf_family, "Family file")->required();
  bif_cmd->add_option("--oscillator-m", bf_m, "Also build the 1:m oscillator matrix");

  // suspend
  auto* sus_cmd = app.add_subcommand("suspend", "Suspend a family to a field on (x, eta) space");
  std::string su_family;
  sus_cmd->add_option("--family", su_family, "Family file")->required();

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in worked examples");
  corpus_cmd->require_subcommand(1);
  auto* corpus_run = corpus_cmd->add_subcommand("run", "Run the examples");
  std::string co_filter;
  corpus_run->add_option("--filter", co_filter, "Glob on entry ids");
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List the examples");
  auto* corpus_show = corpus_cmd->add_subcommand("show", "Print an entry's input file");
  std::string co_show_id;
  corpus_show->add_option("id", co_show_id, "Entry id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*normalize_cmd) {
    const FieldFile file = load_field(nz_input);
    const NormalFormResult r = normalize(file.prepared(nz_order), nz_order, parse_style(nz_style));
    output.emit("normalize", normal_form_json(r), normal_form_text(r, file.vars));
    return kExitOk;
  }
  if (*res_cmd) {
    if (res_input.empty() && res_spec.empty())
      throw Error(ErrorCode::invalid_argument, "resonances: give --input or --spec");
    const Spectrum spec = res_input.empty() ? parse_spectrum_list(res_spec, "--spec") : spectrum_of(load_field(res_input));
    const auto rels = resonant_monomials(spec, res_degree);
    output.emit("resonances", resonances_json(spec, res_degree, rels), resonances_text(spec, res_degree, rels));
    return kExitOk;
  }
  if (*diag_cmd) {
    const FieldFile file = load_field(dg_input);
    DiagnoseOptions opt;
    opt.omega_k = dg_omega_k;
    opt.omega_budget = omega_budget();
    opt.centralizer_degree = dg_cdeg;
    for (const auto& path : dg_symmetries) opt.symmetries.push_back(load_field(path).prepared(dg_order));
    const DiagnosticsReport r = diagnose(file.prepared(dg_order), dg_order, opt);
    output.emit("diagnose", diagnostics_json(r), diagnostics_text(r, file.vars));
    if (output.strict)
      for (const auto& t : r.theorems)
        if (t.verdict == Verdict::hypothesis_failed) return kExitStrict;
    return kExitOk;
  }
  if (*cent_cmd) {
    const FieldFile file = load_field(ce_input);
    int order = ce_order;
    if (order <= 0) {
      const PolyVectorField probe = file.exact ? file.field : file.prepared(file.field.order());
      const int q = lowest_nonlinear_degree(probe);
      order = q < 0 ? ce_degree : ce_degree + q - 1;
      if (!file.exact) order = std::min(order, file.field.order());
      order = std::max(order, ce_degree);
    }
    const PolyVectorField f = file.prepared(order);
    const PolyVectorField fhat = order >= 2 ? normalize(f, order).normal_form : f;
    const CentralizerBasis basis =
        centralizer_basis(fhat, ce_degree, ce_unrestricted ? CentralizerMode::unrestricted : CentralizerMode::restricted);
    Json j = centralizer_json(basis);
    j["normalization_order"] = order;
    j["normal_form"] = field_json(fhat);
    output.emit("centralizer", j, centralizer_text(basis, file.vars));
    return kExitOk;
  }
  if (*ki_cmd) {
    const Spectrum a = parse_spectrum_list(ki_a, "--spec-a");
    const Spectrum b = parse_spectrum_list(ki_b, "--spec-b");
    const auto r = kernel_intersection(a, b, ki_degree);
    output.emit("kernel-intersection", kernel_intersection_json(a, b, ki_degree, r),
                kernel_intersection_text(a, b, ki_degree, r));
    return output.strict && !r.empty() ? kExitStrict : kExitOk;
  }
  if (*bif_cmd) {
    const ParamFamily fam = parse_family_file(read_text_file(bf_family));
    BifurcationOutcome out{build_D(fam), {}};
    out.nondegeneracy = det_nonsingular(out.d);
    Json j = bifurcation_json(fam, out);
    std::string text = bifurcation_text(fam, out);
    if (bf_m > 0) {
      const OscillatorMatrix osc = build_oscillator_D(fam, bf_m);
      const Scalar det = determinant(osc.entries);
      j["oscillator"] = Json{{"m", osc.m},
                             {"omega0", to_string(osc.omega0)},
                             {"matrix", matrix_json(osc.entries)},
                             {"det", to_string(det)}};
      text += "oscillator matrix (m = " + std::to_string(osc.m) + ", omega0 = " + to_string(osc.omega0) + ") =\n" +
              matrix_text(osc.entries) + "det = " + to_string(det) + "\n";
    }
    output.emit("bifurcation", j, text);
    return output.strict && !out.nondegeneracy.nonsingular ? kExitStrict : kExitOk;
  }
  if (*sus_cmd) {
    const ParamFamily fam = parse_family_file(read_text_file(su_family));
    FieldFile file = make_field_file(suspend(fam), false);
    file.vars = fam.state_names;
    file.vars.insert(file.vars.end(), fam.param_names.begin(), fam.param_names.end());
    const std::string text = serialize_field_file(file);
    if (output.json)
      output.emit("suspend", field_json(file.field), text);
    else if (output.out.empty())
      std::cout << text;
    else
      write_text_file(output.out, text);
    return kExitOk;
  }
  if (*corpus_list) {
    Json list = Json::array();
    std::string text;
    for (const auto& e : corpus_entries()) {
      list.push_back(Json{{"id", e.id}, {"description", e.description}, {"provenance", e.provenance}, {"pins", e.pins}});
      text += e.id + "  " + e.description + " (pins: " + e.pins + ")\n";
    }
    output.emit("corpus list", list, text);
    return kExitOk;
  }
  if (*corpus_show) {
    for (const auto& e : corpus_entries())
      if (e.id == co_show_id) {
        std::string text = e.input;
        if (!e.companion.empty()) text += "\n# companion\n" + e.companion;
        output.emit("corpus show", Json{{"id", e.id}, {"input", e.input}, {"companion", e.companion}}, text);
        return kExitOk;
      }
    throw Error(ErrorCode::invalid_argument, "no corpus entry '" + co_show_id + "'");
  }
  if (*corpus_run) {
    const auto outcomes = run_corpus(co_filter.empty() ? std::nullopt : std::optional<std::string>(co_filter));
    if (outcomes.empty()) throw Error(ErrorCode::invalid_argument, "no corpus entry matches '" + co_filter + "'");
    output.emit("corpus run", corpus_json(outcomes), corpus_text(outcomes));
    for (const auto& o : outcomes)
      if (!o.passed) return kExitStrict;
    return kExitOk;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pdnf::Error& e) {
    std::cerr << "error [" << pdnf::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
