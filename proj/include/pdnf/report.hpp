#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pdnf/bifurcation.hpp"
#include "pdnf/centralizer.hpp"
#include "pdnf/diagnostics.hpp"
#include "pdnf/field.hpp"
#include "pdnf/normalizer.hpp"
#include "pdnf/resonance.hpp"
#include "pdnf/transform.hpp"

namespace pdnf {

/// Reports keep insertion order so their key order is stable.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "pdnf 0.1.0";

/// {"tool", "command", "result"}.
Json report_envelope(std::string_view command, Json result);

Json field_json(const PolyVectorField& f);
Json map_json(const NearIdentityMap& map);

Json normal_form_json(const NormalFormResult& r);
std::string normal_form_text(const NormalFormResult& r, const std::vector<std::string>& names);

Json resonances_json(const Spectrum& spec, int max_degree, const std::vector<ResonanceRelation>& rels);
std::string resonances_text(const Spectrum& spec, int max_degree, const std::vector<ResonanceRelation>& rels);

Json omega_json(const OmegaReport& r);

Json centralizer_json(const CentralizerBasis& basis);
std::string centralizer_text(const CentralizerBasis& basis, const std::vector<std::string>& names);

Json kernel_intersection_json(const Spectrum& a, const Spectrum& b, int max_degree,
                              const std::vector<kernels::MonomialVector>& result);
std::string kernel_intersection_text(const Spectrum& a, const Spectrum& b, int max_degree,
                                     const std::vector<kernels::MonomialVector>& result);

Json diagnostics_json(const DiagnosticsReport& r);
std::string diagnostics_text(const DiagnosticsReport& r, const std::vector<std::string>& names);

struct BifurcationOutcome {
  DMatrix d;
  Nondegeneracy nondegeneracy;
};
Json bifurcation_json(const ParamFamily& family, const BifurcationOutcome& out);
std::string bifurcation_text(const ParamFamily& family, const BifurcationOutcome& out);

Json matrix_json(const Matrix& m);
std::string matrix_text(const Matrix& m);

}  // namespace pdnf
