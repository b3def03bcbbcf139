#include "fht/report.hpp"

namespace fht {

namespace {

const char* kind_name(SpectralSet::Kind k) {
  using K = SpectralSet::Kind;
  switch (k) {
    case K::Empty: return "empty";
    case K::PlusMinusOne: return "plus_minus_one";
    case K::OpenUnitInterval: return "open_unit_interval";
    case K::ClosedUnitInterval: return "closed_unit_interval";
    case K::RegionInterior: return "region_interior";
    case K::RegionBoundary: return "region_boundary";
    case K::RegionClosed: return "region_closed";
    case K::RegionMinusEndpoints: return "region_minus_endpoints";
    case K::Union: return "union";
    case K::Difference: return "difference";
  }
  return "?";
}

}  // namespace

json to_json(const SpectralSet& set) {
  using K = SpectralSet::Kind;
  json j;
  j["tag"] = kind_name(set.kind());
  switch (set.kind()) {
    case K::RegionInterior:
    case K::RegionBoundary:
    case K::RegionClosed:
    case K::RegionMinusEndpoints:
      j["p"] = set.parameter();
      break;
    case K::Union: {
      json parts = json::array();
      for (const auto& part : set.parts()) parts.push_back(to_json(part));
      j["parts"] = std::move(parts);
      break;
    }
    case K::Difference:
      j["minuend"] = to_json(set.parts()[0]);
      j["subtrahend"] = to_json(set.parts()[1]);
      break;
    default:
      break;
  }
  j["display"] = set.to_string();
  return j;
}

SpectralSet spectral_set_from_json(const json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "empty") return SpectralSet::empty();
  if (tag == "plus_minus_one") return SpectralSet::plus_minus_one();
  if (tag == "open_unit_interval") return SpectralSet::open_unit_interval();
  if (tag == "closed_unit_interval") return SpectralSet::closed_unit_interval();
  if (tag == "region_interior") return SpectralSet::region_interior(j.at("p").get<double>());
  if (tag == "region_boundary") return SpectralSet::region_boundary(j.at("p").get<double>());
  if (tag == "region_closed") return SpectralSet::region_closed(j.at("p").get<double>());
  if (tag == "region_minus_endpoints")
    return SpectralSet::region_minus_endpoints(j.at("p").get<double>());
  if (tag == "union") {
    std::vector<SpectralSet> parts;
    for (const auto& part : j.at("parts")) parts.push_back(spectral_set_from_json(part));
    return SpectralSet::union_of(std::move(parts));
  }
  if (tag == "difference")
    return SpectralSet::difference(spectral_set_from_json(j.at("minuend")),
                                   spectral_set_from_json(j.at("subtrahend")));
  throw DomainError("spectral_set_from_json: unknown tag '" + tag + "'");
}

json to_json(const IndexProfile& pr) {
  return json{{"p_x", pr.p_x},
              {"p_attained", pr.p_attained},
              {"q_x", pr.q_x},
              {"q_attained", pr.q_attained},
              {"boyd_lower", pr.boyd_lower},
              {"boyd_upper", pr.boyd_upper},
              {"separable", pr.separable},
              {"interp_between_l2_and_lqx", pr.interp_between_l2_and_lqx}};
}

IndexProfile index_profile_from_json(const json& j) {
  IndexProfile pr;
  pr.p_x = j.at("p_x").get<double>();
  pr.p_attained = j.at("p_attained").get<bool>();
  pr.q_x = j.at("q_x").get<double>();
  pr.q_attained = j.at("q_attained").get<bool>();
  pr.boyd_lower = j.at("boyd_lower").get<double>();
  pr.boyd_upper = j.at("boyd_upper").get<double>();
  pr.separable = j.at("separable").get<bool>();
  pr.interp_between_l2_and_lqx = j.at("interp_between_l2_and_lqx").get<bool>();
  return pr;
}

json to_json(const QuadratureConfig& cfg) {
  return json{{"tol", cfg.tol},
              {"max_depth", cfg.max_depth},
              {"endpoint_margin", cfg.endpoint_margin},
              {"mode", to_string(cfg.mode)}};
}

QuadratureConfig quadrature_config_from_json(const json& j) {
  QuadratureConfig cfg;
  cfg.tol = j.at("tol").get<double>();
  cfg.max_depth = j.at("max_depth").get<int>();
  cfg.endpoint_margin = j.at("endpoint_margin").get<double>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "smooth") cfg.mode = QuadMode::SmoothSubtraction;
  else if (mode == "chebyshev") cfg.mode = QuadMode::ChebyshevSubstitution;
  else throw DomainError("quadrature_config_from_json: unknown mode '" + mode + "'");
  return cfg;
}

json to_json(const SpectrumAnswer& answer) {
  if (answer.is_exact()) return json{{"kind", "exact"}, {"set", to_json(answer.set())}};
  return json{{"kind", "bounds"},
              {"lower", to_json(answer.lower())},
              {"upper", to_json(answer.upper())}};
}

SpectrumAnswer spectrum_answer_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exact") return SpectrumAnswer::exact(spectral_set_from_json(j.at("set")));
  if (kind == "bounds")
    return SpectrumAnswer::bounds(spectral_set_from_json(j.at("lower")),
                                  spectral_set_from_json(j.at("upper")));
  throw DomainError("spectrum_answer_from_json: unknown kind '" + kind + "'");
}

json to_json(const FineSpectra& fs) {
  return json{{"zero_location", to_string(fs.zero_location)},
              {"spectrum", to_json(fs.spectrum)},
              {"point", to_json(fs.point)},
              {"residual", to_json(fs.residual)},
              {"continuous", to_json(fs.continuous)},
              {"provenance", fs.provenance}};
}

FineSpectra fine_spectra_from_json(const json& j) {
  FineSpectra fs;
  const std::string z = j.at("zero_location").get<std::string>();
  if (z == "point") fs.zero_location = ZeroLocation::Point;
  else if (z == "residual") fs.zero_location = ZeroLocation::Residual;
  else if (z == "continuous") fs.zero_location = ZeroLocation::Continuous;
  else throw DomainError("fine_spectra_from_json: unknown zero_location '" + z + "'");
  fs.spectrum = spectrum_answer_from_json(j.at("spectrum"));
  fs.point = spectrum_answer_from_json(j.at("point"));
  fs.residual = spectrum_answer_from_json(j.at("residual"));
  fs.continuous = spectrum_answer_from_json(j.at("continuous"));
  fs.provenance = j.at("provenance").get<std::vector<std::string>>();
  return fs;
}

json to_json(const ResidualReport& report) {
  return json{{"grid", report.grid},
              {"residuals", report.residuals},
              {"max_residual", report.max_residual},
              {"config", to_json(report.config)}};
}

ResidualReport residual_report_from_json(const json& j) {
  ResidualReport r;
  r.grid = j.at("grid").get<std::vector<double>>();
  r.residuals = j.at("residuals").get<std::vector<double>>();
  r.max_residual = j.at("max_residual").get<double>();
  r.config = quadrature_config_from_json(j.at("config"));
  return r;
}

json to_json(const SpaceClassification& sc) {
  json cases = json::array();
  for (const auto& c : sc.cases) {
    cases.push_back(json{{"profile", to_json(c.profile)}, {"result", to_json(c.result)}});
  }
  json j{{"cases", std::move(cases)},
         {"spectrum", to_json(sc.spectrum)},
         {"point", to_json(sc.point)},
         {"residual", to_json(sc.residual)},
         {"continuous", to_json(sc.continuous)}};
  j["zero_location"] =
      sc.zero_location.has_value() ? to_string(*sc.zero_location) : "ambiguous";
  return j;
}

}  // namespace fht
