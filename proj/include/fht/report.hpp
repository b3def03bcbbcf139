#pragma once

#include <json.hpp>

#include "fht/classifier.hpp"
#include "fht/transform.hpp"

// JSON encodings for the report types the CLI emits. Every encoder has a
// matching decoder so reports round-trip.

namespace fht {

using json = nlohmann::json;

json to_json(const SpectralSet& set);
SpectralSet spectral_set_from_json(const json& j);

json to_json(const IndexProfile& profile);
IndexProfile index_profile_from_json(const json& j);

json to_json(const QuadratureConfig& cfg);
QuadratureConfig quadrature_config_from_json(const json& j);

json to_json(const SpectrumAnswer& answer);
SpectrumAnswer spectrum_answer_from_json(const json& j);

json to_json(const FineSpectra& fs);
FineSpectra fine_spectra_from_json(const json& j);

json to_json(const ResidualReport& report);
ResidualReport residual_report_from_json(const json& j);

json to_json(const SpaceClassification& sc);

}  // namespace fht
