#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fht/spaces.hpp"
#include "fht/spectral_set.hpp"

namespace fht {

enum class ZeroLocation { Point, Residual, Continuous };

const char* to_string(ZeroLocation z);

// An exactly identified set, or a sandwich lower <= part <= upper. Bounds
// are sampling-checked for lower subset upper at construction.
class SpectrumAnswer {
 public:
  static SpectrumAnswer exact(SpectralSet set);
  static SpectrumAnswer bounds(SpectralSet lower, SpectralSet upper);

  bool is_exact() const { return exact_; }
  const SpectralSet& lower() const { return lower_; }
  const SpectralSet& upper() const { return upper_; }
  const SpectralSet& set() const;  // requires is_exact()

  bool operator==(const SpectrumAnswer& o) const {
    return exact_ == o.exact_ && lower_ == o.lower_ && upper_ == o.upper_;
  }

  std::string to_string() const;

 private:
  SpectrumAnswer(bool exact, SpectralSet lo, SpectralSet up)
      : exact_(exact), lower_(std::move(lo)), upper_(std::move(up)) {}
  bool exact_ = true;
  SpectralSet lower_, upper_;
};

struct FineSpectra {
  SpectrumAnswer spectrum = SpectrumAnswer::exact(SpectralSet::empty());
  SpectrumAnswer point = SpectrumAnswer::exact(SpectralSet::empty());
  SpectrumAnswer residual = SpectrumAnswer::exact(SpectralSet::empty());
  SpectrumAnswer continuous = SpectrumAnswer::exact(SpectralSet::empty());
  ZeroLocation zero_location = ZeroLocation::Continuous;
  std::vector<std::string> provenance;  // stable rule identifiers, e.g. "Prop9a"

  bool all_exact() const {
    return spectrum.is_exact() && point.is_exact() && residual.is_exact() &&
           continuous.is_exact();
  }
};

// Which part of the spectrum contains 0: point when p_x < 2 or p_x = 2
// attained, residual when q_x > 2 or q_x = 2 attained, continuous otherwise.
// The three conditions are mutually exclusive for valid profiles. Separable
// profiles only.
ZeroLocation zero_location(const IndexProfile& profile);

// Exact identification of the point spectrum from (p_x, attainment).
SpectrumAnswer point_spectrum(const IndexProfile& profile);

// Exact identification of the residual spectrum from (q_x, attainment);
// separable profiles only.
SpectrumAnswer residual_spectrum(const IndexProfile& profile);

// Guaranteed sandwich for the full spectrum: the lower set collects [-1,1]
// with the closures of the point and residual parts; the upper set is the
// larger of the two Boyd-index regions, improved to R(p_x) when the
// interpolation flag applies with p_x = q_x and the matching attainment.
std::pair<SpectralSet, SpectralSet> spectrum_bounds(const IndexProfile& profile);

// Full fine-spectra classification of a separable profile. All parts are
// exact whenever the spectrum sandwich closes (equal Boyd indices, the
// interpolation cases, and every Lorentz/Lebesgue profile); otherwise the
// spectrum and continuous part carry bounds.
FineSpectra classify(const IndexProfile& profile);

// Lorentz space classification; r = infinity invokes the special treatment
// of the non-separable weak spaces (exact spectrum and point part, bounded
// residual/continuous split).
FineSpectra classify_lorentz(double p, double r);

// Residual spectrum of the profile matches the point spectrum of the
// associate profile whenever the point spectrum is empty (vacuously true
// otherwise).
bool duality_check(const IndexProfile& profile);

// Classification of a concrete space. Unknown attainment flags are
// enumerated; each consistent assignment yields one case, and the merged
// answer bounds every case.
struct SpaceClassification {
  struct Case {
    IndexProfile profile;
    FineSpectra result;
  };
  std::vector<Case> cases;
  SpectrumAnswer spectrum = SpectrumAnswer::exact(SpectralSet::empty());
  SpectrumAnswer point = SpectrumAnswer::exact(SpectralSet::empty());
  SpectrumAnswer residual = SpectrumAnswer::exact(SpectralSet::empty());
  SpectrumAnswer continuous = SpectrumAnswer::exact(SpectralSet::empty());
  std::optional<ZeroLocation> zero_location;  // unset when cases disagree

  bool single_case() const { return cases.size() == 1; }
  bool all_exact() const;
};

SpaceClassification classify_space(const SpaceSpec& spec);

// Fixed-seed sampling utilities shared by the construction-time checks and
// the test suites.
std::vector<Complex> spectral_sample_points(size_t count, unsigned seed);

}  // namespace fht
