#include "fht/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fht/region.hpp"

namespace fht {

const char* to_string(ZeroLocation z) {
  switch (z) {
    case ZeroLocation::Point: return "point";
    case ZeroLocation::Residual: return "residual";
    case ZeroLocation::Continuous: return "continuous";
  }
  return "?";
}

std::vector<Complex> spectral_sample_points(size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.5, 2.5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> pts;
  pts.reserve(count + 8);
  // Deterministic specials exercising endpoints, the segment and the axes.
  pts.insert(pts.end(), {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(-1.0, 0.0),
                         Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(0.0, 1.0),
                         Complex(0.0, -0.3), Complex(2.0, 0.0)});
  for (size_t i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0:
      case 1:
        pts.emplace_back(box(rng), box(rng));
        break;
      case 2:
        pts.emplace_back(unit(rng), 0.0);  // on the segment
        break;
      default:
        pts.emplace_back(0.0, box(rng));  // imaginary axis
        break;
    }
  }
  return pts;
}

SpectrumAnswer SpectrumAnswer::exact(SpectralSet set) {
  SpectralSet copy = set;
  return SpectrumAnswer(true, std::move(set), std::move(copy));
}

SpectrumAnswer SpectrumAnswer::bounds(SpectralSet lower, SpectralSet upper) {
  if (lower == upper) return exact(std::move(lower));
  for (const Complex& z : spectral_sample_points(10000, 0x5eedu)) {
    if (lower.contains(z) && !upper.contains(z))
      throw std::logic_error("SpectrumAnswer: lower bound not inside upper bound at " +
                             format_complex(z));
  }
  return SpectrumAnswer(false, std::move(lower), std::move(upper));
}

const SpectralSet& SpectrumAnswer::set() const {
  if (!exact_) throw std::logic_error("SpectrumAnswer: bounds carry no exact set");
  return lower_;
}

std::string SpectrumAnswer::to_string() const {
  if (exact_) return lower_.to_string();
  return "between " + lower_.to_string() + " and " + upper_.to_string();
}

// ---------------------------------------------------------------------------

namespace {

void require_separable(const IndexProfile& pr, const char* who) {
  if (!pr.separable)
    throw UnsupportedProfileError(
        std::string(who) +
        ": non-separable profiles are supported only as lorentz:<p>,inf");
}

bool point_branch(const IndexProfile& pr) {
  return pr.p_x < 2.0 || (pr.p_x == 2.0 && pr.p_attained);
}

bool residual_branch(const IndexProfile& pr) {
  return pr.q_x > 2.0 || (pr.q_x == 2.0 && pr.q_attained);
}

double boyd_deviation(double boyd) { return std::abs(0.5 - boyd); }

}  // namespace

ZeroLocation zero_location(const IndexProfile& pr) {
  require_valid(pr);
  require_separable(pr, "zero_location");
  if (point_branch(pr)) return ZeroLocation::Point;
  if (residual_branch(pr)) return ZeroLocation::Residual;
  return ZeroLocation::Continuous;
}

SpectrumAnswer point_spectrum(const IndexProfile& pr) {
  require_valid(pr);
  if (pr.p_x > 2.0 || (pr.p_x == 2.0 && !pr.p_attained))
    return SpectrumAnswer::exact(SpectralSet::empty());
  if (pr.p_attained)
    return SpectrumAnswer::exact(SpectralSet::region_minus_endpoints(pr.p_x));
  return SpectrumAnswer::exact(SpectralSet::region_interior(pr.p_x));
}

SpectrumAnswer residual_spectrum(const IndexProfile& pr) {
  require_valid(pr);
  require_separable(pr, "residual_spectrum");
  if (!residual_branch(pr)) return SpectrumAnswer::exact(SpectralSet::empty());
  if (pr.q_attained)
    return SpectrumAnswer::exact(SpectralSet::region_minus_endpoints(pr.q_x));
  return SpectrumAnswer::exact(SpectralSet::region_interior(pr.q_x));
}

std::pair<SpectralSet, SpectralSet> spectrum_bounds(const IndexProfile& pr) {
  require_valid(pr);
  require_separable(pr, "spectrum_bounds");

  const SpectralSet pt = point_spectrum(pr).set();
  const SpectralSet res = residual_spectrum(pr).set();
  SpectralSet lower = SpectralSet::union_of(
      {SpectralSet::closed_unit_interval(), pt.closure(), res.closure()});

  const double m = boyd_deviation(pr.boyd_lower) >= boyd_deviation(pr.boyd_upper)
                       ? 1.0 / pr.boyd_lower
                       : 1.0 / pr.boyd_upper;
  SpectralSet upper = SpectralSet::region_closed(m);
  if (pr.interp_between_l2_and_lqx && pr.p_x == pr.q_x &&
      ((pr.p_x < 2.0 && pr.q_attained) || (pr.p_x > 2.0 && pr.p_attained))) {
    upper = SpectralSet::region_closed(pr.p_x);
  }
  return {std::move(lower), std::move(upper)};
}

namespace {

// Rule identifiers for the audit trail.
const char* point_rule(const IndexProfile& pr) {
  if (pr.p_x > 2.0 || (pr.p_x == 2.0 && !pr.p_attained)) return "Prop2a";
  return pr.p_attained ? "Prop2b" : "Prop2c";
}

const char* zero_rule(ZeroLocation z) {
  switch (z) {
    case ZeroLocation::Point: return "Prop7a";
    case ZeroLocation::Residual: return "Prop7b";
    case ZeroLocation::Continuous: return "Prop7c";
  }
  return "?";
}

const char* residual_rule(const IndexProfile& pr, ZeroLocation z) {
  if (z == ZeroLocation::Point) return pr.p_attained ? "Prop8b" : "Prop8a";
  if (z == ZeroLocation::Continuous) return "Prop10";
  return pr.q_attained ? "Prop9b" : "Prop9a";
}

std::optional<std::string> equal_boyd_rule(const IndexProfile& pr) {
  if (pr.boyd_lower != pr.boyd_upper) return std::nullopt;
  if (pr.p_x < 2.0) return pr.p_attained ? "Thm4a2" : "Thm4a1";
  if (pr.p_x > 2.0) return pr.q_attained ? "Thm4b2" : "Thm4b1";
  if (pr.p_attained) return "Thm4c1";
  if (pr.q_attained) return "Thm4c2";
  return "Thm4c3";
}

// Consistency checks on an assembled answer, sampled with a fixed seed.
void check_fine_spectra(const FineSpectra& fs) {
  const auto in_zero_part = [&](const SpectrumAnswer& a) {
    return a.is_exact() ? a.set().contains(0.0) : a.lower().contains(0.0);
  };
  const SpectrumAnswer* named = nullptr;
  switch (fs.zero_location) {
    case ZeroLocation::Point: named = &fs.point; break;
    case ZeroLocation::Residual: named = &fs.residual; break;
    case ZeroLocation::Continuous: named = &fs.continuous; break;
  }
  if (!in_zero_part(*named))
    throw std::logic_error("FineSpectra: zero missing from its named part");

  for (Complex pm : {Complex(1.0, 0.0), Complex(-1.0, 0.0)}) {
    if (fs.point.is_exact() && fs.point.set().contains(pm))
      throw std::logic_error("FineSpectra: endpoint in point spectrum");
  }

  if (!fs.all_exact()) return;
  for (const Complex& z : spectral_sample_points(2000, 0xfe11u)) {
    const bool in_spec = fs.spectrum.set().contains(z);
    const int parts = int(fs.point.set().contains(z)) +
                      int(fs.residual.set().contains(z)) +
                      int(fs.continuous.set().contains(z));
    if (parts != (in_spec ? 1 : 0))
      throw std::logic_error("FineSpectra: parts fail to partition the spectrum at " +
                             format_complex(z));
  }
}

}  // namespace

FineSpectra classify(const IndexProfile& pr) {
  require_valid(pr);
  require_separable(pr, "classify");

  FineSpectra fs;
  fs.zero_location = zero_location(pr);
  fs.point = point_spectrum(pr);
  fs.residual = residual_spectrum(pr);
  fs.provenance.push_back(zero_rule(fs.zero_location));
  fs.provenance.push_back(point_rule(pr));
  fs.provenance.push_back(residual_rule(pr, fs.zero_location));

  auto [lower, upper] = spectrum_bounds(pr);
  fs.provenance.push_back("Cor2");
  const bool interp_applies =
      pr.interp_between_l2_and_lqx && pr.p_x == pr.q_x &&
      ((pr.p_x < 2.0 && pr.q_attained) || (pr.p_x > 2.0 && pr.p_attained));
  if (interp_applies)
    fs.provenance.push_back(pr.p_x < 2.0 ? "Prop12" : "Prop13");
  else
    fs.provenance.push_back("Prop11");

  const SpectralSet taken =
      SpectralSet::union_of({fs.point.set(), fs.residual.set()});
  if (lower == upper) {
    fs.spectrum = SpectrumAnswer::exact(lower);
    fs.continuous =
        SpectrumAnswer::exact(SpectralSet::difference(lower, taken));
  } else {
    fs.spectrum = SpectrumAnswer::bounds(lower, upper);
    // The continuous part certainly holds +-1 and whatever the certified
    // spectrum leaves after the exact point/residual parts.
    SpectralSet c_lower = SpectralSet::union_of(
        {SpectralSet::plus_minus_one(), SpectralSet::difference(lower, taken)});
    SpectralSet c_upper = SpectralSet::difference(upper, taken);
    fs.continuous = SpectrumAnswer::bounds(std::move(c_lower), std::move(c_upper));
  }
  fs.provenance.push_back("Cor3");
  if (auto rule = equal_boyd_rule(pr)) fs.provenance.push_back(*rule);
  if (interp_applies) fs.provenance.push_back(pr.p_x < 2.0 ? "Thm5" : "Thm6");

  check_fine_spectra(fs);
  return fs;
}

FineSpectra classify_lorentz(double p, double r) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw DomainError("classify_lorentz: requires p in (1,inf)");
  if (!std::isinf(r)) {
    if (!(r >= 1.0)) throw DomainError("classify_lorentz: requires r >= 1 or inf");
    FineSpectra fs = classify(profile_of(SpaceSpec::lorentz(p, r)).profile);
    const char* row = p < 2.0 ? "Thm3a"
                      : p > 2.0 ? (r == 1.0 ? "Thm3c" : "Thm3b")
                                : (r == 1.0 ? "Thm3d" : "Thm3e");
    fs.provenance.push_back(row);
    if (!fs.all_exact())
      throw std::logic_error("classify_lorentz: expected exact parts for r < inf");
    return fs;
  }

  // Weak space L^{p,inf}: exact spectrum and point part; the residual /
  // continuous split at the boundary is only bounded.
  FineSpectra fs;
  fs.provenance = {"Rem5"};
  fs.spectrum = SpectrumAnswer::exact(SpectralSet::region_closed(p));
  if (p < 2.0) {
    fs.point = SpectrumAnswer::exact(SpectralSet::region_minus_endpoints(p));
    fs.residual = SpectrumAnswer::bounds(SpectralSet::empty(),
                                         SpectralSet::plus_minus_one());
    fs.continuous = SpectrumAnswer::bounds(SpectralSet::empty(),
                                           SpectralSet::plus_minus_one());
    fs.zero_location = ZeroLocation::Point;
    fs.provenance.push_back("Prop2b");
  } else if (p == 2.0) {
    fs.point = SpectrumAnswer::exact(SpectralSet::open_unit_interval());
    fs.residual = SpectrumAnswer::bounds(SpectralSet::empty(),
                                         SpectralSet::plus_minus_one());
    fs.continuous = SpectrumAnswer::bounds(SpectralSet::empty(),
                                           SpectralSet::plus_minus_one());
    fs.zero_location = ZeroLocation::Point;
    fs.provenance.push_back("Prop2b");
  } else {
    fs.point = SpectrumAnswer::exact(SpectralSet::empty());
    fs.residual = SpectrumAnswer::bounds(SpectralSet::region_interior(p),
                                         SpectralSet::region_closed(p));
    fs.continuous = SpectrumAnswer::bounds(SpectralSet::empty(),
                                           SpectralSet::region_boundary(p));
    fs.zero_location = ZeroLocation::Residual;
    fs.provenance.push_back("Prop2a");
  }
  check_fine_spectra(fs);
  return fs;
}

bool duality_check(const IndexProfile& pr) {
  require_valid(pr);
  require_separable(pr, "duality_check");
  const SpectrumAnswer pt = point_spectrum(pr);
  if (!pt.set().is_empty()) return true;  // premise of the dual identity fails
  const SpectrumAnswer res = residual_spectrum(pr);
  const SpectrumAnswer pt_assoc = point_spectrum(associate_profile(pr));
  return res.set() == pt_assoc.set();
}

// ---------------------------------------------------------------------------

namespace {

// Least/greatest of a family of symbolically comparable sets.
SpectralSet inclusion_min(const std::vector<SpectralSet>& sets) {
  SpectralSet best = sets.front();
  for (const auto& s : sets) {
    auto r = SpectralSet::symbolic_subset(s, best);
    if (r.has_value() && *r) best = s;
  }
  for (const auto& s : sets) {
    auto r = SpectralSet::symbolic_subset(best, s);
    if (!r.has_value() || !*r)
      throw std::logic_error("inclusion_min: incomparable case outcomes");
  }
  return best;
}

SpectralSet inclusion_max(const std::vector<SpectralSet>& sets) {
  SpectralSet best = sets.front();
  for (const auto& s : sets) {
    auto r = SpectralSet::symbolic_subset(best, s);
    if (r.has_value() && *r) best = s;
  }
  for (const auto& s : sets) {
    auto r = SpectralSet::symbolic_subset(s, best);
    if (!r.has_value() || !*r)
      throw std::logic_error("inclusion_max: incomparable case outcomes");
  }
  return best;
}

SpectrumAnswer merge_answers(const std::vector<SpectrumAnswer>& answers) {
  bool all_same = true;
  for (const auto& a : answers) all_same = all_same && a == answers.front();
  if (all_same) return answers.front();
  std::vector<SpectralSet> lowers, uppers;
  for (const auto& a : answers) {
    lowers.push_back(a.lower());
    uppers.push_back(a.upper());
  }
  return SpectrumAnswer::bounds(inclusion_min(lowers), inclusion_max(uppers));
}

}  // namespace

bool SpaceClassification::all_exact() const {
  return spectrum.is_exact() && point.is_exact() && residual.is_exact() &&
         continuous.is_exact();
}

SpaceClassification classify_space(const SpaceSpec& spec) {
  if (spec.kind == SpaceSpec::Kind::Lorentz && std::isinf(spec.r)) {
    SpaceClassification out;
    FineSpectra fs = classify_lorentz(spec.p, spec.r);
    out.cases.push_back({profile_of(spec).profile, fs});
    out.spectrum = fs.spectrum;
    out.point = fs.point;
    out.residual = fs.residual;
    out.continuous = fs.continuous;
    out.zero_location = fs.zero_location;
    return out;
  }

  const SpaceProfile sp = profile_of(spec);
  auto options = [](Attainment a) -> std::vector<bool> {
    switch (a) {
      case Attainment::Attained: return {true};
      case Attainment::NotAttained: return {false};
      case Attainment::Unknown: return {false, true};
    }
    return {false};
  };

  SpaceClassification out;
  for (bool pa : options(sp.p_attainment)) {
    for (bool qa : options(sp.q_attainment)) {
      IndexProfile pr = sp.profile;
      pr.p_attained = pa;
      pr.q_attained = qa;
      if (!validate_profile(pr).empty()) continue;  // e.g. both attained at p_x = q_x
      if (spec.kind == SpaceSpec::Kind::Lorentz)
        out.cases.push_back({pr, classify_lorentz(spec.p, spec.r)});
      else
        out.cases.push_back({pr, classify(pr)});
    }
  }
  if (out.cases.empty())
    throw UnsupportedProfileError("classify_space: no admissible attainment assignment");

  std::vector<SpectrumAnswer> spectra, points, residuals, continua;
  for (const auto& c : out.cases) {
    spectra.push_back(c.result.spectrum);
    points.push_back(c.result.point);
    residuals.push_back(c.result.residual);
    continua.push_back(c.result.continuous);
  }
  out.spectrum = merge_answers(spectra);
  out.point = merge_answers(points);
  out.residual = merge_answers(residuals);
  out.continuous = merge_answers(continua);

  out.zero_location = out.cases.front().result.zero_location;
  for (const auto& c : out.cases)
    if (c.result.zero_location != *out.zero_location) {
      out.zero_location.reset();
      break;
    }
  return out;
}

}  // namespace fht
