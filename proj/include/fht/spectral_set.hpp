#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fht/complex_utils.hpp"

namespace fht {

// Symbolic region with decidable membership. The tag set covers every shape
// the spectral theorems produce: nothing, {+-1}, the open/closed unit
// segment, the lens R_p and its interior/boundary/punctured variants, finite
// unions, and differences (needed to express bound sets such as
// R_m \ int R_q). Sets are normalized at construction: region tags at p = 2
// collapse onto the segment tags, unions are flattened with contained members
// absorbed, and standard differences simplify to single tags, so equality of
// classifier outputs is purely structural. The region parameter compares
// modulo the p <-> p' symmetry of R_p.
class SpectralSet {
 public:
  enum class Kind {
    Empty,
    PlusMinusOne,
    OpenUnitInterval,
    ClosedUnitInterval,
    RegionInterior,
    RegionBoundary,
    RegionClosed,
    RegionMinusEndpoints,
    Union,
    Difference,
  };

  SpectralSet() : kind_(Kind::Empty) {}

  static SpectralSet empty();
  static SpectralSet plus_minus_one();
  static SpectralSet open_unit_interval();
  static SpectralSet closed_unit_interval();
  static SpectralSet region_interior(double p);
  static SpectralSet region_boundary(double p);
  static SpectralSet region_closed(double p);
  static SpectralSet region_minus_endpoints(double p);
  static SpectralSet union_of(std::vector<SpectralSet> parts);
  static SpectralSet difference(SpectralSet minuend, SpectralSet subtrahend);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  // Region parameter; meaningful for the four Region* kinds.
  double parameter() const { return p_; }
  // Union members, or {minuend, subtrahend} for a Difference.
  const std::vector<SpectralSet>& parts() const { return parts_; }

  bool contains(Complex lambda) const;

  // Known containment relations between normalized sets; nullopt when the
  // relation is not decided symbolically.
  static std::optional<bool> symbolic_subset(const SpectralSet& a, const SpectralSet& b);

  // Topological closure (interior/punctured tags promote to closed ones).
  SpectralSet closure() const;

  bool operator==(const SpectralSet& other) const;
  bool operator!=(const SpectralSet& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  explicit SpectralSet(Kind kind, double p = 0.0) : kind_(kind), p_(p) {}

  void normalize();
  static bool same_parameter(double p, double q);

  Kind kind_;
  double p_ = 0.0;
  std::vector<SpectralSet> parts_;
};

}  // namespace fht
