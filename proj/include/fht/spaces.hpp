#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fht/complex_utils.hpp"

namespace fht {

// Index data of a rearrangement invariant space on (-1,1) with non-trivial
// Boyd indices. p_x is the infimum of p with L^{p,inf} inside the space, q_x
// the supremum of q with the space inside L^{q,1}; either bound may or may
// not be attained, and that attainment drives the spectral classification.
struct IndexProfile {
  double p_x = 2.0;
  bool p_attained = false;
  double q_x = 2.0;
  bool q_attained = false;
  double boyd_lower = 0.5;
  double boyd_upper = 0.5;
  bool separable = true;
  // Input assertion that the space interpolates between L^2 and L^{q_x}.
  bool interp_between_l2_and_lqx = false;
};

// Names of the violated constraints; empty iff the profile is admissible.
std::vector<std::string> validate_profile(const IndexProfile& profile);

// Throws ProfileError when validate_profile is non-empty.
void require_valid(const IndexProfile& profile);

// Index data of the associate (Koethe dual) space: p and q swap through the
// conjugate exponent, attainments follow, Boyd indices reflect about 1/2.
// Separability and the interpolation flag are carried through unchanged;
// neither is derivable from index data alone.
IndexProfile associate_profile(const IndexProfile& profile);

double conjugate_exponent(double p);  // also declared in region.hpp

// ---------------------------------------------------------------------------
// Concrete space specifications and the CLI grammar.

enum class Attainment { Attained, NotAttained, Unknown };

struct SpaceSpec {
  enum class Kind { Lp, Lorentz, TalentiOrlicz, LambdaW, SmallLebesgue, Abstract };

  Kind kind = Kind::Lp;
  double p = 2.0;   // primary exponent (Lp, Lorentz, TalentiOrlicz, SmallLebesgue, LambdaW)
  double r = 2.0;   // Lorentz fine index; infinity marks the weak space
  double s = 1.0;   // TalentiOrlicz shape parameter
  double a = 0.5;   // LambdaW weight exponent (both Boyd indices equal a)
  IndexProfile abstract;

  static SpaceSpec lp(double p);
  static SpaceSpec lorentz(double p, double r);
  static SpaceSpec talenti_orlicz(double p, double s);
  static SpaceSpec lambda_w(double p, double a);
  static SpaceSpec small_lebesgue(double p);
  static SpaceSpec abstract_space(IndexProfile profile);

  // Grammar: lp:<p> | lorentz:<p>,<r|inf> | talenti:<p>,<s> | lambdaw:<p>,<a>
  //        | smalllebesgue:<p>
  //        | abstract:<p_x>,<pa|pn>,<q_x>,<qa|qn>,<boyd_lo>,<boyd_hi>,<sep|nonsep>[,interp]
  static SpaceSpec parse(const std::string& text);
  std::string to_string() const;
};

// profile_of output: the index profile plus which attainment flags are
// actually known. Spaces certified only through their Boyd indices leave
// both flags Unknown and the classifier enumerates the possibilities.
struct SpaceProfile {
  IndexProfile profile;
  Attainment p_attainment = Attainment::NotAttained;
  Attainment q_attainment = Attainment::NotAttained;
};

SpaceProfile profile_of(const SpaceSpec& spec);

// ---------------------------------------------------------------------------
// Sampled functions, rearrangements and Lorentz functionals.

struct SampledFunction {
  std::vector<double> grid;      // strictly increasing, inside (-1,1)
  std::vector<Complex> values;   // one per grid point, finite

  static SampledFunction from_function(const std::function<Complex(double)>& f,
                                       int n);  // midpoint-equispaced grid
  void validate() const;
};

// Right-continuous decreasing step function on [0, 2].
struct RearrangementStep {
  std::vector<double> breakpoints;  // size m+1, increasing, starts at 0
  std::vector<double> levels;       // size m, weakly decreasing, >= 0

  double value(double t) const;     // 0 beyond the last breakpoint
  double total_measure() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
};

// Sorts |values| in decreasing order, each sample weighted with the measure
// of its grid cell (midpoint cells, end cells extended to -1 and 1).
RearrangementStep decreasing_rearrangement(const SampledFunction& f);

// Lorentz functional || f ||_{p,r} = ( int (t^{1/p} f*(t))^r dt/t )^{1/r},
// exact on step data; r = infinity gives sup_t t^{1/p} f*(t).
double lorentz_norm(const RearrangementStep& rearranged, double p, double r);
double lorentz_norm(const SampledFunction& f, double p, double r);

// Diagnostic: Lorentz norms across grid refinements, flagged as divergent
// when the norm keeps growing (factor > 10 across two refinements, or
// increments that fail to contract, which catches logarithmic growth).
// Never used in classification.
struct NormRefinementProbe {
  std::vector<int> grid_sizes;
  std::vector<double> norms;
  bool diverging = false;
};

NormRefinementProbe lorentz_norm_refinement_probe(
    const std::function<Complex(double)>& f, double p, double r,
    const std::vector<int>& grid_sizes = {1000, 10000, 100000});

// ---------------------------------------------------------------------------
// Fundamental indices (grid-estimated, not certified).

struct FundamentalIndexOptions {
  double t_min = 1e-6;
  double t_max = 1e6;
  int t_samples = 48;   // per side of t = 1
  int s_samples = 160;
};

// Estimates the lower/upper fundamental indices of a positive nondecreasing
// phi on (0,2] as sup/inf of log M(t)/log t with
// M(t) = sup_{0 < s*t <= 1} phi(s*t)/phi(s) maximized over a log grid.
std::pair<double, double> fundamental_indices(
    const std::function<double(double)>& phi,
    const FundamentalIndexOptions& opts = {});

}  // namespace fht
