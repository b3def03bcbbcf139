#include "fht/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fht {

std::vector<std::string> validate_profile(const IndexProfile& pr) {
  std::vector<std::string> v;
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(pr.p_x) || pr.p_x <= 1.0) v.push_back("p_x > 1");
  if (!finite(pr.q_x) || pr.q_x <= 1.0) v.push_back("q_x > 1");
  if (!finite(pr.boyd_lower) || pr.boyd_lower <= 0.0) v.push_back("0 < boyd_lower");
  if (!finite(pr.boyd_upper) || pr.boyd_upper >= 1.0) v.push_back("boyd_upper < 1");
  if (!v.empty()) return v;  // remaining checks assume finite ranges

  if (pr.boyd_lower > pr.boyd_upper) v.push_back("boyd_lower <= boyd_upper");
  if (pr.q_x > pr.p_x) v.push_back("q_x <= p_x");
  if (pr.boyd_lower > 1.0 / pr.p_x) v.push_back("boyd_lower <= 1/p_x");
  if (1.0 / pr.q_x > pr.boyd_upper) v.push_back("1/q_x <= boyd_upper");
  if (pr.p_x == pr.q_x && pr.p_attained && pr.q_attained)
    v.push_back("not (p_x == q_x with both attained)");
  return v;
}

void require_valid(const IndexProfile& pr) {
  auto v = validate_profile(pr);
  if (v.empty()) return;
  std::string msg = "invalid index profile:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw ProfileError(msg, std::move(v));
}

IndexProfile associate_profile(const IndexProfile& pr) {
  require_valid(pr);
  IndexProfile out;
  out.p_x = conjugate_exponent(pr.q_x);
  out.p_attained = pr.q_attained;
  out.q_x = conjugate_exponent(pr.p_x);
  out.q_attained = pr.p_attained;
  out.boyd_lower = 1.0 - pr.boyd_upper;
  out.boyd_upper = 1.0 - pr.boyd_lower;
  out.separable = pr.separable;
  out.interp_between_l2_and_lqx = pr.interp_between_l2_and_lqx;
  require_valid(out);  // inconsistent input surfaces here
  return out;
}

// ---------------------------------------------------------------------------

SpaceSpec SpaceSpec::lp(double p) {
  SpaceSpec s;
  s.kind = Kind::Lp;
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::lorentz(double p, double r) {
  SpaceSpec s;
  s.kind = Kind::Lorentz;
  s.p = p;
  s.r = r;
  return s;
}

SpaceSpec SpaceSpec::talenti_orlicz(double p, double sh) {
  SpaceSpec s;
  s.kind = Kind::TalentiOrlicz;
  s.p = p;
  s.s = sh;
  return s;
}

SpaceSpec SpaceSpec::lambda_w(double p, double a) {
  SpaceSpec s;
  s.kind = Kind::LambdaW;
  s.p = p;
  s.a = a;
  return s;
}

SpaceSpec SpaceSpec::small_lebesgue(double p) {
  SpaceSpec s;
  s.kind = Kind::SmallLebesgue;
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::abstract_space(IndexProfile profile) {
  SpaceSpec s;
  s.kind = Kind::Abstract;
  s.abstract = profile;
  return s;
}

namespace {

double parse_number(const std::string& tok, const char* what) {
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw DomainError(std::string("space spec: bad ") + what + " '" + tok + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

SpaceSpec SpaceSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw DomainError("space spec: expected '<family>:<params>', got '" + text + "'");
  const std::string family = text.substr(0, colon);
  const auto args = split(text.substr(colon + 1), ',');

  auto expect_args = [&](size_t n) {
    if (args.size() != n)
      throw DomainError("space spec: '" + family + "' takes " + std::to_string(n) +
                        " parameter(s)");
  };

  if (family == "lp") {
    expect_args(1);
    return lp(parse_number(args[0], "p"));
  }
  if (family == "lorentz") {
    expect_args(2);
    return lorentz(parse_number(args[0], "p"), parse_number(args[1], "r"));
  }
  if (family == "talenti") {
    expect_args(2);
    return talenti_orlicz(parse_number(args[0], "p"), parse_number(args[1], "s"));
  }
  if (family == "lambdaw") {
    expect_args(2);
    return lambda_w(parse_number(args[0], "p"), parse_number(args[1], "a"));
  }
  if (family == "smalllebesgue") {
    expect_args(1);
    return small_lebesgue(parse_number(args[0], "p"));
  }
  if (family == "abstract") {
    if (args.size() != 7 && args.size() != 8)
      throw DomainError("space spec: abstract takes 7 or 8 parameters");
    auto attain = [&](const std::string& tok, char which) {
      const std::string yes = std::string(1, which) + "a";
      const std::string no = std::string(1, which) + "n";
      if (tok == yes) return true;
      if (tok == no) return false;
      throw DomainError("space spec: expected '" + yes + "' or '" + no + "', got '" +
                        tok + "'");
    };
    IndexProfile pr;
    pr.p_x = parse_number(args[0], "p_x");
    pr.p_attained = attain(args[1], 'p');
    pr.q_x = parse_number(args[2], "q_x");
    pr.q_attained = attain(args[3], 'q');
    pr.boyd_lower = parse_number(args[4], "boyd_lower");
    pr.boyd_upper = parse_number(args[5], "boyd_upper");
    if (args[6] == "sep") pr.separable = true;
    else if (args[6] == "nonsep") pr.separable = false;
    else throw DomainError("space spec: expected 'sep' or 'nonsep', got '" + args[6] + "'");
    if (args.size() == 8) {
      if (args[7] != "interp")
        throw DomainError("space spec: trailing token must be 'interp'");
      pr.interp_between_l2_and_lqx = true;
    }
    require_valid(pr);
    return abstract_space(pr);
  }
  throw DomainError("space spec: unknown family '" + family + "'");
}

std::string SpaceSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Lp:
      os << "lp:" << p;
      break;
    case Kind::Lorentz:
      os << "lorentz:" << p << ",";
      if (std::isinf(r)) os << "inf";
      else os << r;
      break;
    case Kind::TalentiOrlicz:
      os << "talenti:" << p << "," << s;
      break;
    case Kind::LambdaW:
      os << "lambdaw:" << p << "," << a;
      break;
    case Kind::SmallLebesgue:
      os << "smalllebesgue:" << p;
      break;
    case Kind::Abstract:
      os << "abstract:" << abstract.p_x << "," << (abstract.p_attained ? "pa" : "pn")
         << "," << abstract.q_x << "," << (abstract.q_attained ? "qa" : "qn") << ","
         << abstract.boyd_lower << "," << abstract.boyd_upper << ","
         << (abstract.separable ? "sep" : "nonsep");
      if (abstract.interp_between_l2_and_lqx) os << ",interp";
      break;
  }
  return os.str();
}

SpaceProfile profile_of(const SpaceSpec& spec) {
  SpaceProfile out;
  IndexProfile& pr = out.profile;
  switch (spec.kind) {
    case SpaceSpec::Kind::Lp: {
      if (!(spec.p > 1.0) || !std::isfinite(spec.p))
        throw DomainError("lp: requires p in (1,inf)");
      // Under the defining embeddings L^p attains neither index.
      pr.p_x = pr.q_x = spec.p;
      pr.p_attained = pr.q_attained = false;
      pr.boyd_lower = pr.boyd_upper = 1.0 / spec.p;
      pr.separable = true;
      out.p_attainment = Attainment::NotAttained;
      out.q_attainment = Attainment::NotAttained;
      break;
    }
    case SpaceSpec::Kind::Lorentz: {
      if (!(spec.p > 1.0) || !std::isfinite(spec.p))
        throw DomainError("lorentz: requires p in (1,inf)");
      const bool weak = std::isinf(spec.r);
      if (!weak && !(spec.r >= 1.0))
        throw DomainError("lorentz: requires r >= 1 or inf");
      pr.p_x = pr.q_x = spec.p;
      pr.p_attained = weak;           // L^{p,inf} contains itself
      pr.q_attained = spec.r == 1.0;  // L^{p,1} embeds in itself
      pr.boyd_lower = pr.boyd_upper = 1.0 / spec.p;
      pr.separable = !weak;
      out.p_attainment = pr.p_attained ? Attainment::Attained : Attainment::NotAttained;
      out.q_attainment = pr.q_attained ? Attainment::Attained : Attainment::NotAttained;
      break;
    }
    case SpaceSpec::Kind::TalentiOrlicz: {
      if (!(spec.p > 1.0) || !std::isfinite(spec.p))
        throw DomainError("talenti: requires p in (1,inf)");
      if (!(spec.s > 0.0)) throw DomainError("talenti: requires s > 0");
      // Only the Boyd indices are certified (both equal 1/p).
      pr.p_x = pr.q_x = spec.p;
      pr.p_attained = pr.q_attained = false;
      pr.boyd_lower = pr.boyd_upper = 1.0 / spec.p;
      pr.separable = true;
      out.p_attainment = Attainment::Unknown;
      out.q_attainment = Attainment::Unknown;
      break;
    }
    case SpaceSpec::Kind::SmallLebesgue: {
      if (!(spec.p > 1.0) || !std::isfinite(spec.p))
        throw DomainError("smalllebesgue: requires p in (1,inf)");
      pr.p_x = pr.q_x = spec.p;
      pr.p_attained = pr.q_attained = false;
      pr.boyd_lower = pr.boyd_upper = 1.0 / spec.p;
      pr.separable = true;
      out.p_attainment = Attainment::Unknown;
      out.q_attainment = Attainment::Unknown;
      break;
    }
    case SpaceSpec::Kind::LambdaW: {
      if (!(spec.p >= 1.0) || !std::isfinite(spec.p))
        throw DomainError("lambdaw: requires p >= 1");
      if (!(spec.a > 0.0 && spec.a < 1.0))
        throw DomainError("lambdaw: requires a in (0,1)");
      pr.p_x = pr.q_x = 1.0 / spec.a;
      pr.p_attained = pr.q_attained = false;
      pr.boyd_lower = pr.boyd_upper = spec.a;
      pr.separable = true;
      out.p_attainment = Attainment::Unknown;
      out.q_attainment = Attainment::Unknown;
      break;
    }
    case SpaceSpec::Kind::Abstract: {
      pr = spec.abstract;
      out.p_attainment = pr.p_attained ? Attainment::Attained : Attainment::NotAttained;
      out.q_attainment = pr.q_attained ? Attainment::Attained : Attainment::NotAttained;
      break;
    }
  }
  require_valid(pr);
  return out;
}

// ---------------------------------------------------------------------------

SampledFunction SampledFunction::from_function(const std::function<Complex(double)>& f,
                                               int n) {
  if (n < 2) throw DomainError("SampledFunction: requires n >= 2");
  SampledFunction out;
  out.grid.reserve(static_cast<size_t>(n));
  out.values.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double x = -1.0 + (2.0 * j + 1.0) / n;  // midpoint grid
    out.grid.push_back(x);
    out.values.push_back(f(x));
  }
  out.validate();
  return out;
}

void SampledFunction::validate() const {
  if (grid.size() != values.size() || grid.size() < 2)
    throw DomainError("SampledFunction: grid/values must have equal length >= 2");
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || std::abs(grid[i]) >= 1.0)
      throw DomainError("SampledFunction: grid points must lie in (-1,1)");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw DomainError("SampledFunction: grid must be strictly increasing");
    if (!is_finite(values[i]))
      throw DomainError("SampledFunction: non-finite sample value");
  }
}

double RearrangementStep::value(double t) const {
  if (breakpoints.empty() || t < breakpoints.front() || t >= breakpoints.back())
    return 0.0;
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
  const size_t idx = static_cast<size_t>(it - breakpoints.begin());
  return levels[idx - 1];
}

RearrangementStep decreasing_rearrangement(const SampledFunction& f) {
  f.validate();
  const size_t n = f.grid.size();

  // Cell of sample i: between neighboring midpoints, end cells out to -1, 1.
  std::vector<std::pair<double, double>> weighted(n);  // (|value|, measure)
  for (size_t i = 0; i < n; ++i) {
    const double lo = i == 0 ? -1.0 : 0.5 * (f.grid[i - 1] + f.grid[i]);
    const double hi = i + 1 == n ? 1.0 : 0.5 * (f.grid[i] + f.grid[i + 1]);
    weighted[i] = {std::abs(f.values[i]), hi - lo};
  }
  std::sort(weighted.begin(), weighted.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  RearrangementStep out;
  out.breakpoints.push_back(0.0);
  for (const auto& [level, measure] : weighted) {
    if (!out.levels.empty() && out.levels.back() == level) {
      out.breakpoints.back() += measure;  // merge equal levels
    } else {
      out.levels.push_back(level);
      out.breakpoints.push_back(out.breakpoints.back() + measure);
    }
  }
  return out;
}

double lorentz_norm(const RearrangementStep& rearranged, double p, double r) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("lorentz_norm: requires p > 1");
  if (!(r >= 1.0)) throw DomainError("lorentz_norm: requires r >= 1");
  const auto& bp = rearranged.breakpoints;
  const auto& lv = rearranged.levels;
  if (std::isinf(r)) {
    double best = 0.0;
    for (size_t k = 0; k < lv.size(); ++k)
      best = std::max(best, lv[k] * std::pow(bp[k + 1], 1.0 / p));
    return best;
  }
  // Exact integral of (t^{1/p} f*(t))^r dt/t over each constant step.
  double sum = 0.0;
  const double e = r / p;
  for (size_t k = 0; k < lv.size(); ++k)
    sum += std::pow(lv[k], r) * (std::pow(bp[k + 1], e) - std::pow(bp[k], e)) / e;
  return std::pow(sum, 1.0 / r);
}

double lorentz_norm(const SampledFunction& f, double p, double r) {
  return lorentz_norm(decreasing_rearrangement(f), p, r);
}

NormRefinementProbe lorentz_norm_refinement_probe(
    const std::function<Complex(double)>& f, double p, double r,
    const std::vector<int>& grid_sizes) {
  if (grid_sizes.size() < 3)
    throw DomainError("lorentz_norm_refinement_probe: need at least 3 grid sizes");
  NormRefinementProbe out;
  out.grid_sizes = grid_sizes;
  for (int n : grid_sizes)
    out.norms.push_back(lorentz_norm(SampledFunction::from_function(f, n), p, r));

  const size_t m = out.norms.size();
  for (size_t k = 2; k < m; ++k) {
    if (out.norms[k] > 10.0 * out.norms[k - 2]) out.diverging = true;
  }
  // Logarithmic growth never trips the factor test; flag a refinement tail
  // whose increments refuse to contract.
  const double d1 = out.norms[m - 1] - out.norms[m - 2];
  const double d0 = out.norms[m - 2] - out.norms[m - 3];
  if (d0 > 0.0 && d1 > 0.6 * d0 && d1 > 1e-6 * out.norms[m - 1]) out.diverging = true;
  return out;
}

// ---------------------------------------------------------------------------

std::pair<double, double> fundamental_indices(const std::function<double(double)>& phi,
                                              const FundamentalIndexOptions& opts) {
  if (!(opts.t_min > 0.0) || !(opts.t_max > 1.0) || opts.t_min >= 1.0)
    throw DomainError("fundamental_indices: need t_min in (0,1) and t_max > 1");

  // Monotonicity spot check on (0,2].
  double prev = 0.0;
  for (int j = 0; j <= 64; ++j) {
    const double t = 2.0 * std::pow(10.0, -8.0 * (1.0 - j / 64.0));
    const double v = phi(t);
    if (!std::isfinite(v) || v < 0.0)
      throw DomainError("fundamental_indices: phi must be positive and finite");
    if (j > 0 && v < prev * (1.0 - 1e-9))
      throw DomainError("fundamental_indices: phi must be nondecreasing");
    prev = v;
  }

  auto dilation_sup = [&](double t) {
    const double s_hi = std::min(2.0, 1.0 / t);
    const double s_lo = std::min(1e-9, s_hi / 2.0);
    double best = 0.0;
    for (int j = 0; j <= opts.s_samples; ++j) {
      const double s = s_lo * std::pow(s_hi / s_lo, double(j) / opts.s_samples);
      const double denom = phi(s);
      if (denom > 0.0) best = std::max(best, phi(s * t) / denom);
    }
    return best;
  };

  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (int j = 0; j < opts.t_samples; ++j) {
    const double frac = (j + 1.0) / opts.t_samples;
    const double t_small = std::pow(opts.t_min, frac);       // sweeps (t_min, 1)
    const double t_large = std::pow(opts.t_max, frac);       // sweeps (1, t_max]
    const double ms = dilation_sup(t_small);
    const double ml = dilation_sup(t_large);
    if (ms > 0.0) lower = std::max(lower, std::log(ms) / std::log(t_small));
    if (ml > 0.0) upper = std::min(upper, std::log(ml) / std::log(t_large));
  }
  return {lower, upper};
}

}  // namespace fht
