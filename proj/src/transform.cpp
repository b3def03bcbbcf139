#include "fht/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fht/eigen.hpp"
#include "fht/region.hpp"

namespace fht {

namespace {

constexpr double kPi = std::numbers::pi;

Complex combine(const IntegrationResult& ia, const IntegrationResult& ib,
                Complex subtraction_term, double tol) {
  const Complex pv = ia.value + ib.value + subtraction_term;
  const Complex result = pv * Complex(0.0, -1.0 / kPi);  // 1/(pi*i) factor
  const double bound = (ia.error_bound + ib.error_bound) / kPi;
  if (!ia.converged || !ib.converged || !is_finite(result))
    throw ConvergenceError("finite_hilbert: tolerance " + std::to_string(tol) +
                               " not reached at max depth",
                           result, bound);
  return result;
}

}  // namespace

Complex finite_hilbert(const TransformInput& f, double t, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!f.in_x) throw DomainError("finite_hilbert: missing integrand");
  if (!std::isfinite(t) || std::abs(t) > 1.0 - cfg.endpoint_margin)
    throw DomainError("finite_hilbert: requires |t| <= 1 - endpoint_margin");

  const Complex ft = f.in_x(t);
  require_finite(ft, "finite_hilbert");
  const Complex log_term = ft * std::log((1.0 - t) / (1.0 + t));
  const double half_tol = 0.5 * cfg.tol;

  if (cfg.mode == QuadMode::SmoothSubtraction) {
    auto g = [&](double x) -> Complex {
      if (x == t) return Complex(0.0, 0.0);  // removable point, measure zero
      return (f.in_x(x) - ft) / (x - t);
    };
    const auto left = integrate_adaptive(g, -1.0, t, half_tol, cfg.max_depth);
    const auto right = integrate_adaptive(g, t, 1.0, half_tol, cfg.max_depth);
    return combine(left, right, log_term, cfg.tol);
  }

  // x = cos(theta), with cos(theta) - cos(phi) in product form and the
  // integrand evaluated through the theta form when one is available.
  const double phi = std::acos(t);
  auto g = [&](double theta) -> Complex {
    if (theta == phi) return Complex(0.0, 0.0);
    const double denom =
        -2.0 * std::sin(0.5 * (theta + phi)) * std::sin(0.5 * (theta - phi));
    const Complex fv = f.in_theta ? f.in_theta(theta) : f.in_x(std::cos(theta));
    return (fv - ft) * std::sin(theta) / denom;
  };
  const auto left = integrate_adaptive(g, 0.0, phi, half_tol, cfg.max_depth);
  const auto right = integrate_adaptive(g, phi, kPi, half_tol, cfg.max_depth);
  return combine(left, right, log_term, cfg.tol);
}

Complex finite_hilbert(const std::function<Complex(double)>& f, double t,
                       const QuadratureConfig& cfg) {
  return finite_hilbert(TransformInput(f), t, cfg);
}

ResidualReport eigen_residual(Complex lambda, const std::vector<double>& grid,
                              const QuadratureConfig& cfg) {
  cfg.validate();
  if (!in_cut_plane(lambda))
    throw DomainError("eigen_residual: lambda outside the cut plane");
  const EigenFunction ef(lambda);

  QuadratureConfig run = cfg;
  run.mode = QuadMode::ChebyshevSubstitution;
  const TransformInput input([ef](double x) { return ef(x); },
                             [ef](double theta) { return ef.value_theta(theta); });

  ResidualReport report;
  report.config = run;
  report.grid = grid;
  report.residuals.reserve(grid.size());
  for (double t : grid) {
    const Complex transformed = finite_hilbert(input, t, run);
    const double r = std::abs(transformed - lambda * ef(t));
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

Complex pseudo_inverse_apply(Complex lambda, const TransformInput& f, double x,
                             const QuadratureConfig& cfg) {
  if (!in_cut_plane(lambda))
    throw DomainError("pseudo_inverse_apply: lambda outside the cut plane");
  const EigenFunction ef(lambda);
  TransformInput ratio([f, ef](double u) { return f.in_x(u) / ef(u); });
  if (f.in_theta) {
    // (f / xi)(cos(theta)) = f_theta(theta) / xi_theta(theta)
    ratio.in_theta = [f, ef](double theta) {
      return f.in_theta(theta) / ef.value_theta(theta);
    };
  }
  const Complex transformed = finite_hilbert(ratio, x, cfg);
  return (lambda * f.in_x(x) + ef(x) * transformed) / (lambda * lambda - 1.0);
}

Complex pseudo_inverse_apply(Complex lambda, const std::function<Complex(double)>& f,
                             double x, const QuadratureConfig& cfg) {
  return pseudo_inverse_apply(lambda, TransformInput(f), x, cfg);
}

std::pair<double, double> widom_noninversion_check(const TransformInput& f,
                                                   const std::vector<double>& grid,
                                                   const QuadratureConfig& cfg) {
  double min_plus = std::numeric_limits<double>::infinity();
  double min_minus = std::numeric_limits<double>::infinity();
  for (double t : grid) {
    const Complex tf = finite_hilbert(f, t, cfg);
    min_plus = std::min(min_plus, std::abs(tf + f.in_x(t)));
    min_minus = std::min(min_minus, std::abs(tf - f.in_x(t)));
  }
  return {min_plus, min_minus};
}

std::pair<double, double> widom_noninversion_check(const SampledFunction& f,
                                                   const QuadratureConfig& cfg) {
  f.validate();
  // Linear interpolant, edge values held constant outside the grid range.
  auto interp = [f](double x) -> Complex {
    if (x <= f.grid.front()) return f.values.front();
    if (x >= f.grid.back()) return f.values.back();
    const auto it = std::upper_bound(f.grid.begin(), f.grid.end(), x);
    const size_t hi = static_cast<size_t>(it - f.grid.begin());
    const double x0 = f.grid[hi - 1], x1 = f.grid[hi];
    const double w = (x - x0) / (x1 - x0);
    return (1.0 - w) * f.values[hi - 1] + w * f.values[hi];
  };
  return widom_noninversion_check(TransformInput(interp), f.grid, cfg);
}

std::vector<double> interior_grid(int n, double span) {
  if (n < 1 || !(span > 0.0 && span < 1.0))
    throw DomainError("interior_grid: requires n >= 1 and span in (0,1)");
  std::vector<double> g;
  g.reserve(static_cast<size_t>(n));
  if (n == 1) {
    g.push_back(0.0);
    return g;
  }
  for (int j = 0; j < n; ++j) g.push_back(-span + 2.0 * span * j / (n - 1));
  return g;
}

}  // namespace fht
