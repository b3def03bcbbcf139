#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fht/quadrature.hpp"
#include "fht/spaces.hpp"

namespace fht {

// Integrand for the transform. `in_x` evaluates f on (-1,1). The optional
// `in_theta` evaluates f(cos(theta)) directly in theta; near the endpoints
// cos(theta) collapses onto +-1 in double precision, so endpoint-singular
// integrands (the 1/w family, eigenfunctions) need the theta form to stay
// accurate under ChebyshevSubstitution.
struct TransformInput {
  std::function<Complex(double)> in_x;
  std::function<Complex(double)> in_theta;  // may be empty

  TransformInput() = default;
  TransformInput(std::function<Complex(double)> fx) : in_x(std::move(fx)) {}
  TransformInput(std::function<Complex(double)> fx, std::function<Complex(double)> ftheta)
      : in_x(std::move(fx)), in_theta(std::move(ftheta)) {}
};

// Finite Hilbert transform (1/(pi*i)) PV int_{-1}^{1} f(x)/(x-t) dx, evaluated
// by singularity subtraction with the closed-form logarithmic term:
//   PV int f/(x-t) = int (f(x)-f(t))/(x-t) dx + f(t) * ln((1-t)/(1+t)).
// ChebyshevSubstitution integrates the subtracted part in theta with
// x = cos(theta), which tames 1/w-type endpoint singularities.
// Throws DomainError outside |t| <= 1 - margin and ConvergenceError (with the
// best estimate and achieved bound) when the tolerance is unreachable.
Complex finite_hilbert(const TransformInput& f, double t, const QuadratureConfig& cfg);
Complex finite_hilbert(const std::function<Complex(double)>& f, double t,
                       const QuadratureConfig& cfg);

struct ResidualReport {
  std::vector<double> grid;
  std::vector<double> residuals;
  double max_residual = 0.0;
  QuadratureConfig config;
};

// Pointwise residual |T(xi_lambda)(t) - lambda * xi_lambda(t)| over the grid,
// always evaluated in ChebyshevSubstitution mode.
ResidualReport eigen_residual(Complex lambda, const std::vector<double>& grid,
                              const QuadratureConfig& cfg);

// Right inverse of (lambda I - T):
//   (1/(lambda^2-1)) * (lambda f(x) + xi_lambda(x) * T(f/xi_lambda)(x)).
// The TransformInput overload uses f's theta form for the ratio f/xi_lambda.
Complex pseudo_inverse_apply(Complex lambda, const TransformInput& f, double x,
                             const QuadratureConfig& cfg);
Complex pseudo_inverse_apply(Complex lambda, const std::function<Complex(double)>& f,
                             double x, const QuadratureConfig& cfg);

// Diagnostic minima of |T(f)(t_i) + f(t_i)| and |T(f)(t_i) - f(t_i)| over the
// sample grid; a falsification probe for the non-inversion property, not a
// proof. The sampled variant transforms the linear interpolant of f.
std::pair<double, double> widom_noninversion_check(const SampledFunction& f,
                                                   const QuadratureConfig& cfg);
std::pair<double, double> widom_noninversion_check(const TransformInput& f,
                                                   const std::vector<double>& grid,
                                                   const QuadratureConfig& cfg);

// Interior grid of n points equally spaced on [-span, span].
std::vector<double> interior_grid(int n, double span = 0.95);

}  // namespace fht
