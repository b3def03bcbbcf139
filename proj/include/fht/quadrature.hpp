#pragma once

#include <functional>

#include "fht/complex_utils.hpp"

namespace fht {

enum class QuadMode {
  SmoothSubtraction,      // subtract f(t), integrate in x
  ChebyshevSubstitution,  // subtract f(t), integrate in theta with x = cos(theta)
};

const char* to_string(QuadMode m);

struct QuadratureConfig {
  double tol = 1e-8;             // target absolute error
  int max_depth = 40;            // adaptive bisection cap per panel
  double endpoint_margin = 0.05; // evaluation restricted to |t| <= 1 - margin
  QuadMode mode = QuadMode::SmoothSubtraction;

  void validate() const;  // tol >= 1e-14, 1 <= max_depth <= 60, margin in (0,1)
};

struct IntegrationResult {
  Complex value{};
  double error_bound = 0.0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7/15 on [a,b]; bisects the panel with the
// largest error estimate until the summed estimate drops below tol or every
// offending panel has reached max_depth. Deterministic for fixed inputs.
IntegrationResult integrate_adaptive(const std::function<Complex(double)>& f,
                                     double a, double b, double tol, int max_depth);

}  // namespace fht
