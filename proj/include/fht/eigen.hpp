#pragma once

#include "fht/complex_utils.hpp"

namespace fht {

struct IndexProfile;

// w(x) = sqrt(1 - x^2) on [-1,1].
double weight_w(double x);

// Canonical eigenfunction xi_lambda(x) = ((1-x)/(1+x))^z(lambda) / w(x),
// computed as exp(z * log(base)) with the real positive base (1-x)/(1+x).
// Requires lambda in the cut plane and |x| < 1.
Complex xi(Complex lambda, double x);

// |xi_lambda(x)| = ((1-x)/(1+x))^(Re z(lambda)) / w(x).
double xi_modulus(Complex lambda, double x);

// The decay exponent 1/gamma_lambda of the decreasing rearrangement of
// xi_lambda: t^(1/gamma) * xi*(t) stays between positive constants on (0,2).
double rearrangement_exponent(Complex lambda);

// Whether xi_lambda belongs to the space described by the profile:
// p_x <= gamma_lambda when p_x is attained, p_x < gamma_lambda otherwise.
bool xi_in_space(Complex lambda, const IndexProfile& profile);

// g_lambda(x) = w(x) * xi_lambda(x) = ((1-x)/(1+x))^z(lambda); unimodular
// for real lambda in (-1,1).
Complex g_lambda(double lambda, double x);

// xi_lambda with z(lambda) and gamma_lambda cached.
class EigenFunction {
 public:
  explicit EigenFunction(Complex lambda);

  Complex lambda() const { return lambda_; }
  Complex z() const { return z_; }
  double gamma() const { return gamma_; }

  Complex operator()(double x) const;
  double modulus(double x) const;

  // xi_lambda(cos(theta)) = tan(theta/2)^(2z) / sin(theta), evaluated in
  // theta so the endpoint behavior survives double precision.
  Complex value_theta(double theta) const;

 private:
  Complex lambda_;
  Complex z_;
  double gamma_;
};

}  // namespace fht
