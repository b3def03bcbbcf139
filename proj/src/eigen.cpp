#include "fht/eigen.hpp"

#include <cmath>

#include "fht/region.hpp"
#include "fht/spaces.hpp"

namespace fht {

namespace {

void check_x(double x, const char* who) {
  if (!std::isfinite(x) || std::abs(x) >= 1.0)
    throw DomainError(std::string(who) + ": requires |x| < 1");
}

}  // namespace

double weight_w(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1.0)
    throw DomainError("weight_w: requires |x| <= 1");
  return std::sqrt((1.0 - x) * (1.0 + x));
}

Complex xi(Complex lambda, double x) {
  check_x(x, "xi");
  const Complex z = z_of(lambda);
  const double log_base = std::log((1.0 - x) / (1.0 + x));
  return std::exp(z * log_base) / weight_w(x);
}

double xi_modulus(Complex lambda, double x) {
  check_x(x, "xi_modulus");
  const Complex z = z_of(lambda);
  const double log_base = std::log((1.0 - x) / (1.0 + x));
  return std::exp(z.real() * log_base) / weight_w(x);
}

double rearrangement_exponent(Complex lambda) { return 1.0 / gamma_of(lambda); }

bool xi_in_space(Complex lambda, const IndexProfile& profile) {
  require_valid(profile);
  const double gamma = gamma_of(lambda);
  return profile.p_attained ? profile.p_x <= gamma : profile.p_x < gamma;
}

Complex g_lambda(double lambda, double x) {
  if (!std::isfinite(lambda) || std::abs(lambda) >= 1.0)
    throw DomainError("g_lambda: requires lambda in (-1,1)");
  check_x(x, "g_lambda");
  const Complex z = z_of(Complex(lambda, 0.0));
  return std::exp(z * std::log((1.0 - x) / (1.0 + x)));
}

EigenFunction::EigenFunction(Complex lambda)
    : lambda_(lambda), z_(z_of(lambda)), gamma_(gamma_of(lambda)) {}

Complex EigenFunction::operator()(double x) const {
  check_x(x, "EigenFunction");
  return std::exp(z_ * std::log((1.0 - x) / (1.0 + x))) / weight_w(x);
}

double EigenFunction::modulus(double x) const {
  check_x(x, "EigenFunction");
  return std::exp(z_.real() * std::log((1.0 - x) / (1.0 + x))) / weight_w(x);
}

Complex EigenFunction::value_theta(double theta) const {
  if (!(theta > 0.0 && theta < std::acos(-1.0)))
    throw DomainError("EigenFunction: requires theta in (0,pi)");
  // (1-cos)/(1+cos) = tan^2(theta/2); log stays accurate where cos does not.
  const double log_base = 2.0 * std::log(std::tan(0.5 * theta));
  return std::exp(z_ * log_base) / std::sin(theta);
}

}  // namespace fht
