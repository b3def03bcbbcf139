#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fht {

// Invalid argument to a mathematical operation (point outside the admissible
// domain, non-finite input, bad parameter range).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An IndexProfile violating one or more of its defining inequalities.
class ProfileError : public std::invalid_argument {
 public:
  ProfileError(const std::string& what, std::vector<std::string> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Classification requested for a profile outside the supported family
// (non-separable profiles other than the weak Lorentz spaces).
class UnsupportedProfileError : public std::runtime_error {
 public:
  explicit UnsupportedProfileError(const std::string& what)
      : std::runtime_error(what) {}
};

// Adaptive quadrature stopped at the subdivision cap before reaching the
// requested tolerance. Carries the best estimate and the achieved bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> estimate,
                   double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}
  std::complex<double> estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  std::complex<double> estimate_;
  double error_bound_;
};

}  // namespace fht
