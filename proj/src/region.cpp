#include "fht/region.hpp"

#include <cmath>
#include <numbers>

namespace fht {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(RegionClass c) {
  switch (c) {
    case RegionClass::Interior: return "interior";
    case RegionClass::Boundary: return "boundary";
    case RegionClass::Exterior: return "exterior";
  }
  return "?";
}

bool in_cut_plane(Complex lambda) {
  if (!is_finite(lambda)) return false;
  return !(lambda.imag() == 0.0 && std::abs(lambda.real()) >= 1.0);
}

Complex mobius_u(Complex lambda) {
  require_finite(lambda, "mobius_u");
  if (lambda == Complex(1.0, 0.0)) throw DomainError("mobius_u: pole at lambda = 1");
  return (1.0 + lambda) / (1.0 - lambda);
}

Complex z_of(Complex lambda) {
  require_finite(lambda, "z_of");
  if (!in_cut_plane(lambda))
    throw DomainError("z_of: lambda on the real rays |lambda| >= 1");
  const Complex u = mobius_u(lambda);
  // log(u)/(2*pi*i) = arg(u)/(2*pi) - i*ln|u|/(2*pi)
  return Complex(std::arg(u) / (2.0 * kPi), -std::log(std::abs(u)) / (2.0 * kPi));
}

double gamma_of(Complex lambda) {
  require_finite(lambda, "gamma_of");
  if (!in_cut_plane(lambda))
    throw DomainError("gamma_of: lambda on the real rays |lambda| >= 1");
  const double d = std::abs(std::arg(mobius_u(lambda))) / (2.0 * kPi);
  return 1.0 / (0.5 + d);
}

RegionClass region_membership(Complex lambda, double p) {
  require_finite(lambda, "region_membership");
  require_finite(p, "region_membership");
  if (p <= 1.0) throw DomainError("region_membership: requires p > 1");
  if (lambda == Complex(1.0, 0.0) || lambda == Complex(-1.0, 0.0))
    return RegionClass::Boundary;
  if (!in_cut_plane(lambda)) return RegionClass::Exterior;

  const double d = std::abs(std::arg(mobius_u(lambda))) / (2.0 * kPi);
  if (p == 2.0) {
    // Degenerate lens: the whole segment [-1,1] is boundary.
    return d <= kBoundaryTol ? RegionClass::Boundary : RegionClass::Exterior;
  }
  const double target = std::abs(0.5 - 1.0 / p);
  if (std::abs(d - target) <= kBoundaryTol) return RegionClass::Boundary;
  return d < target ? RegionClass::Interior : RegionClass::Exterior;
}

double region_apex(double p) {
  if (p <= 1.0 || !std::isfinite(p)) throw DomainError("region_apex: requires p > 1");
  return std::abs(std::cos(kPi / p) / std::sin(kPi / p));
}

double conjugate_exponent(double p) {
  if (p <= 1.0 || !std::isfinite(p))
    throw DomainError("conjugate_exponent: requires p in (1,inf)");
  return p / (p - 1.0);
}

std::vector<BoundaryPoint> region_boundary_sample(double p, int n) {
  if (p <= 1.0 || !std::isfinite(p))
    throw DomainError("region_boundary_sample: requires p > 1");
  if (n < 2) throw DomainError("region_boundary_sample: requires n >= 2");

  std::vector<BoundaryPoint> out;
  out.reserve(static_cast<size_t>(2 * n));

  if (p == 2.0) {
    // Both arcs collapse onto the segment [-1,1].
    for (int arc = 0; arc < 2; ++arc)
      for (int j = 0; j < n; ++j)
        out.push_back({Complex(-1.0 + 2.0 * j / (n - 1), 0.0), arc});
    return out;
  }

  // The arc with apex i*|cot(pi/p)| is the image of the ray arg(u) = theta0
  // under the inverse Moebius map; psi = pi/2 lands exactly on the apex.
  const double theta0 = 2.0 * kPi * std::abs(0.5 - 1.0 / p);
  auto arc_point = [&](double psi, double sign) -> Complex {
    if (psi <= 0.0) return Complex(-1.0, 0.0);
    if (psi >= kPi) return Complex(1.0, 0.0);
    const double r = std::tan(psi / 2.0);
    const Complex u = r * Complex(std::cos(sign * theta0), std::sin(sign * theta0));
    return (u - 1.0) / (u + 1.0);
  };

  // Node set in psi: endpoints always; apex pi/2 forced in for n >= 3.
  std::vector<double> psis;
  psis.reserve(static_cast<size_t>(n));
  if (n == 2) {
    psis = {0.0, kPi};
  } else {
    const int k_left = (n - 1) / 2;       // nodes on [0, pi/2], apex included
    const int k_right = n - 1 - k_left;   // nodes on [pi/2, pi]
    for (int j = 0; j < k_left; ++j) psis.push_back(0.5 * kPi * j / k_left);
    for (int j = 0; j <= k_right; ++j)
      psis.push_back(0.5 * kPi + 0.5 * kPi * j / k_right);
  }

  for (int arc = 0; arc < 2; ++arc) {
    const double sign = arc == 0 ? 1.0 : -1.0;
    for (double psi : psis) out.push_back({arc_point(psi, sign), arc});
  }
  return out;
}

}  // namespace fht
