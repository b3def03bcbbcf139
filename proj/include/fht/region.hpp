#pragma once

#include <vector>

#include "fht/complex_utils.hpp"

namespace fht {

// Absolute tolerance on the argument equality that detects boundary points.
inline constexpr double kBoundaryTol = 1e-12;

enum class RegionClass { Interior, Boundary, Exterior };

const char* to_string(RegionClass c);

// True iff lambda lies in the doubly cut plane C \ ((-inf,-1] u [1,inf)),
// the set of admissible eigenvalue parameters.
bool in_cut_plane(Complex lambda);

// u(lambda) = (1+lambda)/(1-lambda). Maps the cut plane onto C \ (-inf,0].
// Throws DomainError at lambda = 1.
Complex mobius_u(Complex lambda);

// z(lambda) = log(u(lambda)) / (2*pi*i) with the principal argument in
// (-pi,pi); real part lies in (-1/2,1/2) and z(0) = 0.
// Requires lambda in the cut plane.
Complex z_of(Complex lambda);

// The exponent gamma in (1,2] with 1/gamma = 1/2 + |arg u(lambda)|/(2*pi).
// Equals 2 exactly on the real segment (-1,1).
double gamma_of(Complex lambda);

// Classifies lambda against the lens region R_p bounded by the two circular
// arcs through +-1 with apexes +-i*cot(pi/p). R_p = R_{p'} and R_2 = [-1,1];
// for p = 2 every point of [-1,1] is reported as Boundary (the region has no
// planar interior).
RegionClass region_membership(Complex lambda, double p);

struct BoundaryPoint {
  Complex point;
  int arc_id;  // 0 = upper arc, 1 = lower arc
};

// n points per arc of the boundary of R_p. Both endpoints +-1 are always
// included; for n >= 3 the apex +-i*cot(pi/p) is included as well. Every
// returned point satisfies region_membership(., p) == Boundary.
std::vector<BoundaryPoint> region_boundary_sample(double p, int n);

// |cot(pi/p)|, the apex height of the boundary arcs of R_p.
double region_apex(double p);

// Conjugate exponent p' with 1/p + 1/p' = 1.
double conjugate_exponent(double p);

}  // namespace fht
