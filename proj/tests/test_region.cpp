#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fht/region.hpp"

using namespace fht;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<Complex> random_cut_plane_points(size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  std::vector<Complex> out;
  while (out.size() < n) {
    Complex z(re(rng), im(rng));
    if (in_cut_plane(z)) out.push_back(z);
  }
  return out;
}
}  // namespace

TEST_CASE("mobius_u pinned values") {
  CHECK(mobius_u(Complex(0.0, 0.0)) == Complex(1.0, 0.0));
  CHECK(std::abs(mobius_u(Complex(0.0, 1.0)) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(mobius_u(Complex(-1.0, 0.0)) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(mobius_u(Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(mobius_u(Complex(std::nan(""), 0.0)), DomainError);
}

TEST_CASE("z_of pinned values and branch") {
  CHECK(z_of(Complex(0.0, 0.0)) == Complex(0.0, 0.0));

  // log(i) = i*pi/2 on the principal branch, so z(i) = 1/4.
  const Complex zi = z_of(Complex(0.0, 1.0));
  CHECK(zi.real() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(zi.imag() == doctest::Approx(0.0).epsilon(1e-14));

  for (double lam : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
    CHECK(z_of(Complex(lam, 0.0)).real() == doctest::Approx(0.0).epsilon(1e-14));
  }

  CHECK_THROWS_AS(z_of(Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(z_of(Complex(-2.5, 0.0)), DomainError);
  CHECK_THROWS_AS(z_of(Complex(17.0, 0.0)), DomainError);

  for (const Complex& z : random_cut_plane_points(500, 11)) {
    const double re = z_of(z).real();
    CHECK(re > -0.5);
    CHECK(re < 0.5);
  }
}

TEST_CASE("gamma_of pinned values") {
  CHECK(gamma_of(Complex(0.0, 0.0)) == doctest::Approx(2.0).epsilon(1e-15));
  // |arg u(i)| = pi/2 gives 1/gamma = 3/4.
  CHECK(gamma_of(Complex(0.0, 1.0)) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  // On the arc of R_3 through i*cot(pi/3) the argument level is 2*pi*(1/6).
  const double apex3 = 1.0 / std::tan(kPi / 3.0);
  CHECK(gamma_of(Complex(0.0, apex3)) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_of(Complex(1.5, 0.0)), DomainError);

  for (const Complex& z : random_cut_plane_points(500, 12)) {
    const double g = gamma_of(z);
    CHECK(g > 1.0);
    CHECK(g <= 2.0);
  }
  for (double lam : {-0.99, -0.2, 0.7}) {
    CHECK(gamma_of(Complex(lam, 0.0)) == 2.0);
  }
}

TEST_CASE("region_membership pinned classifications") {
  CHECK(region_membership(Complex(0.0, 1.0), 4.0) == RegionClass::Boundary);
  CHECK(region_membership(Complex(0.0, 0.0), 3.0) == RegionClass::Interior);
  CHECK(region_membership(Complex(2.0, 0.0), 3.0) == RegionClass::Exterior);
  CHECK(region_membership(Complex(1.0, 0.0), 5.0) == RegionClass::Boundary);
  CHECK(region_membership(Complex(-1.0, 0.0), 1.01) == RegionClass::Boundary);
  CHECK_THROWS_AS(region_membership(Complex(0.0, 0.0), 1.0), DomainError);
  CHECK_THROWS_AS(region_membership(Complex(0.0, 0.0), 0.5), DomainError);
}

TEST_CASE("region at p = 2 degenerates to the segment") {
  CHECK(region_membership(Complex(0.0, 0.0), 2.0) == RegionClass::Boundary);
  CHECK(region_membership(Complex(0.7, 0.0), 2.0) == RegionClass::Boundary);
  CHECK(region_membership(Complex(1.0, 0.0), 2.0) == RegionClass::Boundary);
  CHECK(region_membership(Complex(0.0, 0.1), 2.0) == RegionClass::Exterior);
  CHECK(region_membership(Complex(1.5, 0.0), 2.0) == RegionClass::Exterior);
}

TEST_CASE("region symmetry under negation and conjugation") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> pdist(1.05, 8.0);
  for (int k = 0; k < 2000; ++k) {
    const Complex z(coord(rng), coord(rng));
    const double p = pdist(rng);
    const RegionClass c = region_membership(z, p);
    CHECK(region_membership(-z, p) == c);
    CHECK(region_membership(std::conj(z), p) == c);
  }
}

TEST_CASE("region conjugate-exponent identity R_p = R_p'") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> pdist(1.05, 8.0);
  for (int k = 0; k < 2000; ++k) {
    const Complex z(coord(rng), coord(rng));
    const double p = pdist(rng);
    CHECK(region_membership(z, p) == region_membership(z, conjugate_exponent(p)));
  }
}

TEST_CASE("region grows with |1/2 - 1/p|") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> pdist(1.05, 8.0);
  auto dev = [](double p) { return std::abs(0.5 - 1.0 / p); };
  for (int k = 0; k < 2000; ++k) {
    const Complex z(coord(rng), coord(rng));
    double p = pdist(rng), q = pdist(rng);
    if (dev(p) > dev(q)) std::swap(p, q);  // now R_p inside R_q
    if (region_membership(z, p) != RegionClass::Exterior)
      CHECK(region_membership(z, q) != RegionClass::Exterior);
  }
}

TEST_CASE("scaling toward zero shrinks the argument level") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> alpha(-1.0, 1.0);
  for (const Complex& z : random_cut_plane_points(500, 25)) {
    const double a = alpha(rng);
    CHECK(std::abs(std::arg(mobius_u(a * z))) <=
          std::abs(std::arg(mobius_u(z))) + 1e-12);
    CHECK(gamma_of(a * z) >= gamma_of(z) - 1e-12);
  }
}

TEST_CASE("gamma equals min(p,p') on the boundary arcs") {
  for (double p : {1.3, 1.8, 2.5, 3.0, 6.0}) {
    const double expected = p < 2.0 ? p : conjugate_exponent(p);
    for (const auto& s : region_boundary_sample(p, 9)) {
      if (std::abs(std::abs(s.point.real()) - 1.0) < 1e-12 && s.point.imag() == 0.0)
        continue;  // endpoints excluded
      CHECK(gamma_of(s.point) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
}

TEST_CASE("region_boundary_sample contract") {
  SUBCASE("p = 2 lies on the segment") {
    for (const auto& s : region_boundary_sample(2.0, 17)) {
      CHECK(s.point.imag() == 0.0);
      CHECK(std::abs(s.point.real()) <= 1.0);
      CHECK(region_membership(s.point, 2.0) == RegionClass::Boundary);
    }
  }
  SUBCASE("apex i is present for p = 4 when n >= 3") {
    for (int n : {3, 4, 7, 10}) {
      bool found = false;
      for (const auto& s : region_boundary_sample(4.0, n))
        if (std::abs(s.point - Complex(0.0, 1.0)) < 1e-12) found = true;
      CHECK(found);
    }
  }
  SUBCASE("n = 2 returns the endpoints") {
    const auto pts = region_boundary_sample(3.0, 2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].point == Complex(-1.0, 0.0));
    CHECK(pts[1].point == Complex(1.0, 0.0));
  }
  SUBCASE("every sample classifies as boundary") {
    for (double p : {1.2, 1.9, 2.5, 4.0, 9.0}) {
      for (const auto& s : region_boundary_sample(p, 25)) {
        CHECK(region_membership(s.point, p) == RegionClass::Boundary);
        CHECK((s.arc_id == 0 || s.arc_id == 1));
      }
    }
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(region_boundary_sample(1.0, 8), DomainError);
    CHECK_THROWS_AS(region_boundary_sample(3.0, 1), DomainError);
  }
}
