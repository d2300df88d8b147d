#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clusterrad/quad.hpp"

using namespace clusterrad;

namespace {
constexpr double kPi = std::numbers::pi;
double ball(double r) { return 4.0 * kPi * r * r * r / 3.0; }
}  // namespace

TEST_CASE("sphere volumes") {
  CHECK(sphereVolume(1, 1.0) == doctest::Approx(2.0));
  CHECK(sphereVolume(2, 1.0) == doctest::Approx(kPi));
  CHECK(sphereVolume(3, 2.0) == doctest::Approx(ball(2.0)));
  CHECK(sphereSurface(3) == doctest::Approx(4.0 * kPi));
}

TEST_CASE("adaptive quadrature of smooth and kinked integrands") {
  QuadratureSpec spec;
  CHECK(integrateAdaptive([](double x) { return std::exp(x); }, 0.0, 1.0, spec).value ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(integrateAdaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, spec).value ==
        doctest::Approx(0.045 + 0.245).epsilon(1e-9));
}

TEST_CASE("square-well integral constants in closed form") {
  const auto p = RadialPotential::squareWell(3, 1.0, 1.0, 2.0);
  for (double beta : {0.1, 0.5, 1.0}) {
    const double c = ball(1.0) + std::expm1(beta) * (ball(2.0) - ball(1.0));
    const double cs = ball(1.0) + beta * (ball(2.0) - ball(1.0));
    CHECK(cBeta(p, beta) == doctest::Approx(c).epsilon(1e-10));
    CHECK(cStarBeta(p, beta) == doctest::Approx(cs).epsilon(1e-10));
  }
}

TEST_CASE("morse rho = 6 constants match high-precision reference") {
  // mpmath at 30 digits
  const auto p = RadialPotential::morse(3, 6.0);
  CHECK(cBeta(p, 1.0) == doctest::Approx(10.2871666026536982).epsilon(1e-9));
  CHECK(cBeta(p, 2.0) == doctest::Approx(25.5140057822281068).epsilon(1e-9));
  CHECK(vL1(p) == doctest::Approx(2284.36346712277955).epsilon(1e-9));
  CHECK(cBetaDetailed(p, 1.0).tailVerified);
}

TEST_CASE("lennard-jones C(1) through the hard repulsion") {
  const auto p = RadialPotential::lennardJones126(3);
  CHECK(cBeta(p, 1.0) == doctest::Approx(18.3584395710354985).epsilon(1e-8));
}

TEST_CASE("constants outside their class raise domain errors") {
  const auto morse = RadialPotential::morse(3, 6.0);
  CHECK_THROWS_AS(cStarBeta(morse, 1.0), DomainError);
  CHECK_THROWS_AS(vL1(RadialPotential::hardCore(3, 1.0)), DomainError);
  CHECK_THROWS_AS(cBeta(morse, 0.0), DomainError);
  QuadratureSpec bad;
  bad.relTol = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("pure hard core has C = C* = W_a") {
  const auto p = RadialPotential::hardCore(3, 1.0);
  const auto c = integralConstants(p, 1.0, std::nullopt);
  CHECK(c.cBeta == doctest::Approx(ball(1.0)).epsilon(1e-12));
  CHECK(*c.cStarBeta == doctest::Approx(ball(1.0)).epsilon(1e-12));
  CHECK(c.sphereVolume == doctest::Approx(ball(1.0)));
  CHECK_FALSE(c.vL1.has_value());
}
