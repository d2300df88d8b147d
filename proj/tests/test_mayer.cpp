#include <doctest.h>

#include <cmath>

#include "clusterrad/mayer.hpp"

using namespace clusterrad;

TEST_CASE("tonks oracle values") {
  CHECK(tonksOracle(1.0, 2) == doctest::Approx(-1.0));
  CHECK(tonksOracle(1.0, 3) == doctest::Approx(1.5));
  CHECK(tonksOracle(1.0, 4) == doctest::Approx(-8.0 / 3.0));
  CHECK(tonksOracle(1.0, 5) == doctest::Approx(125.0 / 24.0));
  CHECK(tonksOracle(2.0, 2) == doctest::Approx(-2.0));
}

TEST_CASE("exact 1d hard rods for n = 2, 3") {
  const auto rod = RadialPotential::hardCore(1, 1.0);
  const Box box{1, 64.0};
  const auto c2 = mayerCoefficient(rod, 1.0, box, 2);
  const auto c3 = mayerCoefficient(rod, 1.0, box, 3);
  CHECK(c2.value == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(c3.value == doctest::Approx(1.5).epsilon(1e-10));
  CHECK_FALSE(c3.boundaryFlag);
}

TEST_CASE("exact 1d square well second coefficient") {
  // C_2 = (1/2) ∫ f = (-2a + (e^β - 1) 2(R - a)) / 2
  const auto sw = RadialPotential::squareWell(1, 1.0, 1.0, 2.0);
  const auto c2 = mayerCoefficient(sw, 1.0, Box{1, 64.0}, 2);
  CHECK(c2.value == doctest::Approx(-1.0 + std::expm1(1.0)).epsilon(1e-10));
}

TEST_CASE("monte carlo square well in three dimensions") {
  const auto sw = RadialPotential::squareWell(3, 1.0, 1.0, 2.0);
  MayerOptions mc;
  mc.method = MayerMethod::MonteCarlo;
  mc.samples = 400000;
  mc.seed = 3;
  const auto c2 = mayerCoefficient(sw, 1.0, Box{3, 64.0}, 2, mc);
  // (-W_1 + (e - 1)(W_2 - W_1)) / 2
  CHECK(std::abs(c2.value - 23.0969322199977645) <= 4.0 * c2.standardError);
  CHECK(c2.samples == 400000);
}

TEST_CASE("monte carlo hard rods n = 3 and worker independence") {
  const auto rod = RadialPotential::hardCore(1, 1.0);
  MayerOptions mc;
  mc.method = MayerMethod::MonteCarlo;
  mc.samples = 200000;
  const auto a = mayerCoefficient(rod, 1.0, Box{1, 64.0}, 3, mc);
  CHECK(std::abs(a.value - 1.5) <= 4.0 * a.standardError);
  mc.workers = 3;
  const auto b = mayerCoefficient(rod, 1.0, Box{1, 64.0}, 3, mc);
  CHECK(a.value == b.value);
  CHECK(a.standardError == b.standardError);
}

TEST_CASE("small boxes raise the boundary flag") {
  const auto rod = RadialPotential::hardCore(1, 1.0);
  CHECK(mayerCoefficient(rod, 1.0, Box{1, 8.0}, 2).boundaryFlag);
}

TEST_CASE("argument checks") {
  const auto rod = RadialPotential::hardCore(1, 1.0);
  CHECK_THROWS_AS(mayerCoefficient(rod, 1.0, Box{1, 64.0}, 6), DomainError);
  CHECK_THROWS_AS(mayerCoefficient(RadialPotential::hardCore(3, 1.0), 1.0, Box{3, 64.0}, 2), DomainError);
  CHECK_THROWS_AS(parseMayerMethod("simpson"), DomainError);
  CHECK((parseMayerMethod("mc") == MayerMethod::MonteCarlo));
}

TEST_CASE("empirical radius from the tonks coefficients") {
  std::vector<MayerEstimate> est;
  for (int n = 2; n <= 4; ++n) est.push_back({n, tonksOracle(1.0, n)});
  const double r = radiusLowerBoundEmpirical(est);
  CHECK(r == doctest::Approx(1.0 / std::pow(8.0 / 3.0, 0.25)));
  CHECK_THROWS_AS(radiusLowerBoundEmpirical({est[0]}), DomainError);
}
