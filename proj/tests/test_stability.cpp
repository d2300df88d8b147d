#include <doctest.h>

#include <cmath>

#include "clusterrad/stability.hpp"

using namespace clusterrad;

TEST_CASE("finite stability constant by subset scan") {
  InteractionMatrix all(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) all.set(i, j, -1.0);
  CHECK(finiteAlgebraicB(all) == doctest::Approx(1.0));

  InteractionMatrix blocked = all;
  blocked.set(0, 1, ExtendedReal::infinity());
  CHECK(finiteAlgebraicB(blocked) == doctest::Approx(0.5));

  InteractionMatrix repulsive(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) repulsive.set(i, j, 0.5);
  CHECK(finiteAlgebraicB(repulsive) == 0.0);
  CHECK_THROWS_AS(finiteAlgebraicB(InteractionMatrix(21)), DomainError);
}

TEST_CASE("packing bound for the square well") {
  CHECK(*packingUpperBound(RadialPotential::squareWell(3, 1.0, 1.0, 2.0)) == doctest::Approx(62.0));
  CHECK_FALSE(packingUpperBound(RadialPotential::morse(3, 6.0)).has_value());
}

TEST_CASE("configuration search brackets the square-well constant") {
  const auto sw = RadialPotential::squareWell(3, 1.0, 1.0, 2.0);
  StabilitySearchOptions opt;
  opt.nMax = 6;
  opt.restarts = 2;
  const auto est = configurationLowerBound(sw, opt);
  CHECK(est.lowerBound >= 2.5 - 1e-12);
  REQUIRE(est.upperBound.has_value());
  CHECK(est.lowerBound <= *est.upperBound);
  const auto e = configurationEnergy(sw, est.witness);
  REQUIRE(e.isFinite());
  CHECK(-e.value() / est.witness.size() == doctest::Approx(est.lowerBound));
}

TEST_CASE("search is monotone in restarts and independent of workers") {
  const auto morse = RadialPotential::morse(3, 6.0);
  StabilitySearchOptions a;
  a.nMax = 5;
  a.restarts = 1;
  StabilitySearchOptions b = a;
  b.restarts = 3;
  StabilitySearchOptions c = b;
  c.workers = 3;
  const auto ea = configurationLowerBound(morse, a);
  const auto eb = configurationLowerBound(morse, b);
  const auto ec = configurationLowerBound(morse, c);
  CHECK(eb.lowerBound >= ea.lowerBound);
  CHECK(eb.lowerBound == ec.lowerBound);
  CHECK(eb.witness == ec.witness);
  // a pair at the minimum gives 1/2
  CHECK(ea.lowerBound >= 0.5 - 1e-9);
}

TEST_CASE("repulsive potentials are stable with B = 0") {
  const auto est = configurationLowerBound(RadialPotential::hardCore(3, 1.0), {});
  CHECK(est.lowerBound == 0.0);
  REQUIRE(est.upperBound.has_value());
  CHECK(*est.upperBound == 0.0);
}

TEST_CASE("positive-definite criterion on a gaussian") {
  const std::vector<double> grid{0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
  FourierSpec spec;
  spec.rMax = 12.0;
  const auto r = ruelleCriterionUpperBound([](long double x) { return std::exp(-x * x); }, 3, grid, spec);
  CHECK(r.applicable);
  CHECK(r.bound == doctest::Approx(0.5));
  const auto bad = ruelleCriterionUpperBound(
      [](long double x) { return x < 1.0L ? 1.0L : 0.0L; }, 3, std::vector<double>{0.0, 4.0, 5.0, 7.0}, spec);
  CHECK_FALSE(bad.applicable);
}
