#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clusterrad/errors.hpp"
#include "clusterrad/fourier.hpp"

using namespace clusterrad;

TEST_CASE("gaussian is its own transform in three dimensions") {
  FourierSpec spec;
  spec.rMax = 14.0;
  const RadialFunction g = [](long double r) { return std::exp(-r * r / 2); };
  for (double p = 0.0; p <= 8.0; p += 0.5) {
    const double exact = std::pow(2.0 * std::numbers::pi, 1.5) * std::exp(-p * p / 2);
    CHECK(static_cast<double>(radialFourierAt(g, 3, p, spec)) == doctest::Approx(exact).epsilon(1e-6));
  }
  CHECK(static_cast<double>(radialFourierAt(g, 3, 3.0, spec)) == doctest::Approx(0.174962362365696962).epsilon(1e-12));
}

TEST_CASE("indicator of [-1, 1] in one dimension") {
  FourierSpec spec;
  spec.rMax = 1.0;
  const RadialFunction f = [](long double r) { return r <= 1 ? 1.0L : 0.0L; };
  CHECK(static_cast<double>(radialFourierAt(f, 1, 0.0, spec)) == doctest::Approx(2.0));
  for (double p = 0.25; p <= 20.0; p += 0.75)
    CHECK(static_cast<double>(radialFourierAt(f, 1, p, spec)) == doctest::Approx(2.0 * std::sin(p) / p).epsilon(1e-12).scale(1e-14));
}

TEST_CASE("grid transform and mass") {
  FourierSpec spec;
  spec.rMax = 10.0;
  const RadialFunction g = [](long double r) { return std::exp(-r * r / 2); };
  const auto t = radialFourier(g, 3, {0.0, 1.0, 2.0}, spec);
  CHECK(t.values[0] == doctest::Approx(static_cast<double>(radialMass(g, 3, spec))));
  CHECK(t.max() == t.values[0]);
  CHECK(t(0.5) == doctest::Approx((t.values[0] + t.values[1]) / 2));
  CHECK_THROWS_AS(radialFourierAt(g, 2, 1.0, spec), DomainError);
}

TEST_CASE("sampled grid function transform") {
  std::vector<double> grid;
  for (int i = 0; i <= 4000; ++i) grid.push_back(i * 0.0025);
  const auto f = sampleOnGrid([](long double r) { return std::exp(-r * r / 2); }, grid, 3);
  const auto t = radialFourier(f, {0.0, 1.0});
  CHECK(t.values[1] == doctest::Approx(std::pow(2.0 * std::numbers::pi, 1.5) * std::exp(-0.5)).epsilon(1e-5));
}
