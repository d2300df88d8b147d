#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clusterrad/bounds.hpp"
#include "clusterrad/mayer.hpp"

using namespace clusterrad;

namespace {

// Morse rho = 6 reference claims, kept with the wording they were quoted with.
struct ReferenceClaim {
  const char* name;
  double value;
  const char* quote;
};

constexpr double kFourPi = 4.0 * std::numbers::pi;
const ReferenceClaim kMorseClaims[] = {
    {"B_6", 38.65, "B_6 = 38.65"},
    {"C(1) lower", kFourPi * 182.0, "C(beta) >= 4 pi (182)"},
    {"||V|| upper", kFourPi * 204.0, "||V|| <= 4 pi (204)"},
    {"ratio factor", 1.13, "is smaller than (1.13) e^{-B_6}"},
};

double ball(double r) { return 4.0 * std::numbers::pi * r * r * r / 3.0; }

}  // namespace

TEST_CASE("trivial plug-in radii") {
  CHECK(penroseRuelleRadius(0.0, 1.0, 1.0).value == doctest::Approx(std::exp(-1.0)));
  CHECK(brydgesFederbushRadius(0.0, 1.0, 1.0).value == doctest::Approx(std::exp(-1.0)));
  CHECK(penrosePotentialRadius(0.0, 1.0, 1.0).value == doctest::Approx(std::exp(-1.0)));
  CHECK(ruellePotentialRadius(0.0, 1.0, 1.0).value == doctest::Approx(std::exp(-1.0)));
  CHECK(penroseRuelleRadius(0.0, ball(1.0), 1.0).value == doctest::Approx(0.0878247472864787410));
  CHECK_THROWS_AS(penroseRuelleRadius(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(brydgesFederbushRadius(0.0, -1.0, 1.0), DomainError);
}

TEST_CASE("coefficient bound formulas") {
  CHECK(coefficientBound(Theorem::PenroseRuelle, 2, 0.0, 1.0, 1.0).value == doctest::Approx(0.5));
  CHECK(coefficientBound(Theorem::Penrose, 3, 0.0, 1.0, 1.0).value == doctest::Approx(0.5));
  // e^{βBn} n^{n-2} C*^{n-1} / n! with B = 1, n = 2, C* = 3
  CHECK(coefficientBound(Theorem::Penrose, 2, 1.0, 3.0, 1.0).value == doctest::Approx(std::exp(2.0) * 1.5));
  CHECK(coefficientBound(Theorem::BrydgesFederbush, 3, 0.0, 2.0, 0.5).value == doctest::Approx(3.0 / 6.0));
}

TEST_CASE("tonks coefficients respect the penrose bound") {
  for (int n = 2; n <= 4; ++n)
    CHECK(std::abs(tonksOracle(1.0, n)) <= coefficientBound(Theorem::Penrose, n, 0.0, 2.0, 1.0).value * (1 + 1e-12));
}

TEST_CASE("radii are antitone in B and in the constant") {
  for (double b : {0.0, 0.5, 2.0}) {
    CHECK(penroseRuelleRadius(b, 2.0, 1.0).logValue >= penroseRuelleRadius(b + 1.0, 2.0, 1.0).logValue);
    CHECK(penrosePotentialRadius(b, 2.0, 1.0).logValue >= penrosePotentialRadius(b, 3.0, 1.0).logValue);
    CHECK(ruellePotentialRadius(b, 2.0, 1.0).logValue >= ruellePotentialRadius(b + 1.0, 2.0, 1.0).logValue);
  }
}

TEST_CASE("ruelle radius with zero phi1 is the brydges-federbush radius") {
  const double vl = 2284.36346712277955;
  CHECK(ruellePotentialRadius(38.65, vl, 1.0).logValue == doctest::Approx(brydgesFederbushRadius(38.65, vl, 1.0).logValue));
  const auto morse = RadialPotential::morse(3, 6.0);
  const RuelleSplit split{RadialPotential::tabulated(3, RadialGrid::uniform(0.5, 1.0, 2), {0.0, 0.0}), morse, 38.65};
  const auto report = compareReport(morse, 1.0, split, 38.65);
  REQUIRE(report.ruelle.has_value());
  REQUIRE(report.brydgesFederbush.has_value());
  CHECK(report.ruelle->logValue == doctest::Approx(report.brydgesFederbush->logValue).epsilon(1e-9));
}

TEST_CASE("morse report stays finite in log space") {
  const auto report = compareReport(RadialPotential::morse(3, 6.0), 1.0, std::nullopt, kMorseClaims[0].value);
  REQUIRE(report.penroseRuelle.has_value());
  REQUIRE(report.brydgesFederbush.has_value());
  CHECK(std::isfinite(report.penroseRuelle->logValue));
  CHECK(report.penroseRuelle->value > 0.0);
  CHECK(*report.inputs.vL1 <= kMorseClaims[2].value);
  CHECK(verifyReport(report));
  CHECK((report.best == Theorem::BrydgesFederbush));
  for (const auto& c : report.coefficientBounds) CHECK(std::isfinite(c.bound.logValue));
}

TEST_CASE("pure hard core: penrose-ruelle and penrose radii coincide") {
  const auto report = compareReport(RadialPotential::hardCore(3, 1.0), 1.0, std::nullopt, std::nullopt);
  REQUIRE(report.penrose.has_value());
  CHECK(report.inputs.B == 0.0);
  CHECK(report.penrose->logValue == doctest::Approx(report.penroseRuelle->logValue));
}

TEST_CASE("square well: penrose radius is best") {
  const auto sw = RadialPotential::squareWell(3, 1.0, 1.0, 2.0);
  for (double beta : {0.1, 0.5, 1.0}) {
    const auto report = compareReport(sw, beta, std::nullopt, 2.5);
    REQUIRE(report.best.has_value());
    CHECK((*report.best == Theorem::Penrose));
    CHECK(report.penrose->logValue > report.penroseRuelle->logValue);
  }
}

TEST_CASE("lennard-jones reports never name a winner") {
  const auto report = compareReport(RadialPotential::lennardJones126(3), 1.0, std::nullopt, 8.61,
                                    RuelleInputs{100.0, 20.0, "fixture"});
  CHECK(report.ljType);
  CHECK_FALSE(report.best.has_value());
  CHECK(report.ruelle.has_value());
  CHECK(report.penroseRuelle.has_value());
}
