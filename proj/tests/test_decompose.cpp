#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clusterrad/decompose.hpp"

using namespace clusterrad;

TEST_CASE("mollifier has unit mass") {
  for (int d : {1, 3}) {
    const Mollifier psi(d);
    for (double a : {1.0, 0.2, 0.01}) CHECK(std::abs(static_cast<double>(psi.mass(a)) - 1.0) <= 1e-10);
    CHECK(static_cast<double>(psi.transform(0.0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(psi(1.0L) == 0.0L);
  }
  CHECK_THROWS_AS(Mollifier(2), DomainError);
}

TEST_CASE("bump chain normalisation") {
  const BumpChain chain(3);
  CHECK(BumpChain::chi(0.5L) == 0.0L);
  CHECK(static_cast<double>(BumpChain::chi(0.0L)) == doctest::Approx(std::exp(-1.0)));
  CHECK(static_cast<double>(chain.chi3(0.0L)) <= 1.0 + 1e-12);
  CHECK(static_cast<double>(chain.chi1(1.0L)) == 0.0);
  // Ψ for d = 3 is π² (1 + r) e^{-r} / 4
  for (double r : {0.0, 0.3, 0.9})
    CHECK(static_cast<double>(chain.bigPsi(r)) ==
          doctest::Approx(std::numbers::pi * std::numbers::pi * (1 + r) * std::exp(-r) / 4).epsilon(1e-8));
  for (double q : {0.0, 5.0, 40.0}) CHECK(chain.chi2Tilde(q) > 0.0L);
}

TEST_CASE("truncation is constant below a") {
  const auto lj = RadialPotential::lennardJones126(3);
  const auto va = truncated(lj, 0.5);
  CHECK(static_cast<double>(va(0.1L)) == doctest::Approx(lj.evaluate(0.5).value()));
  CHECK(static_cast<double>(va(1.5L)) == doctest::Approx(lj.evaluate(1.5).value()));
  CHECK_THROWS_AS(truncated(RadialPotential::morse(3, 6.0), 0.5), DomainError);
}

TEST_CASE("morse needs no construction") {
  const auto r = decompose(RadialPotential::morse(3, 6.0));
  CHECK(r.degenerate);
  CHECK(r.success);
  CHECK(r.phi1.max() == 0.0);
  CHECK(r.phi2.min() == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("envelope too weak at the origin is a constructive failure") {
  Envelope env;
  env.r1 = 1.0;
  env.r2 = std::pow(2.0, 1.0 / 6.0);
  env.w = 1.0;
  env.xi.terms = {{DecayTerm::Form::Power, 1e-3, 1.0}};
  env.eta.terms = {{DecayTerm::Form::Power, 4.0, 6.0}, {DecayTerm::Form::Power, -4.0, 12.0}};
  const auto p = RadialPotential::lennardJones126(3).withEnvelope(env);
  const auto r = decompose(p);
  CHECK_FALSE(r.success);
  CHECK_FALSE(r.failure.empty());
  CHECK(r.bestXiMoment < r.constants.C);
}

TEST_CASE("lj without envelope") {
  CHECK_THROWS_AS(decompose(RadialPotential::lennardJones126(3)), DomainError);
  CHECK_THROWS_AS(decompose(RadialPotential::hardCore(3, 1.0)), DomainError);
}
