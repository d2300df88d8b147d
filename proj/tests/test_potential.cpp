#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "clusterrad/potential.hpp"
#include "clusterrad/potential_json.hpp"

using namespace clusterrad;

namespace {
std::string dataPath(const char* name) { return std::string(CLUSTERRAD_DATA_DIR) + "/" + name; }
}  // namespace

TEST_CASE("hard core is infinite inside and zero outside") {
  const auto p = RadialPotential::hardCore(3, 1.0);
  CHECK(p.evaluate(0.0).isInfinite());
  CHECK(p.evaluate(1.0).isInfinite());
  CHECK(p.evaluate(1.0000001).value() == 0.0);
  CHECK(p.finiteRange().has_value());
  const auto labels = classify(p);
  CHECK(labels.contains(PotentialLabel::HardCore));
  CHECK(labels.contains(PotentialLabel::Repulsive));
  CHECK(isPenroseLike(p));
}

TEST_CASE("square well values and breakpoints") {
  const auto p = RadialPotential::squareWell(3, 1.0, 1.0, 2.0);
  CHECK(p.evaluate(0.5).isInfinite());
  CHECK(p.evaluate(1.5).value() == -1.0);
  CHECK(p.evaluate(2.5).value() == 0.0);
  CHECK(*p.finiteRange() == 2.0);
  CHECK(isStrictPenroseOnGrid(p, 2.0));
  CHECK_FALSE(classify(p).contains(PotentialLabel::Repulsive));
}

TEST_CASE("morse minimum is -1 at r = 1") {
  const auto p = RadialPotential::morse(3, 6.0);
  CHECK(p.evaluate(1.0).value() == doctest::Approx(-1.0));
  CHECK(p.evaluate(1.0 - std::log(2.0) / 6.0).value() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p.finiteEverywhere());
  CHECK(classify(p).contains(PotentialLabel::AbsolutelySummableCandidate));
  CHECK_FALSE(classify(p).contains(PotentialLabel::LJType));
}

TEST_CASE("lennard-jones 12-6 shape") {
  const auto p = RadialPotential::lennardJones126(3);
  CHECK(p.evaluate(0.0).isInfinite());
  CHECK(p.evaluate(1.0).value() == doctest::Approx(0.0));
  CHECK(p.evaluate(std::pow(2.0, 1.0 / 6.0)).value() == doctest::Approx(-1.0));
  CHECK(p.divergesAtOrigin());
  CHECK(classify(p).contains(PotentialLabel::LJType));
}

TEST_CASE("tail bound dominates the potential") {
  for (const auto& p : {RadialPotential::morse(3, 6.0), RadialPotential::lennardJones126(3)}) {
    const auto tb = p.tailBound();
    REQUIRE(tb.known);
    for (double r = tb.from; r < 20.0; r += 0.37) CHECK(std::abs(p.evaluate(r).value()) <= tb.bound(r) * (1 + 1e-12));
  }
}

TEST_CASE("tabulated potential interpolates linearly") {
  const auto p = RadialPotential::tabulated(1, RadialGrid::uniform(1.0, 3.0, 3), {2.0, 0.0, -1.0});
  CHECK(p.evaluate(0.5).value() == 2.0);
  CHECK(p.evaluate(1.5).value() == doctest::Approx(1.0));
  CHECK(p.evaluate(2.5).value() == doctest::Approx(-0.5));
  CHECK(p.evaluate(4.0).value() == 0.0);
}

TEST_CASE("negative radius is a domain error") {
  CHECK_THROWS_AS(RadialPotential::morse(3, 6.0).evaluate(-1.0), DomainError);
  CHECK_THROWS_AS(RadialPotential::hardCore(3, -1.0), DomainError);
}

TEST_CASE("interaction matrix from a configuration") {
  const auto p = RadialPotential::squareWell(1, 1.0, 1.0, 2.0);
  const std::vector<Point> pts{{0.0}, {1.5}, {0.5}};
  const auto v = interactionMatrix(p, 2.0, pts);
  CHECK(v(0, 1).value() == -2.0);
  CHECK(v(0, 2).isInfinite());
  CHECK(v(1, 2).isInfinite());
  const std::vector<Point> bad{{0.0, 1.0}};
  CHECK_THROWS_AS(interactionMatrix(p, 1.0, bad), DomainError);
}

TEST_CASE("extended reals reject NaN and -inf") {
  CHECK_THROWS_AS(ExtendedReal(std::nan("")), DomainError);
  CHECK_THROWS_AS(ExtendedReal(-INFINITY), DomainError);
  CHECK(mayerFactor(ExtendedReal::infinity()) == -1.0);
  CHECK(boltzmannFactor(ExtendedReal::infinity()) == 0.0);
}

TEST_CASE("data files parse") {
  const auto morse = loadPotentialDocument(dataPath("morse6.json"));
  CHECK((morse.potential.kind() == PotentialKind::Morse));
  CHECK(*morse.stabilityConstant == 38.65);
  const auto rod = loadPotentialDocument(dataPath("hardrod.json"));
  CHECK(rod.potential.dimension() == 1);
  CHECK(*rod.potential.hardCoreRadius() == 1.0);
  const auto lj = loadPotentialDocument(dataPath("lj126.json"));
  REQUIRE(lj.potential.envelope().has_value());
  CHECK(lj.potential.envelope()->r1 == 1.0);
  const auto sw = loadPotentialDocument(dataPath("squarewell.json"));
  CHECK((sw.potential.kind() == PotentialKind::SquareWell));
}

TEST_CASE("malformed potential documents") {
  using nlohmann::json;
  auto category = [](const json& j) {
    try {
      parsePotentialDocument(j);
    } catch (const DomainError& e) {
      return e.category();
    }
    return std::string("none");
  };
  CHECK(category(json{{"kind", "nope"}, {"dimension", 3}, {"params", json::object()}}) == "potential_json");
  CHECK(category(json{{"dimension", 3}}) == "potential_json");
  CHECK(category(json{{"kind", "morse"}, {"dimension", 3}, {"params", {{"rho", -1}}}}) != "none");
  try {
    loadPotentialDocument("/nonexistent/file.json");
    FAIL("expected io error");
  } catch (const DomainError& e) {
    CHECK(e.category() == "io");
  }
}

TEST_CASE("ruelle split validation") {
  using nlohmann::json;
  const json good = json::parse(R"({
    "kind": "morse", "dimension": 3, "params": {"rho": 6},
    "ruelle_split": {
      "phi1": {"kind": "tabulated", "params": {"r": [0.5, 1.0], "v": [0.0, 0.0]}},
      "phi2": {"kind": "morse", "params": {"rho": 6}},
      "stability_constant_phi2": 38.65}})");
  const auto doc = parsePotentialDocument(good);
  REQUIRE(doc.split.has_value());
  CHECK(doc.split->stabilityConstantPhi2 == 38.65);
  json bad = good;
  bad["ruelle_split"]["phi1"]["params"]["v"] = {-1.0, 0.0};
  CHECK_THROWS_AS(parsePotentialDocument(bad), DomainError);
}
