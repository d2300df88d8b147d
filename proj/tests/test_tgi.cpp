#include <doctest.h>

#include <cmath>

#include "clusterrad/rng.hpp"
#include "clusterrad/stability.hpp"
#include "clusterrad/tgi.hpp"

using namespace clusterrad;

namespace {

InteractionMatrix randomMatrix(int n, std::uint64_t key, double lo, double hi) {
  CounterRng rng(key);
  InteractionMatrix v(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v.set(i, j, rng.uniform(lo, hi));
  return v;
}

}  // namespace

TEST_CASE("two vertices reduce to e^{-V} - 1") {
  for (double x : {-1.0, 0.3, 2.0}) {
    InteractionMatrix v(2);
    v.set(0, 1, x);
    CHECK(lhsConnectedGraphSum(v) == doctest::Approx(std::expm1(-x)).epsilon(1e-15));
    CHECK(rhsTreeSum(v).value == doctest::Approx(std::expm1(-x)).epsilon(1e-13));
  }
}

TEST_CASE("zero interaction gives zero on both sides") {
  const InteractionMatrix v(4);
  CHECK(lhsConnectedGraphSum(v) == 0.0);
  CHECK(rhsTreeSum(v).value == 0.0);
}

TEST_CASE("identity on random bounded matrices") {
  for (int n = 3; n <= 5; ++n)
    for (std::uint64_t t = 0; t < 3; ++t) {
      const auto v = randomMatrix(n, hashCombine(n, t), -1.0, 2.0);
      const double lhs = lhsConnectedGraphSum(v);
      const auto rhs = rhsTreeSum(v);
      CHECK(std::abs(lhs - rhs.value) <= std::max(1e-8, 1e-6 * std::abs(lhs)));
    }
}

TEST_CASE("tree sum is independent of the worker count") {
  const auto v = randomMatrix(4, 99, -1.0, 2.0);
  TgiQuadrature one, three;
  three.workers = 3;
  CHECK(rhsTreeSum(v, one).value == rhsTreeSum(v, three).value);
}

TEST_CASE("measure normalization is exactly one") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : allTrees(n)) CHECK(measureNormalization(t) == boost::rational<std::int64_t>(1));
}

TEST_CASE("monte carlo tree sum agrees within its error") {
  const auto v = randomMatrix(4, 5, -0.5, 1.0);
  const double lhs = lhsConnectedGraphSum(v);
  const auto mc = rhsTreeSumMonteCarlo(v, 200000, 11);
  CHECK(std::abs(mc.value - lhs) <= 5.0 * mc.errorEstimate + 1e-12);
}

TEST_CASE("regularized hard-core sum approaches the identity") {
  InteractionMatrix v(3);
  v.set(0, 1, ExtendedReal::infinity());
  v.set(0, 2, -0.5);
  v.set(1, 2, 0.2);
  const double lhs = lhsConnectedGraphSum(v);
  const auto values = rhsTreeSumRegularized(v, Regularization::standard());
  REQUIRE(values.size() == 8);
  CHECK(std::abs(values.back().value - lhs) < std::abs(values.front().value - lhs) + 1e-12);
  CHECK(values.back().value == doctest::Approx(lhs).epsilon(1e-3));
  Regularization bad{{4.0, 2.0}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("tree-edge lemma on a path") {
  const LabeledTree path{4, {{0, 1}, {1, 2}, {2, 3}}};
  const auto v = randomMatrix(4, 17, -1.0, 2.0);
  const auto r = lemmaPositCheck(path, v);
  CHECK(r.rhs == doctest::Approx(r.lhs).epsilon(1e-10));
}

TEST_CASE("convex lemma margin is nonnegative with the exact stability constant") {
  const auto v = randomMatrix(5, 23, -1.0, 2.0);
  CHECK(lemmaConvexCheck(v, finiteAlgebraicB(v), 200, 3) >= -1e-12);
}

TEST_CASE("tree inequalities on small instances") {
  InteractionMatrix v(3);
  v.set(0, 1, ExtendedReal::infinity());
  v.set(0, 2, -0.7);
  v.set(1, 2, -0.2);
  const auto pen = treeInequalityPenrose(v, finiteAlgebraicB(v));
  CHECK(pen.holds());
  CHECK(pen.margin() >= 0.0);

  InteractionMatrix phi1(3), phi2(3);
  phi1.set(0, 1, 1.5);
  phi1.set(1, 2, ExtendedReal::infinity());
  phi2.set(0, 1, -0.4);
  phi2.set(0, 2, 0.3);
  phi2.set(1, 2, -0.9);
  CHECK(treeInequalityRuelle(phi1, phi2, finiteAlgebraicB(phi2)).holds());
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(lhsConnectedGraphSum(InteractionMatrix(7)), DomainError);
  CHECK_THROWS_AS(rhsTreeSum(InteractionMatrix(6)), DomainError);
  InteractionMatrix inf(3);
  inf.set(0, 1, ExtendedReal::infinity());
  CHECK_THROWS_AS(rhsTreeSum(inf), DomainError);
}
