#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "clusterrad/errors.hpp"

namespace clusterrad {

/// Gauss–Legendre nodes and weights on [-1, 1].
template <class Real = double>
struct GaussLegendreRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;

  int order() const { return static_cast<int>(nodes.size()); }
};

/// Newton iteration on P_n, seeded with the Tricomi estimate.
template <class Real = double>
GaussLegendreRule<Real> computeGaussLegendre(int n) {
  if (n < 1) throw DomainError("quadrature", "Gauss-Legendre order must be positive");
  GaussLegendreRule<Real> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Real pi = std::numbers::pi_v<Real>;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Real x = std::cos(pi * (i + Real(0.75)) / (n + Real(0.5)));
    Real dp = 1;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= std::numeric_limits<Real>::epsilon() * 4) {
        // one more derivative evaluation at the converged node
        p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        break;
      }
    }
    const Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0;
  return rule;
}

/// Cached rule; the returned reference stays valid for the program lifetime.
template <class Real = double>
const GaussLegendreRule<Real>& gaussLegendre(int n) {
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule<Real>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, computeGaussLegendre<Real>(n)).first;
  return it->second;
}

/// ∫_a^b f with an n-point rule.
template <class Real, class F>
Real integrateGL(F&& f, Real a, Real b, int n) {
  const auto& rule = gaussLegendre<Real>(n);
  const Real half = (b - a) / 2, mid = (a + b) / 2;
  Real s = 0;
  for (int i = 0; i < n; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

}  // namespace clusterrad
