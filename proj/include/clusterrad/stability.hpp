#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterrad/fourier.hpp"
#include "clusterrad/interaction.hpp"
#include "clusterrad/potential.hpp"

namespace clusterrad {

constexpr int kMaxSubsetScanVertices = 20;

/// max(0, max over compatible X with |X| >= 2 of -E(X)/|X|), gray-code scan.
double finiteAlgebraicB(const InteractionMatrix& v);

struct StabilityEstimate {
  double lowerBound = 0.0;
  std::optional<double> upperBound;
  /// Configuration with -U/N equal to lowerBound.
  std::vector<Point> witness;
  std::string method;
};

struct StabilitySearchOptions {
  int nMax = 8;
  int restarts = 4;
  std::uint64_t seed = 1;
  int maxSweeps = 4000;
  int workers = 1;
};

/// Total pair energy; +inf when two points overlap a hard core.
ExtendedReal configurationEnergy(const RadialPotential& p, const std::vector<Point>& points);

/// Multi-start coordinate descent for N = 2..nMax. The result never
/// decreases when nMax or restarts grow: every (N, restart) job has its own seed.
StabilityEstimate configurationLowerBound(const RadialPotential& p, const StabilitySearchOptions& options);

/// Hard core a plus finite range R: a particle has at most (2R/a + 1)^d - 1
/// neighbours in range, so B <= w k / 2 with w = max(0, -min V).
std::optional<double> packingUpperBound(const RadialPotential& p);

struct RuelleCriterionResult {
  bool applicable = false;
  /// Φ2(0)/2 when applicable.
  double bound = 0.0;
  double minTransform = 0.0;
  double maxTransform = 0.0;
};

/// Positive-definiteness criterion on a sampled transform: applicable when
/// min ≥ -relTol · max.
RuelleCriterionResult ruelleCriterionUpperBound(double phi2AtZero, const RadialGridFunction& transform,
                                                double relTol = 1e-6);
RuelleCriterionResult ruelleCriterionUpperBound(const RadialFunction& phi2, int d, const std::vector<double>& pGrid,
                                                const FourierSpec& spec, double relTol = 1e-6);

}  // namespace clusterrad
