#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterrad/potential.hpp"

namespace clusterrad {

enum class MayerMethod { Exact1D, MonteCarlo };

std::string toString(MayerMethod m);
MayerMethod parseMayerMethod(const std::string& name);

/// Λ = [0, L]^d.
struct Box {
  int d = 1;
  double side = 64.0;

  double volume() const;
};

struct MayerEstimate {
  int n = 0;
  double value = 0.0;
  double standardError = 0.0;
  std::uint64_t samples = 0;
  MayerMethod method = MayerMethod::Exact1D;
  double boxSide = 0.0;
  /// Interaction range over box side exceeds 0.1, so the pinned estimator may
  /// differ from the free-boundary integral.
  bool boundaryFlag = false;
};

struct MayerOptions {
  MayerMethod method = MayerMethod::Exact1D;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  int workers = 1;
  double relTol = 1e-10;
};

/// C_n(β, Λ) with x_1 pinned at the centre of the box, n = 2..5.
MayerEstimate mayerCoefficient(const RadialPotential& p, double beta, const Box& box, int n,
                               const MayerOptions& options = {});

/// Infinite-volume coefficient of hard rods of length a: (-n a)^{n-1} / n!.
double tonksOracle(double a, int n);

/// 1 / max_n |C_n|^{1/n}. A root-test diagnostic, not a rigorous bound.
double radiusLowerBoundEmpirical(const std::vector<MayerEstimate>& estimates);

}  // namespace clusterrad
