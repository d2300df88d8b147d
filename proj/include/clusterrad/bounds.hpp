#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterrad/potential.hpp"
#include "clusterrad/quad.hpp"

namespace clusterrad {

/// A positive quantity kept as its logarithm; `value` may underflow to 0
/// while `logValue` stays exact.
struct Radius {
  double logValue = 0.0;
  double value = 0.0;

  static Radius fromLog(double logValue);
};

enum class Theorem { PenroseRuelle, BrydgesFederbush, Penrose, Ruelle };

std::string toString(Theorem t);

/// 1 / (e^{2βB+1} C(β)).
Radius penroseRuelleRadius(double b, double cBeta, double beta);
/// 1 / (e^{βB+1} β ‖V‖₁).
Radius brydgesFederbushRadius(double b, double vL1, double beta);
/// 1 / (e^{βB+1} C*(β)).
Radius penrosePotentialRadius(double b, double cStarBeta, double beta);
/// 1 / (e^{βB̃+1} C̃(β)).
Radius ruellePotentialRadius(double btilde, double cTildeBeta, double beta);

/// Bound on |C_n|: e^{kβB·m} n^{n-2} K^{n-1} / n!, where (k, m, K) depend on
/// the theorem: (2, n-1, C), (1, n-1, β‖V‖), (1, n, C*), (1, n, C̃) with B̃
/// for the last one. `constant` is the theorem's integral constant and `b`
/// its stability input.
Radius coefficientBound(Theorem theorem, int n, double b, double constant, double beta);

struct BoundInputs {
  double beta = 1.0;
  std::optional<double> B;
  std::optional<double> Btilde;
  double cBeta = 0.0;
  std::optional<double> cStarBeta;
  std::optional<double> cTildeBeta;
  std::optional<double> vL1;
  bool tailVerified = true;
  std::string bSource;
  std::string ruelleSource;
};

struct CoefficientBoundEntry {
  Theorem theorem;
  int n;
  Radius bound;
};

struct RadiusRatio {
  Theorem numerator;
  Theorem denominator;
  Radius ratio;
};

struct RuelleInputs {
  double btilde = 0.0;
  double cTilde = 0.0;
  std::string source;
};

struct BoundReport {
  std::string potentialId;
  double beta = 1.0;
  BoundInputs inputs;
  std::optional<Radius> penroseRuelle;
  std::optional<Radius> brydgesFederbush;
  std::optional<Radius> penrose;
  std::optional<Radius> ruelle;
  std::vector<CoefficientBoundEntry> coefficientBounds;
  std::vector<RadiusRatio> ratios;
  /// Largest radius; left empty for Lennard-Jones type inputs.
  std::optional<Theorem> best;
  bool ljType = false;

  std::optional<Radius> radius(Theorem t) const;
};

constexpr int kMaxCoefficientOrder = 8;

/// All applicable radii, coefficient bounds for n <= 8 and pairwise ratios.
/// `b` is the stability constant of V; when absent the report falls back to
/// 0 for repulsive potentials and to the packing bound for hard-core
/// finite-range ones, otherwise the B-dependent radii are omitted.
BoundReport compareReport(const RadialPotential& p, double beta, const std::optional<RuelleSplit>& split,
                          std::optional<double> b, const std::optional<RuelleInputs>& ruelle = std::nullopt,
                          const QuadratureSpec& spec = {});

/// Recomputes every radius from the stored inputs; true when all agree.
bool verifyReport(const BoundReport& report, double relTol = 1e-12);

}  // namespace clusterrad
