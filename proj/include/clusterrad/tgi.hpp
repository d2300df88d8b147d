#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "clusterrad/combinat.hpp"
#include "clusterrad/interaction.hpp"

namespace clusterrad {

/// One summand of the interpolation measure μ_τ.
struct TgiMeasureTerm {
  CompatibleSequence seq;
  std::vector<Edge> treeEdges;
};

std::vector<TgiMeasureTerm> measureTerms(const LabeledTree& tree);

/// Σ_X Π_s 1/b_s in exact arithmetic; equals 1 for every tree.
boost::rational<std::int64_t> measureNormalization(const LabeledTree& tree);

struct TgiQuadrature {
  /// Gauss–Legendre nodes per axis; the error estimate compares with order - 8.
  int order = 24;
  int workers = 1;
};

struct TgiValue {
  double value = 0.0;
  double errorEstimate = 0.0;
};

/// Σ_{g ∈ G_n} Π_{E_g} (e^{-V_ij} - 1), exact enumeration, n <= 6.
double lhsConnectedGraphSum(const InteractionMatrix& v);

/// Tree side of the identity for a bounded matrix, n <= 5.
TgiValue rhsTreeSum(const InteractionMatrix& v, const TgiQuadrature& quad = {});

/// Seeded Monte Carlo version of rhsTreeSum for n up to 6; errorEstimate is
/// the standard error.
TgiValue rhsTreeSumMonteCarlo(const InteractionMatrix& v, std::uint64_t samples, std::uint64_t seed);

struct Regularization {
  std::vector<double> schedule;

  /// H = 2^k for k = 3..10.
  static Regularization standard();
  void validate() const;
};

/// rhsTreeSum of V^H for each H in the schedule.
std::vector<TgiValue> rhsTreeSumRegularized(const InteractionMatrix& v, const Regularization& reg,
                                            const TgiQuadrature& quad = {});

struct LemmaPositResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double errorEstimate = 0.0;
};

/// lhs = Π_{E_τ} |e^{-V_ij} - 1|, rhs = Π_{E_τ} |V_ij| ∫dμ_τ e^{-Σ_{E_τ} t_n(ij) V_ij}.
/// Only tree edges enter the exponent.
LemmaPositResult lemmaPositCheck(const LabeledTree& tree, const InteractionMatrix& v, const TgiQuadrature& quad = {});

/// Minimum over sampled (t, X) of Σ_{i<j} t_n(ij) V_ij + nB. Every sampled
/// order also contributes its all-ones corner.
double lemmaConvexCheck(const InteractionMatrix& v, double b, int samples, std::uint64_t seed);

struct TreeInequalityResult {
  double lhsAbs = 0.0;
  double rhsBound = 0.0;

  double margin() const { return rhsBound - lhsAbs; }
  bool holds(double tol = 1e-9) const { return lhsAbs <= rhsBound + tol; }
};

/// |Σ_g Π (e^{-V}-1)| against e^{nB} Σ_τ Π F_ij, F_ij = 1 on incompatible pairs
/// and |V_ij| otherwise.
TreeInequalityResult treeInequalityPenrose(const InteractionMatrix& v, double b);

/// V = phi1 + phi2 against e^{nB0} Σ_τ Π [|e^{-Φ1}-1| + |Φ2|].
TreeInequalityResult treeInequalityRuelle(const InteractionMatrix& phi1, const InteractionMatrix& phi2, double b0);

}  // namespace clusterrad
