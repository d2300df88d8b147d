#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "clusterrad/potential.hpp"

namespace clusterrad {

struct QuadratureSpec {
  double relTol = 1e-8;
  double absTol = 1e-12;
  /// Minimum truncation radius; 0 picks one from the tail bound.
  double tailCut = 0.0;
  int panelOrder = 16;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  /// Sum of panel refinement differences.
  double errorEstimate = 0.0;
  /// Certified bound on the truncated tail, already included in `value`.
  double tailBound = 0.0;
  /// False when the integrand beyond the cut had no certified bound.
  bool tailVerified = true;
};

/// |g(r)| <= bound(r) for r >= from; an empty bound means g vanishes there.
struct RadialTailSpec {
  double from = 0.0;
  DecayProfile bound;

  static RadialTailSpec zero(double from) { return {from, {}}; }
};

struct IntegralConstants {
  double cBeta = 0.0;
  std::optional<double> cStarBeta;
  std::optional<double> cTildeBeta;
  std::optional<double> vL1;
  /// W_a(d) for the hard-core radius, 0 without a core.
  double sphereVolume = 0.0;
  bool tailVerified = true;
};

/// π^{d/2} a^d / Γ(d/2 + 1).
double sphereVolume(int d, double a);
/// 2 π^{d/2} / Γ(d/2), the area of the unit sphere in R^d.
double sphereSurface(int d);

/// Adaptive Gauss–Legendre on [a, b]: a panel is accepted when the rule on
/// the panel agrees with the rule on its two halves.
QuadResult integrateAdaptive(const std::function<double(double)>& f, double a, double b,
                             const QuadratureSpec& spec);

/// ∫_{R^d} g(|x|) dx = surface(d) ∫_0^∞ r^{d-1} g(r) dr. `breakpoints` become
/// panel edges. Without a tail spec the integral stops at spec.tailCut (or the
/// last breakpoint) and the result is flagged unverified.
QuadResult radialIntegral(const std::function<double(double)>& g, int d, std::vector<double> breakpoints,
                          const std::optional<RadialTailSpec>& tail, const QuadratureSpec& spec);

/// ∫ |e^{-βV(|x|)} - 1| dx.
QuadResult cBetaDetailed(const RadialPotential& p, double beta, const QuadratureSpec& spec = {});
double cBeta(const RadialPotential& p, double beta, const QuadratureSpec& spec = {});
/// W_a(d) + β ∫_{|x|>=a} |V(|x|)| dx; Penrose potentials only.
double cStarBeta(const RadialPotential& p, double beta, const QuadratureSpec& spec = {});
/// ∫ [|e^{-βΦ1}-1| + β|Φ2|] dx.
double cTildeBeta(const RuelleSplit& split, double beta, const QuadratureSpec& spec = {});
/// ∫ |V(|x|)| dx; requires V finite everywhere.
double vL1(const RadialPotential& p, const QuadratureSpec& spec = {});

IntegralConstants integralConstants(const RadialPotential& p, double beta, const std::optional<RuelleSplit>& split,
                                    const QuadratureSpec& spec = {});

}  // namespace clusterrad
