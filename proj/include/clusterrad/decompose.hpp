#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clusterrad/fourier.hpp"
#include "clusterrad/potential.hpp"
#include "clusterrad/quad.hpp"

namespace clusterrad {

/// ψ(r) = c exp(-1/(1-r²)) for r < 1, with ∫_{R^d} ψ = 1.
class Mollifier {
 public:
  explicit Mollifier(int d);

  int dimension() const { return d_; }
  double normalization() const { return c_; }
  long double operator()(long double r) const;
  /// ψ_a(r) = a^{-d} ψ(r/a).
  long double scaled(long double r, double a) const;
  /// ψ̃(q).
  long double transform(double q) const;
  /// ∫ ψ_a, recomputed on an independent panel layout.
  long double mass(double a) const;

  static std::string description() { return "psi(r) = c exp(-1/(1-r^2)) for r < 1"; }

 private:
  int d_;
  long double c_ = 1.0L;
};

struct BumpChainOptions {
  /// χ̃ is tabulated on [0, chiTableMax] for the Fourier-side convolution.
  double chiTableMax = 200.0;
  double chiTablePanel = 0.5;
  int maxSearchPoints = 2001;
  int workers = 1;
};

/// χ(r) = exp(-1/(1-4r²)) for r < 1/2, χ1 = χ∗χ, Ψ = transform of (p²+1)^{-d},
/// χ2 = χ1 Ψ, K = max χ2, χ3 = χ2 / K.
class BumpChain {
 public:
  explicit BumpChain(int d, const BumpChainOptions& options = {});

  int dimension() const { return d_; }
  static long double chi(long double r);
  long double chiTilde(double p) const;
  long double chi1(long double r) const;
  /// Ψ(r); numerical transform for d = 3, π e^{-r} for d = 1.
  long double bigPsi(long double r) const;
  long double chi2(long double r) const { return chi1(r) * bigPsi(r); }
  long double chi3(long double r) const { return chi2(r) / k_; }
  double K() const { return static_cast<double>(k_); }
  /// χ̃2(q) = ∫ χ̃(p')² [(q-p')² + 1]^{-d} dp', always positive.
  long double chi2Tilde(double q) const;
  long double chi3Tilde(double q) const { return chi2Tilde(q) / k_; }

  static std::string description() { return "chi(r) = exp(-1/(1-4r^2)) for r < 1/2"; }

 private:
  int d_;
  long double k_ = 1.0L;
  std::vector<long double> tableP_, tableW_, tableChi2_;  // GL nodes, weights, χ̃²
};

struct DecomposeOptions {
  int aCandidates = 64;
  /// Smallest candidate is aMinFraction · r1.
  double aMinFraction = 1e-3;
  int rGridPoints = 1024;
  /// q-grid for C' and C'' is [0, qMax].
  double qMax = 300.0;
  int qPoints = 1201;
  /// Fourier report grid is p ∈ [0, pMaxTimesA / a].
  double pMaxTimesA = 40.0;
  int pPoints = 401;
  /// η2 is transformed on [0, r2 + a + etaCut].
  double etaCut = 100.0;
  int workers = 1;
};

struct DecompositionConstants {
  double C1 = 0.0;
  double C2 = 0.0;
  double Cprime = 0.0;
  double Cdoubleprime = 0.0;
  double Cstar = 0.0;
  double K = 0.0;
  double Htail = 0.0;
  double C = 0.0;
  double eta2Norm = 0.0;
  double mollifierMass = 0.0;
};

struct FourierReport {
  std::vector<double> p;
  /// Ψ̂2(p) = a^d ξ(a) χ̃3(ap) - η̂2(p) ψ̃(ap).
  std::vector<double> inner;
  double min = 0.0;
  double max = 0.0;
};

struct DecompositionChecks {
  bool phi1Nonnegative = true;
  bool psi1Nonnegative = true;
  bool unoHolds = true;  // V_a >= -η3
  bool dueHolds = true;  // ξ1 <= V_a on [0, r1], ξ1 = 0 beyond a
  bool eta3AboveEta1 = true;
  bool fourierNonnegative = true;  // sampled, not a proof
};

struct DecompositionResult {
  /// Finite everywhere and summable: Φ1 = 0, Φ2 = V without construction.
  bool degenerate = false;
  bool success = false;
  std::string failure;
  double a = 0.0;
  /// max over candidates of ξ(a) a^d, reported on failure.
  double bestXiMoment = 0.0;
  std::vector<double> aCandidates;
  RadialGridFunction Va, eta1, eta3, xi1, psi1, psi2, phi1, phi2;
  DecompositionConstants constants;
  FourierReport fourier;
  DecompositionChecks checks;
  /// Ψ2(0)/2, an upper bound on the stability constant of Φ2 = V_a.
  std::optional<double> btilde;
  std::string psiDescription = Mollifier::description();
  std::string chiDescription = BumpChain::description();
};

/// V_a(r) = V(max(r, a)); LJ-type potentials only.
RadialFunction truncated(const RadialPotential& p, double a);
RadialGridFunction truncate(const RadialPotential& p, double a, const std::vector<double>& grid);

DecompositionResult decompose(const RadialPotential& p, const DecomposeOptions& options = {});

/// C̃(β) of the outer split Φ1 = V - V_a, Φ2 = V_a.
double cTildeOfTruncation(const RadialPotential& p, double a, double beta, const QuadratureSpec& spec = {});

}  // namespace clusterrad
