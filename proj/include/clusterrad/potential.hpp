#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "clusterrad/extended_real.hpp"
#include "clusterrad/interaction.hpp"

namespace clusterrad {

/// One term of a decaying radial profile: c r^{-p} or c e^{-k r}.
struct DecayTerm {
  enum class Form { Power, Exponential };
  Form form = Form::Power;
  double coeff = 0.0;
  double param = 0.0;  // exponent p or rate k
};

/// Finite sum of DecayTerms. Used both for envelope functions (xi, eta) and for
/// bounds |V(r)| <= profile(r) on a potential's tail.
struct DecayProfile {
  std::vector<DecayTerm> terms;

  double operator()(double r) const;
  bool empty() const { return terms.empty(); }
  /// ∫_R^∞ r^{d-1} profile(r) dr in closed form; +inf when divergent.
  double tailMoment(int d, double from) const;
  /// Same integral with every coefficient replaced by its absolute value.
  double absTailMoment(int d, double from) const;
  bool integrableAtInfinity(int d) const;
  /// True when ∫_0 r^{d-1} profile(r) dr diverges (a power term with p >= d).
  bool divergesAtOrigin(int d) const;
};

/// Lennard-Jones type envelope: V >= xi on [0, r1], V >= -w on [r1, r2],
/// V >= -eta on [r2, ∞).
struct Envelope {
  double r1 = 0.0;
  double r2 = 0.0;
  double w = 0.0;
  DecayProfile xi;
  DecayProfile eta;
};

/// |V(r)| <= bound(r) for r >= from. `known == false` means no certified tail.
struct TailBound {
  double from = 0.0;
  DecayProfile bound;
  bool known = true;
};

struct RadialGrid {
  std::vector<double> r;

  static RadialGrid logUniform(double rMin, double rMax, int count);
  static RadialGrid uniform(double rMin, double rMax, int count);
};

enum class PotentialKind { HardCore, SquareWell, Morse, LennardJones126, LJType, Tabulated, Sum };

enum class PotentialLabel { Repulsive, Bounded, HardCore, LJType, AbsolutelySummableCandidate };

std::string toString(PotentialKind kind);
std::string toString(PotentialLabel label);

class RadialPotential;

struct HardCoreParams {};
struct SquareWellParams {
  double depth = 0.0;
  double range = 0.0;
};
/// V(r) = e^{2ρ(1-r)} - 2 e^{ρ(1-r)}.
struct MorseParams {
  double rho = 0.0;
};
struct LennardJonesParams {
  double epsilon = 1.0;
  double sigma = 1.0;
};
/// Mie m-n potential, the generic Lennard-Jones type kind.
struct MieParams {
  double epsilon = 1.0;
  double sigma = 1.0;
  double m = 12.0;
  double n = 6.0;
};
/// Linear interpolation on a declared grid; constant below the first node,
/// zero beyond the last one.
struct TabulatedParams {
  RadialGrid grid;
  std::vector<double> values;
};
struct SumParams {
  std::vector<RadialPotential> terms;
};

using PotentialParams = std::variant<HardCoreParams, SquareWellParams, MorseParams,
                                     LennardJonesParams, MieParams, TabulatedParams, SumParams>;

/// Radial pair potential V(r) on R^d. Immutable after construction.
class RadialPotential {
 public:
  static RadialPotential hardCore(int d, double a);
  /// `a == 0` gives a well without a hard core.
  static RadialPotential squareWell(int d, double a, double depth, double range);
  static RadialPotential morse(int d, double rho);
  static RadialPotential lennardJones126(int d, double epsilon = 1.0, double sigma = 1.0);
  static RadialPotential mie(int d, double epsilon, double sigma, double m, double n);
  static RadialPotential tabulated(int d, RadialGrid grid, std::vector<double> values);
  static RadialPotential sum(std::vector<RadialPotential> terms);

  RadialPotential withEnvelope(Envelope env) const;
  /// Overlays a hard core of radius a on any kind.
  RadialPotential withHardCore(double a) const;

  PotentialKind kind() const;
  const PotentialParams& params() const { return params_; }
  int dimension() const { return dimension_; }
  std::optional<double> hardCoreRadius() const { return hardCore_; }
  const std::optional<Envelope>& envelope() const { return envelope_; }

  /// V(r). Throws DomainError for r < 0.
  ExtendedReal evaluate(double r) const;
  ExtendedReal operator()(double r) const { return evaluate(r); }

  /// Radii where V or its derivative jumps, or where it changes sign. Used as
  /// quadrature panel boundaries.
  std::vector<double> breakpoints() const;
  TailBound tailBound() const;
  /// Radius beyond which V is identically zero, if any.
  std::optional<double> finiteRange() const;
  /// Non-integrable divergence at r -> 0 (LJ-type repulsion) without hard core.
  bool divergesAtOrigin() const;
  /// No hard core and no divergence: V(r) < inf for every r >= 0.
  bool finiteEverywhere() const;
  /// Characteristic length used for default grids and search boxes.
  double lengthScale() const;
  /// Short human-readable identifier, e.g. "morse(rho=6)".
  std::string id() const;

 private:
  RadialPotential(PotentialParams params, int d);
  ExtendedReal evaluateBody(double r) const;

  PotentialParams params_;
  int dimension_ = 3;
  std::optional<double> hardCore_;
  std::optional<Envelope> envelope_;
};

/// V = phi1 + phi2 with phi1 >= 0 tempered and phi2 finite, stable, summable.
struct RuelleSplit {
  RadialPotential phi1;
  RadialPotential phi2;
  double stabilityConstantPhi2 = 0.0;

  /// Checks phi1 >= 0 and phi2 finite on a verification grid; throws DomainError.
  void validate(int gridPoints = 2048) const;
};

/// Structural classification; stability is never inferred here.
std::set<PotentialLabel> classify(const RadialPotential& p);

/// Hard core of positive radius with a finite tail beyond it.
bool isPenroseLike(const RadialPotential& p);
/// Grid check of the strict Penrose shape: +inf on [0, a], negative on (a, rMax].
bool isStrictPenroseOnGrid(const RadialPotential& p, double rMax, int points = 4096);

/// Sampled check that V is nonincreasing on [from, to].
bool isNonincreasingOnGrid(const RadialPotential& p, double from, double to, int points = 4096);

using Point = std::vector<double>;

/// Matrix of β V(|x_i - x_j|) for the given configuration.
InteractionMatrix interactionMatrix(const RadialPotential& p, double beta,
                                    std::span<const Point> points);

}  // namespace clusterrad
