#include "clusterrad/bounds.hpp"

#include <cmath>

#include "clusterrad/stability.hpp"

namespace clusterrad {

Radius Radius::fromLog(double logValue) { return {logValue, std::exp(logValue)}; }

std::string toString(Theorem t) {
  switch (t) {
    case Theorem::PenroseRuelle: return "penrose_ruelle";
    case Theorem::BrydgesFederbush: return "brydges_federbush";
    case Theorem::Penrose: return "penrose";
    case Theorem::Ruelle: return "ruelle";
  }
  return "unknown";
}

namespace {

void requirePositive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("parameter", std::string(what) + " must be positive and finite");
}

void requireNonnegative(double x, const char* what) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw DomainError("parameter", std::string(what) + " must be nonnegative and finite");
}

Radius radiusFromParts(double exponent, double constant) {
  return Radius::fromLog(-(exponent + 1.0) - std::log(constant));
}

}  // namespace

Radius penroseRuelleRadius(double b, double cBeta, double beta) {
  requireNonnegative(b, "B");
  requirePositive(cBeta, "C(beta)");
  requirePositive(beta, "beta");
  return radiusFromParts(2.0 * beta * b, cBeta);
}

Radius brydgesFederbushRadius(double b, double vL1, double beta) {
  requireNonnegative(b, "B");
  requirePositive(vL1, "||V||_1");
  requirePositive(beta, "beta");
  return radiusFromParts(beta * b, beta * vL1);
}

Radius penrosePotentialRadius(double b, double cStarBeta, double beta) {
  requireNonnegative(b, "B");
  requirePositive(cStarBeta, "C*(beta)");
  requirePositive(beta, "beta");
  return radiusFromParts(beta * b, cStarBeta);
}

Radius ruellePotentialRadius(double btilde, double cTildeBeta, double beta) {
  requireNonnegative(btilde, "Btilde");
  requirePositive(cTildeBeta, "C~(beta)");
  requirePositive(beta, "beta");
  return radiusFromParts(beta * btilde, cTildeBeta);
}

Radius coefficientBound(Theorem theorem, int n, double b, double constant, double beta) {
  if (n < 1) throw DomainError("range", "coefficient order must be positive");
  requireNonnegative(b, "stability constant");
  requirePositive(beta, "beta");
  requireNonnegative(constant, "integral constant");
  double exponent = 0.0;
  double base = constant;
  switch (theorem) {
    case Theorem::PenroseRuelle: exponent = 2.0 * beta * b * (n - 1); break;
    case Theorem::BrydgesFederbush:
      exponent = beta * b * (n - 1);
      base = beta * constant;
      break;
    case Theorem::Penrose: exponent = beta * b * n; break;
    case Theorem::Ruelle: exponent = beta * b * n; break;
  }
  if (n == 1) return Radius::fromLog(exponent);
  if (base == 0.0) return {-INFINITY, 0.0};
  const double logBound = exponent + (n - 2) * std::log(n) + (n - 1) * std::log(base) - std::lgamma(n + 1.0);
  return Radius::fromLog(logBound);
}

std::optional<Radius> BoundReport::radius(Theorem t) const {
  switch (t) {
    case Theorem::PenroseRuelle: return penroseRuelle;
    case Theorem::BrydgesFederbush: return brydgesFederbush;
    case Theorem::Penrose: return penrose;
    case Theorem::Ruelle: return ruelle;
  }
  return std::nullopt;
}

BoundReport compareReport(const RadialPotential& p, double beta, const std::optional<RuelleSplit>& split,
                          std::optional<double> b, const std::optional<RuelleInputs>& ruelle,
                          const QuadratureSpec& spec) {
  requirePositive(beta, "beta");
  BoundReport r;
  r.potentialId = p.id();
  r.beta = beta;
  const auto labels = classify(p);
  r.ljType = labels.contains(PotentialLabel::LJType);

  auto& in = r.inputs;
  in.beta = beta;
  if (b) {
    requireNonnegative(*b, "B");
    in.B = b;
    in.bSource = "supplied";
  } else if (labels.contains(PotentialLabel::Repulsive)) {
    in.B = 0.0;
    in.bSource = "repulsive";
  } else if (const auto packing = packingUpperBound(p)) {
    in.B = packing;
    in.bSource = "packing upper bound";
  }

  const auto constants = integralConstants(p, beta, split, spec);
  in.cBeta = constants.cBeta;
  in.cStarBeta = constants.cStarBeta;
  in.cTildeBeta = constants.cTildeBeta;
  in.vL1 = constants.vL1;
  in.tailVerified = constants.tailVerified;
  if (split) {
    in.Btilde = split->stabilityConstantPhi2;
    in.ruelleSource = "ruelle_split";
  } else if (ruelle) {
    in.Btilde = ruelle->btilde;
    in.cTildeBeta = ruelle->cTilde;
    in.ruelleSource = ruelle->source;
  }

  if (in.B) {
    if (in.cBeta > 0.0) r.penroseRuelle = penroseRuelleRadius(*in.B, in.cBeta, beta);
    if (in.vL1 && *in.vL1 > 0.0) r.brydgesFederbush = brydgesFederbushRadius(*in.B, *in.vL1, beta);
    if (in.cStarBeta && *in.cStarBeta > 0.0) r.penrose = penrosePotentialRadius(*in.B, *in.cStarBeta, beta);
  }
  if (in.Btilde && in.cTildeBeta && *in.cTildeBeta > 0.0)
    r.ruelle = ruellePotentialRadius(*in.Btilde, *in.cTildeBeta, beta);

  for (int n = 1; n <= kMaxCoefficientOrder; ++n) {
    if (r.penroseRuelle)
      r.coefficientBounds.push_back({Theorem::PenroseRuelle, n, coefficientBound(Theorem::PenroseRuelle, n, *in.B, in.cBeta, beta)});
    if (r.brydgesFederbush)
      r.coefficientBounds.push_back(
          {Theorem::BrydgesFederbush, n, coefficientBound(Theorem::BrydgesFederbush, n, *in.B, *in.vL1, beta)});
    if (r.penrose)
      r.coefficientBounds.push_back({Theorem::Penrose, n, coefficientBound(Theorem::Penrose, n, *in.B, *in.cStarBeta, beta)});
    if (r.ruelle)
      r.coefficientBounds.push_back(
          {Theorem::Ruelle, n, coefficientBound(Theorem::Ruelle, n, *in.Btilde, *in.cTildeBeta, beta)});
  }

  const Theorem all[] = {Theorem::PenroseRuelle, Theorem::BrydgesFederbush, Theorem::Penrose, Theorem::Ruelle};
  for (Theorem a : all)
    for (Theorem c : all) {
      if (a == c) continue;
      const auto ra = r.radius(a), rc = r.radius(c);
      if (ra && rc) r.ratios.push_back({a, c, Radius::fromLog(ra->logValue - rc->logValue)});
    }
  if (!r.ljType) {
    for (Theorem a : all) {
      const auto ra = r.radius(a);
      if (ra && (!r.best || ra->logValue > r.radius(*r.best)->logValue)) r.best = a;
    }
  }
  return r;
}

bool verifyReport(const BoundReport& report, double relTol) {
  const auto& in = report.inputs;
  auto same = [&](const std::optional<Radius>& stored, const Radius& fresh) {
    return stored && std::abs(stored->logValue - fresh.logValue) <= relTol * std::max(1.0, std::abs(fresh.logValue));
  };
  if (report.penroseRuelle && !same(report.penroseRuelle, penroseRuelleRadius(*in.B, in.cBeta, in.beta))) return false;
  if (report.brydgesFederbush && !same(report.brydgesFederbush, brydgesFederbushRadius(*in.B, *in.vL1, in.beta)))
    return false;
  if (report.penrose && !same(report.penrose, penrosePotentialRadius(*in.B, *in.cStarBeta, in.beta))) return false;
  if (report.ruelle && !same(report.ruelle, ruellePotentialRadius(*in.Btilde, *in.cTildeBeta, in.beta))) return false;
  return true;
}

}  // namespace clusterrad
