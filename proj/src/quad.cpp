#include "clusterrad/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clusterrad/gauss_legendre.hpp"

namespace clusterrad {

void QuadratureSpec::validate() const {
  if (!(relTol > 0.0) || !(absTol > 0.0)) throw DomainError("quadrature", "tolerances must be positive");
  if (panelOrder < 2) throw DomainError("quadrature", "panel order must be at least 2");
  if (tailCut < 0.0) throw DomainError("quadrature", "tail cut must be nonnegative");
}

double sphereVolume(int d, double a) {
  if (d < 1) throw DomainError("dimension", "dimension must be positive");
  return std::pow(std::numbers::pi, d / 2.0) * std::pow(a, d) / std::tgamma(d / 2.0 + 1.0);
}

double sphereSurface(int d) {
  if (d < 1) throw DomainError("dimension", "dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

namespace {

constexpr int kMaxDepth = 40;

struct Accumulator {
  double value = 0.0;
  double error = 0.0;
};

void adaptivePanel(const std::function<double(double)>& f, double a, double b, double whole, double absTol,
                   const QuadratureSpec& spec, int depth, Accumulator& acc) {
  const double mid = 0.5 * (a + b);
  const double left = integrateGL<double>(f, a, mid, spec.panelOrder);
  const double right = integrateGL<double>(f, mid, b, spec.panelOrder);
  const double halves = left + right;
  const double diff = std::abs(halves - whole);
  if (diff <= std::max(absTol, spec.relTol * std::abs(halves)) || depth >= kMaxDepth || mid <= a || mid >= b) {
    acc.value += halves;
    acc.error += diff;
    return;
  }
  adaptivePanel(f, a, mid, left, absTol / 2, spec, depth + 1, acc);
  adaptivePanel(f, mid, b, right, absTol / 2, spec, depth + 1, acc);
}

}  // namespace

QuadResult integrateAdaptive(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  QuadResult out;
  if (b <= a) return out;
  Accumulator acc;
  adaptivePanel(f, a, b, integrateGL<double>(f, a, b, spec.panelOrder), spec.absTol, spec, 0, acc);
  out.value = acc.value;
  out.errorEstimate = acc.error;
  return out;
}

QuadResult radialIntegral(const std::function<double(double)>& g, int d, std::vector<double> breakpoints,
                          const std::optional<RadialTailSpec>& tail, const QuadratureSpec& spec) {
  spec.validate();
  const double surface = sphereSurface(d);
  auto integrand = [&](double r) { return std::pow(r, d - 1) * g(r); };

  std::erase_if(breakpoints, [](double r) { return !(r > 0.0) || !std::isfinite(r); });
  if (tail && tail->from > 0.0) breakpoints.push_back(tail->from);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  QuadResult out;
  std::vector<double> edges{0.0};
  edges.insert(edges.end(), breakpoints.begin(), breakpoints.end());
  const double lastEdge = edges.back();

  auto addPanels = [&](const std::vector<double>& e) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      const auto r = integrateAdaptive(integrand, e[i], e[i + 1], spec);
      out.value += r.value;
      out.errorEstimate += r.errorEstimate;
    }
  };
  addPanels(edges);

  if (tail && tail->bound.empty()) {
    // integrand vanishes beyond tail->from
  } else if (tail) {
    // geometric panels outward until the certified remainder is negligible
    double cut = std::max({lastEdge, spec.tailCut, tail->from});
    if (cut <= 0.0) cut = 1.0;
    double remainder = tail->bound.absTailMoment(d, cut);
    if (!std::isfinite(remainder)) throw DomainError("temperedness", "tail bound is not integrable");
    std::vector<double> outer{cut};
    const double lengthScale = std::max(cut, 1.0);
    for (int k = 0; k < 200; ++k) {
      const double target = 1e-3 * spec.relTol * std::abs(out.value) + spec.absTol;
      if (remainder <= target) break;
      const double next = outer.back() + std::max(outer.back(), lengthScale) * 0.5;
      outer.push_back(next);
      remainder = tail->bound.absTailMoment(d, next);
    }
    outer.insert(outer.begin(), lastEdge);
    if (outer.size() > 1 && outer[1] <= outer[0]) outer.erase(outer.begin());
    addPanels(outer);
    out.tailBound = remainder;
    out.value += remainder;
  } else {
    const double cut = std::max(lastEdge, spec.tailCut);
    addPanels({lastEdge, cut});
    out.tailVerified = false;
  }
  out.value *= surface;
  out.errorEstimate *= surface;
  out.tailBound *= surface;
  return out;
}

namespace {

/// Bound for |e^{-βV}-1| beyond `from` given |V| <= T there with T decreasing:
/// |e^{-x}-1| <= |x| e^{|x|} <= β e^{β T(from)} T(r).
RadialTailSpec mayerTail(const TailBound& tb, double beta) {
  if (!tb.known) throw DomainError("temperedness", "potential has no certified tail");
  RadialTailSpec spec{tb.from, tb.bound};
  if (tb.bound.empty()) return spec;
  const double scale = beta * std::exp(beta * tb.bound(tb.from));
  for (auto& t : spec.bound.terms) t.coeff = std::abs(t.coeff) * scale;
  return spec;
}

RadialTailSpec scaledTail(const TailBound& tb, double factor) {
  if (!tb.known) throw DomainError("temperedness", "potential has no certified tail");
  RadialTailSpec spec{tb.from, tb.bound};
  for (auto& t : spec.bound.terms) t.coeff = std::abs(t.coeff) * factor;
  return spec;
}

void checkBeta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("parameter", "beta must be positive and finite");
}

}  // namespace

QuadResult cBetaDetailed(const RadialPotential& p, double beta, const QuadratureSpec& spec) {
  checkBeta(beta);
  auto g = [&](double r) { return std::abs(mayerFactor(beta * p.evaluate(r))); };
  return radialIntegral(g, p.dimension(), p.breakpoints(), mayerTail(p.tailBound(), beta), spec);
}

double cBeta(const RadialPotential& p, double beta, const QuadratureSpec& spec) {
  return cBetaDetailed(p, beta, spec).value;
}

double cStarBeta(const RadialPotential& p, double beta, const QuadratureSpec& spec) {
  checkBeta(beta);
  if (!isPenroseLike(p)) throw DomainError("classification", "C*(beta) needs a Penrose potential (hard core)");
  const double a = *p.hardCoreRadius();
  auto g = [&](double r) { return r <= a ? 0.0 : beta * std::abs(p.evaluate(r).value()); };
  const auto tail = scaledTail(p.tailBound(), beta);
  return sphereVolume(p.dimension(), a) + radialIntegral(g, p.dimension(), p.breakpoints(), tail, spec).value;
}

double cTildeBeta(const RuelleSplit& split, double beta, const QuadratureSpec& spec) {
  checkBeta(beta);
  if (split.phi2.divergesAtOrigin() || !split.phi2.finiteEverywhere())
    throw DomainError("summability", "phi2 must be finite everywhere");
  const auto t1 = mayerTail(split.phi1.tailBound(), beta);
  const auto t2 = scaledTail(split.phi2.tailBound(), beta);
  RadialTailSpec tail{std::max(t1.from, t2.from), t1.bound};
  tail.bound.terms.insert(tail.bound.terms.end(), t2.bound.terms.begin(), t2.bound.terms.end());
  if (!tail.bound.integrableAtInfinity(split.phi2.dimension()))
    throw DomainError("summability", "phi2 is not absolutely integrable");
  auto g = [&](double r) {
    return std::abs(mayerFactor(beta * split.phi1.evaluate(r))) + beta * std::abs(split.phi2.evaluate(r).value());
  };
  auto breaks = split.phi1.breakpoints();
  const auto b2 = split.phi2.breakpoints();
  breaks.insert(breaks.end(), b2.begin(), b2.end());
  return radialIntegral(g, split.phi1.dimension(), breaks, tail, spec).value;
}

double vL1(const RadialPotential& p, const QuadratureSpec& spec) {
  if (!p.finiteEverywhere()) throw DomainError("summability", "||V||_1 needs a potential finite everywhere");
  const auto tail = scaledTail(p.tailBound(), 1.0);
  if (!tail.bound.integrableAtInfinity(p.dimension()))
    throw DomainError("summability", "potential is not absolutely integrable");
  auto g = [&](double r) { return std::abs(p.evaluate(r).value()); };
  return radialIntegral(g, p.dimension(), p.breakpoints(), tail, spec).value;
}

IntegralConstants integralConstants(const RadialPotential& p, double beta, const std::optional<RuelleSplit>& split,
                                    const QuadratureSpec& spec) {
  IntegralConstants out;
  const auto c = cBetaDetailed(p, beta, spec);
  out.cBeta = c.value;
  out.tailVerified = c.tailVerified;
  if (p.hardCoreRadius()) out.sphereVolume = sphereVolume(p.dimension(), *p.hardCoreRadius());
  if (isPenroseLike(p)) out.cStarBeta = cStarBeta(p, beta, spec);
  if (split) out.cTildeBeta = cTildeBeta(*split, beta, spec);
  if (p.finiteEverywhere()) {
    const auto tb = p.tailBound();
    if (tb.known && tb.bound.integrableAtInfinity(p.dimension())) out.vL1 = vL1(p, spec);
  }
  return out;
}

}  // namespace clusterrad
