#pragma once

#include <functional>
#include <vector>

namespace clusterrad {

/// Radial profile f(r) evaluated in extended precision.
using RadialFunction = std::function<long double(long double)>;

/// Piecewise-linear function on a strictly increasing grid: constant below the
/// first node, zero beyond the last one.
struct RadialGridFunction {
  std::vector<double> grid;
  std::vector<double> values;
  int dimension = 3;

  double operator()(double r) const;
  double min() const;
  double max() const;
  /// Wraps the interpolant as a RadialFunction.
  RadialFunction asFunction() const;
};

RadialGridFunction sampleOnGrid(const RadialFunction& f, const std::vector<double>& grid, int d, int workers = 1);

struct FourierSpec {
  /// f is treated as zero beyond rMax.
  double rMax = 1.0;
  /// Panel edges where f or a derivative jumps.
  std::vector<double> breakpoints;
  int panelOrder = 16;
  /// Non-oscillatory panel width near the origin; defaults to rMax / 64.
  double baseWidth = 0.0;
  /// Panels may grow to growth * r away from the origin (0 disables).
  double growth = 0.0;
  int workers = 1;
};

/// f̃(p) = ∫_{R^d} f(|x|) e^{ip·x} dx for d = 1 (2∫cos(pr) f dr) and d = 3
/// ((4π/p) ∫ r sin(pr) f dr). Panels never exceed half a period of the kernel.
long double radialFourierAt(const RadialFunction& f, int d, double p, const FourierSpec& spec);

RadialGridFunction radialFourier(const RadialFunction& f, int d, const std::vector<double>& pGrid,
                                 const FourierSpec& spec);
RadialGridFunction radialFourier(const RadialGridFunction& f, const std::vector<double>& pGrid, int workers = 1);

/// ∫_0^rMax r^{d-1} f(r) dr times the unit-sphere area, on GL panels.
long double radialMass(const RadialFunction& f, int d, const FourierSpec& spec);

}  // namespace clusterrad
