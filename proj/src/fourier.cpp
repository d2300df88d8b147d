#include "clusterrad/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clusterrad/errors.hpp"
#include "clusterrad/gauss_legendre.hpp"
#include "clusterrad/parallel.hpp"

namespace clusterrad {

double RadialGridFunction::operator()(double r) const {
  if (grid.empty()) return 0.0;
  if (r <= grid.front()) return values.front();
  if (r > grid.back()) return 0.0;
  const auto it = std::lower_bound(grid.begin(), grid.end(), r);
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  if (grid[hi] == r) return values[hi];
  const double t = (r - grid[hi - 1]) / (grid[hi] - grid[hi - 1]);
  return values[hi - 1] + t * (values[hi] - values[hi - 1]);
}

double RadialGridFunction::min() const { return *std::min_element(values.begin(), values.end()); }
double RadialGridFunction::max() const { return *std::max_element(values.begin(), values.end()); }

RadialFunction RadialGridFunction::asFunction() const {
  return [self = *this](long double r) { return static_cast<long double>(self(static_cast<double>(r))); };
}

RadialGridFunction sampleOnGrid(const RadialFunction& f, const std::vector<double>& grid, int d, int workers) {
  RadialGridFunction out{grid, std::vector<double>(grid.size()), d};
  parallelFor(grid.size(), workers, [&](std::size_t i) { out.values[i] = static_cast<double>(f(grid[i])); });
  return out;
}

namespace {

std::vector<long double> panelEdges(const FourierSpec& spec, double p) {
  if (!(spec.rMax > 0.0)) throw DomainError("fourier", "rMax must be positive");
  std::vector<double> cuts{0.0, spec.rMax};
  for (double b : spec.breakpoints)
    if (b > 0.0 && b < spec.rMax) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const long double base = spec.baseWidth > 0.0 ? spec.baseWidth : spec.rMax / 64.0;
  const long double period = p > 0.0 ? std::numbers::pi_v<long double> / p : INFINITY;
  std::vector<long double> edges{0.0L};
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    long double x = cuts[k];
    const long double end = cuts[k + 1];
    while (x < end) {
      const long double width = std::min(period, std::max(base, static_cast<long double>(spec.growth) * x));
      const long double next = std::min(end, x + width);
      // avoid a sliver at the end of a segment
      x = (end - next < 1e-3L * width) ? end : next;
      edges.push_back(x);
    }
  }
  return edges;
}

void checkDimension(int d) {
  if (d != 1 && d != 3) throw DomainError("dimension", "radial Fourier transform supports d = 1 and d = 3 only");
}

}  // namespace

long double radialFourierAt(const RadialFunction& f, int d, double p, const FourierSpec& spec) {
  checkDimension(d);
  if (p < 0.0) throw DomainError("fourier", "momentum must be nonnegative");
  const auto edges = panelEdges(spec, p);
  const auto& gl = gaussLegendre<long double>(spec.panelOrder);
  const long double lp = p;
  long double sum = 0.0L;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const long double half = (edges[k + 1] - edges[k]) / 2, mid = (edges[k + 1] + edges[k]) / 2;
    long double panel = 0.0L;
    for (int i = 0; i < spec.panelOrder; ++i) {
      const long double r = mid + half * gl.nodes[i];
      long double kernel;
      if (d == 1)
        kernel = std::cos(lp * r);
      else
        kernel = p > 0.0 ? r * std::sin(lp * r) : r * r;
      panel += gl.weights[i] * kernel * f(r);
    }
    sum += panel * half;
  }
  if (d == 1) return 2.0L * sum;
  const long double fourPi = 4.0L * std::numbers::pi_v<long double>;
  return p > 0.0 ? fourPi * sum / lp : fourPi * sum;
}

RadialGridFunction radialFourier(const RadialFunction& f, int d, const std::vector<double>& pGrid,
                                 const FourierSpec& spec) {
  checkDimension(d);
  RadialGridFunction out{pGrid, std::vector<double>(pGrid.size()), d};
  parallelFor(pGrid.size(), spec.workers,
              [&](std::size_t i) { out.values[i] = static_cast<double>(radialFourierAt(f, d, pGrid[i], spec)); });
  return out;
}

RadialGridFunction radialFourier(const RadialGridFunction& f, const std::vector<double>& pGrid, int workers) {
  if (f.grid.empty()) throw DomainError("fourier", "empty grid function");
  FourierSpec spec;
  spec.rMax = f.grid.back();
  spec.breakpoints = f.grid;
  spec.panelOrder = 8;
  spec.baseWidth = spec.rMax;
  spec.workers = workers;
  return radialFourier(f.asFunction(), f.dimension, pGrid, spec);
}

long double radialMass(const RadialFunction& f, int d, const FourierSpec& spec) {
  if (d < 1) throw DomainError("dimension", "dimension must be positive");
  const auto edges = panelEdges(spec, 0.0);
  const auto& gl = gaussLegendre<long double>(spec.panelOrder);
  long double sum = 0.0L;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const long double half = (edges[k + 1] - edges[k]) / 2, mid = (edges[k + 1] + edges[k]) / 2;
    long double panel = 0.0L;
    for (int i = 0; i < spec.panelOrder; ++i) {
      const long double r = mid + half * gl.nodes[i];
      panel += gl.weights[i] * std::pow(r, d - 1) * f(r);
    }
    sum += panel * half;
  }
  const long double surface = 2.0L * std::pow(std::numbers::pi_v<long double>, d / 2.0L) / std::tgamma(d / 2.0L);
  return surface * sum;
}

}  // namespace clusterrad
