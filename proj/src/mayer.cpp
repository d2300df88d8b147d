#include "clusterrad/mayer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <optional>

#include "clusterrad/combinat.hpp"
#include "clusterrad/parallel.hpp"
#include "clusterrad/quad.hpp"
#include "clusterrad/rng.hpp"

namespace clusterrad {

std::string toString(MayerMethod m) { return m == MayerMethod::Exact1D ? "exact1d" : "montecarlo"; }

MayerMethod parseMayerMethod(const std::string& name) {
  if (name == "exact1d") return MayerMethod::Exact1D;
  if (name == "montecarlo" || name == "mc") return MayerMethod::MonteCarlo;
  throw DomainError("parameter", "unknown Mayer method '" + name + "'");
}

double Box::volume() const { return std::pow(side, d); }

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

/// Σ_g Π f over connected graphs, given Mayer factors by pair index.
double graphSum(int n, const std::vector<double>& f) {
  if (n == 2) return f[0];
  double total = 0.0;
  for (std::uint32_t mask : connectedGraphMasks(n)) {
    double prod = 1.0;
    for (std::uint32_t m = mask; m; m &= m - 1) prod *= f[std::countr_zero(m)];
    total += prod;
  }
  return total;
}

/// Radius beyond which e^{-βV} - 1 vanishes identically, if any.
std::optional<double> interactionRange(const RadialPotential& p) {
  auto r = p.finiteRange();
  if (r && p.hardCoreRadius()) r = std::max(*r, *p.hardCoreRadius());
  return r;
}

struct Window {
  double lo;
  double hi;
};

Window coordinateWindow(const RadialPotential& p, const Box& box, int n) {
  const double c = box.side / 2;
  if (const auto range = interactionRange(p)) {
    const double reach = (n - 1) * *range;
    return {std::max(0.0, c - reach), std::min(box.side, c + reach)};
  }
  return {0.0, box.side};
}

/// Signed sums of up to `depth` kink radii.
std::vector<double> kinkOffsets(const std::vector<double>& radii, int depth) {
  std::vector<double> offsets{0.0};
  for (int m = 0; m < depth; ++m) {
    std::vector<double> next = offsets;
    for (double o : offsets)
      for (double r : radii) {
        next.push_back(o + r);
        next.push_back(o - r);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end(), [](double a, double b) { return std::abs(a - b) < 1e-13; }),
               next.end());
    offsets = std::move(next);
  }
  return offsets;
}

MayerEstimate exact1D(const RadialPotential& p, double beta, const Box& box, int n, const MayerOptions& options) {
  if (box.d != 1 || p.dimension() != 1) throw DomainError("dimension", "exact1d needs d = 1");
  if (n > 4) throw DomainError("range", "exact1d supports n <= 4; use montecarlo for n = 5");
  const Window w = coordinateWindow(p, box, n);
  const auto radii = p.breakpoints();
  std::vector<std::vector<double>> offsets(n);
  for (int k = 1; k < n; ++k) offsets[k] = kinkOffsets(radii, n - k);

  QuadratureSpec spec;
  spec.relTol = options.relTol;
  spec.absTol = 1e-15;
  spec.panelOrder = 8;

  std::vector<double> x(n, 0.0);
  x[0] = box.side / 2;
  std::vector<double> f(pairCount(n));
  std::function<double(int)> level = [&](int k) -> double {
    if (k == n) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f[pairIndex(n, i, j)] = mayerFactor(beta * p.evaluate(std::abs(x[i] - x[j])));
      return graphSum(n, f);
    }
    std::vector<double> cuts{w.lo, w.hi};
    for (double o : offsets[k]) {
      for (int i = 0; i < k; ++i) cuts.push_back(x[i] + o);
      cuts.push_back(w.lo + o);
      cuts.push_back(w.hi + o);
    }
    std::erase_if(cuts, [&](double c) { return c < w.lo || c > w.hi; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (cuts[i + 1] - cuts[i] < 1e-14) continue;
      sum += integrateAdaptive(
                 [&](double t) {
                   x[k] = t;
                   return level(k + 1);
                 },
                 cuts[i], cuts[i + 1], spec)
                 .value;
    }
    return sum;
  };

  MayerEstimate est;
  est.n = n;
  est.method = MayerMethod::Exact1D;
  est.boxSide = box.side;
  est.value = level(1) / factorial(n);
  return est;
}

MayerEstimate monteCarlo(const RadialPotential& p, double beta, const Box& box, int n, const MayerOptions& options) {
  if (options.samples == 0) throw DomainError("parameter", "Monte Carlo needs at least one sample");
  if (p.dimension() != box.d) throw DomainError("dimension", "box and potential dimensions differ");
  const int d = box.d;
  const Window w = coordinateWindow(p, box, n);
  const double width = w.hi - w.lo;
  constexpr int kStrata = 64;
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t perStratum = std::max<std::uint64_t>(1, options.samples / kStrata);
  const std::uint64_t total = perStratum * kStrata;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;

  struct Partial {
    double sum[kStrata] = {};
    double sumSq[kStrata] = {};
  };
  std::vector<Partial> partials(blocks);
  parallelFor(blocks, options.workers, [&](std::size_t b) {
    CounterRng rng(hashCombine(options.seed, b));
    std::vector<Point> x(n, Point(d, box.side / 2));
    std::vector<double> f(pairCount(n));
    const std::uint64_t begin = b * kBlock, end = std::min(total, begin + kBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      const int stratum = static_cast<int>(s % kStrata);
      for (int i = 1; i < n; ++i)
        for (int k = 0; k < d; ++k) x[i][k] = w.lo + width * rng.uniform();
      x[1][0] = w.lo + width * (stratum + rng.uniform()) / kStrata;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          double r2 = 0.0;
          for (int k = 0; k < d; ++k) r2 += (x[i][k] - x[j][k]) * (x[i][k] - x[j][k]);
          f[pairIndex(n, i, j)] = mayerFactor(beta * p.evaluate(std::sqrt(r2)));
        }
      const double g = graphSum(n, f);
      partials[b].sum[stratum] += g;
      partials[b].sumSq[stratum] += g * g;
    }
  });
  double mean = 0.0, variance = 0.0;
  for (int s = 0; s < kStrata; ++s) {
    double sum = 0.0, sumSq = 0.0;
    for (const auto& part : partials) sum += part.sum[s], sumSq += part.sumSq[s];
    const double m = sum / perStratum;
    const double var = perStratum > 1 ? std::max(0.0, (sumSq - perStratum * m * m) / (perStratum - 1)) : 0.0;
    mean += m / kStrata;
    variance += var / perStratum / (kStrata * kStrata);
  }
  const double scale = std::pow(std::pow(width, d), n - 1) / factorial(n);
  MayerEstimate est;
  est.n = n;
  est.method = MayerMethod::MonteCarlo;
  est.boxSide = box.side;
  est.samples = total;
  est.value = scale * mean;
  est.standardError = scale * std::sqrt(variance);
  return est;
}

}  // namespace

MayerEstimate mayerCoefficient(const RadialPotential& p, double beta, const Box& box, int n,
                               const MayerOptions& options) {
  if (n < 2 || n > 5) throw DomainError("range", "Mayer coefficients supported for 2 <= n <= 5");
  if (!(beta > 0.0)) throw DomainError("parameter", "beta must be positive");
  if (!(box.side > 0.0) || box.d < 1) throw DomainError("parameter", "box side must be positive");
  if (p.dimension() != box.d) throw DomainError("dimension", "box and potential dimensions differ");
  auto est = options.method == MayerMethod::Exact1D ? exact1D(p, beta, box, n, options)
                                                    : monteCarlo(p, beta, box, n, options);
  const auto range = interactionRange(p);
  est.boundaryFlag = !range || *range / box.side > 0.1;
  return est;
}

double tonksOracle(double a, int n) {
  if (!(a > 0.0) || n < 1) throw DomainError("parameter", "tonksOracle needs a > 0 and n >= 1");
  return std::pow(-n * a, n - 1) / factorial(n);
}

double radiusLowerBoundEmpirical(const std::vector<MayerEstimate>& estimates) {
  if (estimates.size() < 3) throw DomainError("parameter", "root-test diagnostic needs at least 3 orders");
  double worst = 0.0;
  for (const auto& e : estimates) worst = std::max(worst, std::pow(std::abs(e.value), 1.0 / e.n));
  if (worst == 0.0) throw DomainError("parameter", "all coefficient estimates are zero");
  return 1.0 / worst;
}

}  // namespace clusterrad
