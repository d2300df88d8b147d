#include "clusterrad/stability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "clusterrad/parallel.hpp"
#include "clusterrad/rng.hpp"

namespace clusterrad {

double finiteAlgebraicB(const InteractionMatrix& v) {
  const int n = v.size();
  if (n > kMaxSubsetScanVertices) throw DomainError("range", "subset scan supports n <= 20");
  if (n < 2) return 0.0;
  std::vector<double> finite(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<std::uint32_t> infiniteWith(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto x = v(i, j);
      if (x.isInfinite())
        infiniteWith[i] |= 1u << j;
      else
        finite[static_cast<std::size_t>(i) * n + j] = x.value();
    }

  std::uint32_t subset = 0;
  double energy = 0.0;
  int incompatible = 0;
  double best = 0.0;
  std::uint32_t bestMask = 0;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t k = 1; k < total; ++k) {
    const int vtx = std::countr_zero(k);
    double delta = 0.0;
    for (std::uint32_t m = subset; m; m &= m - 1) delta += finite[static_cast<std::size_t>(vtx) * n + std::countr_zero(m)];
    const int clashes = std::popcount(subset & infiniteWith[vtx]);
    if (subset >> vtx & 1u) {
      subset &= ~(1u << vtx);
      energy -= delta;
      incompatible -= clashes;
    } else {
      subset |= 1u << vtx;
      energy += delta;
      incompatible += clashes;
    }
    const int size = std::popcount(subset);
    if (size < 2 || incompatible > 0) continue;
    const double candidate = -energy / size;
    if (candidate > best) {
      best = candidate;
      bestMask = subset;
    }
  }
  if (bestMask == 0) return 0.0;
  // recompute the maximizer exactly, free of incremental rounding
  double e = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((bestMask >> i & 1u) && (bestMask >> j & 1u)) e += v(i, j).value();
  return std::max(0.0, -e / std::popcount(bestMask));
}

ExtendedReal configurationEnergy(const RadialPotential& p, const std::vector<Point>& points) {
  ExtendedReal total(0.0);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double r2 = 0.0;
      for (std::size_t k = 0; k < points[i].size(); ++k) r2 += (points[i][k] - points[j][k]) * (points[i][k] - points[j][k]);
      total = total + p.evaluate(std::sqrt(r2));
    }
  return total;
}

namespace {

double distance(const Point& a, const Point& b) {
  double r2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) r2 += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(r2);
}

double pairValue(const RadialPotential& p, const Point& a, const Point& b) {
  return p.evaluate(distance(a, b)).value();
}

/// Pair distance minimizing V on a sampling grid.
double argminPairDistance(const RadialPotential& p) {
  const double lo = p.hardCoreRadius().value_or(0.0);
  const double hi = std::max(3.0 * p.lengthScale(), lo * 3.0);
  double bestR = hi, bestV = INFINITY;
  for (int i = 1; i <= 4000; ++i) {
    const double r = lo + (hi - lo) * i / 4000.0;
    const double v = p.evaluate(r).value();
    if (v < bestV) bestV = v, bestR = r;
  }
  return bestR;
}

std::vector<Point> latticeStart(int n, int d, double spacing) {
  const int side = static_cast<int>(std::ceil(std::pow(n, 1.0 / d) - 1e-9));
  std::vector<Point> pts;
  std::vector<int> idx(d, 0);
  while (static_cast<int>(pts.size()) < n) {
    Point x(d);
    for (int k = 0; k < d; ++k) x[k] = spacing * idx[k];
    pts.push_back(x);
    for (int k = 0; k < d; ++k) {
      if (++idx[k] < side) break;
      idx[k] = 0;
    }
  }
  return pts;
}

std::vector<Point> randomStart(const RadialPotential& p, int n, double spacing, CounterRng& rng) {
  const int d = p.dimension();
  const double core = p.hardCoreRadius().value_or(0.0);
  double side = spacing * std::max(1.0, std::ceil(std::pow(n, 1.0 / d)));
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      Point x(d);
      for (auto& c : x) c = rng.uniform(0.0, side);
      placed = std::all_of(pts.begin(), pts.end(), [&](const Point& y) { return distance(x, y) > core; });
      if (placed) pts.push_back(std::move(x));
    }
    if (!placed) side *= 1.1;
  }
  return pts;
}

struct SearchOutcome {
  double perParticle = -INFINITY;  // -U/N
  std::vector<Point> config;
};

SearchOutcome descend(const RadialPotential& p, std::vector<Point> x, double spacing, int maxSweeps) {
  const int n = static_cast<int>(x.size());
  const int d = p.dimension();
  double step = spacing / 4.0;
  const double minStep = spacing * 1e-9;
  for (int sweep = 0; sweep < maxSweeps && step >= minStep; ++sweep) {
    bool improved = false;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k)
        for (double sign : {1.0, -1.0}) {
          double before = 0.0;
          for (int j = 0; j < n; ++j)
            if (j != i) before += pairValue(p, x[i], x[j]);
          const double old = x[i][k];
          x[i][k] = old + sign * step;
          double after = 0.0;
          for (int j = 0; j < n; ++j)
            if (j != i) after += pairValue(p, x[i], x[j]);
          if (after < before - 1e-15 * std::abs(before)) {
            improved = true;
          } else {
            x[i][k] = old;
          }
        }
    if (!improved) step *= 0.5;
  }
  const auto u = configurationEnergy(p, x);
  SearchOutcome out;
  if (u.isFinite()) out.perParticle = -u.value() / n;
  out.config = std::move(x);
  return out;
}

}  // namespace

StabilityEstimate configurationLowerBound(const RadialPotential& p, const StabilitySearchOptions& options) {
  if (options.nMax < 2 || options.restarts < 1) throw DomainError("parameter", "need nMax >= 2 and restarts >= 1");
  StabilityEstimate out;
  out.upperBound = packingUpperBound(p);
  out.witness = {Point(p.dimension(), 0.0)};
  if (classify(p).contains(PotentialLabel::Repulsive)) {
    out.method = "repulsive: U >= 0 for every configuration";
    return out;
  }
  const double spacing = argminPairDistance(p);
  struct Job {
    int n;
    int restart;
  };
  std::vector<Job> jobs;
  for (int n = 2; n <= options.nMax; ++n)
    for (int r = 0; r < options.restarts; ++r) jobs.push_back({n, r});
  std::vector<SearchOutcome> results(jobs.size());
  parallelFor(jobs.size(), options.workers, [&](std::size_t k) {
    const auto [n, r] = jobs[k];
    CounterRng rng(hashCombine(hashCombine(options.seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(r)));
    auto start = r == 0 ? latticeStart(n, p.dimension(), spacing) : randomStart(p, n, spacing, rng);
    results[k] = descend(p, std::move(start), spacing, options.maxSweeps);
  });
  const SearchOutcome* best = nullptr;
  for (const auto& res : results)
    if (!best || res.perParticle > best->perParticle) best = &res;
  if (best && best->perParticle > 0.0) {
    out.lowerBound = best->perParticle;
    out.witness = best->config;
  }
  out.method = "multi-start coordinate descent";
  return out;
}

std::optional<double> packingUpperBound(const RadialPotential& p) {
  const auto core = p.hardCoreRadius();
  const auto range = p.finiteRange();
  if (!core || !range || !(*core > 0.0)) return std::nullopt;
  const double a = *core, R = std::max(*range, a);
  double depth = 0.0;
  if (const auto* sw = std::get_if<SquareWellParams>(&p.params())) {
    depth = std::max(0.0, sw->depth);
  } else {
    for (int i = 1; i <= 8192; ++i) depth = std::max(depth, -p.evaluate(a + (R - a) * i / 8192.0).value());
    for (double b : p.breakpoints())
      if (b > a && b <= R) depth = std::max(depth, -p.evaluate(b).value());
  }
  const double neighbours = std::floor(std::pow(2.0 * R / a + 1.0, p.dimension()) + 1e-9) - 1.0;
  return depth * neighbours / 2.0;
}

RuelleCriterionResult ruelleCriterionUpperBound(double phi2AtZero, const RadialGridFunction& transform,
                                                double relTol) {
  if (transform.values.empty()) throw DomainError("fourier", "transform grid is empty");
  if (!std::isfinite(phi2AtZero)) throw DomainError("parameter", "phi2 must be finite at 0");
  RuelleCriterionResult out;
  out.minTransform = transform.min();
  out.maxTransform = transform.max();
  out.applicable = out.minTransform >= -relTol * std::max(std::abs(out.maxTransform), 0.0);
  if (out.applicable) out.bound = std::max(0.0, phi2AtZero / 2.0);
  return out;
}

RuelleCriterionResult ruelleCriterionUpperBound(const RadialFunction& phi2, int d, const std::vector<double>& pGrid,
                                                const FourierSpec& spec, double relTol) {
  return ruelleCriterionUpperBound(static_cast<double>(phi2(0.0L)), radialFourier(phi2, d, pGrid, spec), relTol);
}

}  // namespace clusterrad
