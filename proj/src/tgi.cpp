#include "clusterrad/tgi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clusterrad/gauss_legendre.hpp"
#include "clusterrad/parallel.hpp"
#include "clusterrad/rng.hpp"

namespace clusterrad {

std::vector<TgiMeasureTerm> measureTerms(const LabeledTree& tree) {
  std::vector<TgiMeasureTerm> out;
  enumerateCompatibleSequences(tree, [&](const CompatibleSequence& s) { out.push_back({s, tree.edges}); });
  return out;
}

boost::rational<std::int64_t> measureNormalization(const LabeledTree& tree) {
  boost::rational<std::int64_t> total(0);
  enumerateCompatibleSequences(tree, [&](const CompatibleSequence& s) {
    boost::rational<std::int64_t> term(1);
    for (int b : s.crossCounts) term /= b;
    total += term;
  });
  return total;
}

double lhsConnectedGraphSum(const InteractionMatrix& v) {
  const int n = v.size();
  if (n < 2 || n > kMaxGraphVertices) throw DomainError("range", "connected-graph sum supports 2 <= n <= 6");
  std::vector<double> f(pairCount(n));
  for (int k = 0; k < pairCount(n); ++k) {
    const Edge e = pairAt(n, k);
    f[k] = mayerFactor(v(e.i, e.j));
  }
  double total = 0.0;
  for (std::uint32_t mask : connectedGraphMasks(n)) {
    double prod = 1.0;
    for (std::uint32_t m = mask; m; m &= m - 1) prod *= f[std::countr_zero(m)];
    total += prod;
  }
  return total;
}

namespace {

/// Quadrature rule on [0, 1].
struct AxisRule {
  std::vector<double> x;
  std::vector<double> w;
};

void appendPanel(AxisRule& rule, double a, double b, int order) {
  const auto& gl = gaussLegendre<double>(order);
  const double half = (b - a) / 2, mid = (a + b) / 2;
  for (int i = 0; i < order; ++i) {
    rule.x.push_back(mid + half * gl.nodes[i]);
    rule.w.push_back(half * gl.weights[i]);
  }
}

/// Plain GL for moderate exponents; for large |V| the integrand varies on the
/// scale t ~ 1/|V|, so panels are graded geometrically toward t = 0.
AxisRule axisRule(int order, double scale) {
  AxisRule rule;
  if (scale <= 16.0) {
    appendPanel(rule, 0.0, 1.0, order);
    return rule;
  }
  const int levels = static_cast<int>(std::ceil(std::log2(scale))) + 3;
  const int panelOrder = std::max(6, order / 2);
  double lo = std::ldexp(1.0, -levels);
  appendPanel(rule, 0.0, lo, panelOrder);
  for (int k = levels; k >= 1; --k) {
    const double hi = std::ldexp(1.0, -(k - 1));
    appendPanel(rule, lo, hi, panelOrder);
    lo = hi;
  }
  return rule;
}

/// ∫_{[0,1]^{n-1}} Π t_s^{b_s-1} exp(-Σ_{p<q} W[p][q] P_q/P_p) dt, with W indexed
/// by positions in the vertex order and P_k = t_1 ... t_k.
class TermIntegrator {
 public:
  TermIntegrator(const AxisRule& rule, int n) : rule_(rule), n_(n), prefix_(n, 1.0) {}

  double integrate(const std::vector<std::vector<double>>& w, const std::vector<int>& crossCounts) {
    w_ = &w;
    powers_.assign(n_, std::vector<double>(rule_.x.size()));
    for (int s = 1; s < n_; ++s)
      for (std::size_t k = 0; k < rule_.x.size(); ++k)
        powers_[s][k] = rule_.w[k] * std::pow(rule_.x[k], crossCounts[s - 1] - 1);
    return level(1, 0.0);
  }

 private:
  double level(int s, double exponent) {
    if (s == n_) return std::exp(-exponent);
    const auto& w = *w_;
    double sum = 0.0;
    for (std::size_t k = 0; k < rule_.x.size(); ++k) {
      const double ps = prefix_[s - 1] * rule_.x[k];
      prefix_[s] = ps;
      double e = exponent;
      for (int p = 0; p < s; ++p)
        if (w[p][s] != 0.0) e += w[p][s] * (ps / prefix_[p]);
      sum += powers_[s][k] * level(s + 1, e);
    }
    return sum;
  }

  const AxisRule& rule_;
  int n_;
  std::vector<double> prefix_;
  const std::vector<std::vector<double>>* w_ = nullptr;
  std::vector<std::vector<double>> powers_;
};

enum class Exponent { AllPairs, TreeEdges };

std::vector<std::vector<double>> positionWeights(const InteractionMatrix& v, const CompatibleSequence& seq,
                                                 const LabeledTree& tree, Exponent mode) {
  const int n = v.size();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  auto put = [&](int i, int j) {
    const int p = std::min(seq.position[i], seq.position[j]);
    const int q = std::max(seq.position[i], seq.position[j]);
    w[p][q] = v(i, j).value();
  };
  if (mode == Exponent::AllPairs) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) put(i, j);
  } else {
    for (const auto& e : tree.edges) put(e.i, e.j);
  }
  return w;
}

/// Σ_X ∫ (...) for one tree at a fine and a coarse order.
std::pair<double, double> treeMeasureIntegral(const InteractionMatrix& v, const LabeledTree& tree, Exponent mode,
                                              const AxisRule& fine, const AxisRule& coarse) {
  TermIntegrator fineInt(fine, v.size()), coarseInt(coarse, v.size());
  double a = 0.0, b = 0.0;
  enumerateCompatibleSequences(tree, [&](const CompatibleSequence& seq) {
    const auto w = positionWeights(v, seq, tree, mode);
    a += fineInt.integrate(w, seq.crossCounts);
    b += coarseInt.integrate(w, seq.crossCounts);
  });
  return {a, b};
}

void checkQuadrature(const TgiQuadrature& q) {
  if (q.order < 10) throw DomainError("quadrature", "tensor quadrature order must be at least 10");
}

}  // namespace

TgiValue rhsTreeSum(const InteractionMatrix& v, const TgiQuadrature& quad) {
  const int n = v.size();
  if (n < 2 || n > 5) throw DomainError("range", "tree-side quadrature supports 2 <= n <= 5");
  if (!v.isBounded()) throw DomainError("unbounded", "matrix has infinite entries; use the regularized tree sum");
  checkQuadrature(quad);
  const double scale = v.maxAbsFinite();
  const AxisRule fine = axisRule(quad.order, scale), coarse = axisRule(quad.order - 8, scale);
  const auto trees = allTrees(n);
  std::vector<double> values(trees.size()), errors(trees.size());
  parallelFor(trees.size(), quad.workers, [&](std::size_t k) {
    double weight = 1.0;
    for (const auto& e : trees[k].edges) weight *= -v(e.i, e.j).value();
    if (weight == 0.0) return;
    const auto [a, b] = treeMeasureIntegral(v, trees[k], Exponent::AllPairs, fine, coarse);
    values[k] = weight * a;
    errors[k] = std::abs(weight * (a - b));
  });
  return {pairwiseSum(values), pairwiseSum(errors)};
}

TgiValue rhsTreeSumMonteCarlo(const InteractionMatrix& v, std::uint64_t samples, std::uint64_t seed) {
  const int n = v.size();
  if (n < 2 || n > kMaxGraphVertices) throw DomainError("range", "Monte Carlo tree sum supports 2 <= n <= 6");
  if (samples == 0) throw DomainError("parameter", "Monte Carlo needs at least one sample");
  if (!v.isBounded()) throw DomainError("unbounded", "matrix has infinite entries");
  double value = 0.0, variance = 0.0;
  std::uint64_t termIndex = 0;
  enumerateTrees(n, [&](const LabeledTree& tree) {
    double weight = 1.0;
    for (const auto& e : tree.edges) weight *= -v(e.i, e.j).value();
    enumerateCompatibleSequences(tree, [&](const CompatibleSequence& seq) {
      CounterRng rng(hashCombine(seed, termIndex++));
      if (weight == 0.0) return;
      const auto w = positionWeights(v, seq, tree, Exponent::AllPairs);
      double mean = 0.0, m2 = 0.0;
      std::vector<double> prefix(n, 1.0);
      for (std::uint64_t k = 0; k < samples; ++k) {
        double density = 1.0, exponent = 0.0;
        for (int s = 1; s < n; ++s) {
          const double t = rng.uniform();
          prefix[s] = prefix[s - 1] * t;
          density *= std::pow(t, seq.crossCounts[s - 1] - 1);
          for (int p = 0; p < s; ++p)
            if (w[p][s] != 0.0) exponent += w[p][s] * (prefix[s] / prefix[p]);
        }
        const double x = density * std::exp(-exponent);
        const double delta = x - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (x - mean);
      }
      value += weight * mean;
      if (samples > 1) variance += weight * weight * m2 / static_cast<double>(samples - 1) / samples;
    });
  });
  return {value, std::sqrt(variance)};
}

Regularization Regularization::standard() {
  Regularization r;
  for (int k = 3; k <= 10; ++k) r.schedule.push_back(std::ldexp(1.0, k));
  return r;
}

void Regularization::validate() const {
  if (schedule.empty()) throw DomainError("parameter", "regularization schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i]))
      throw DomainError("parameter", "regularization caps must be positive and finite");
    if (i > 0 && !(schedule[i] > schedule[i - 1]))
      throw DomainError("parameter", "regularization schedule must be strictly increasing");
  }
}

std::vector<TgiValue> rhsTreeSumRegularized(const InteractionMatrix& v, const Regularization& reg,
                                            const TgiQuadrature& quad) {
  reg.validate();
  std::vector<TgiValue> out;
  for (double h : reg.schedule) out.push_back(rhsTreeSum(v.capped(h), quad));
  return out;
}

LemmaPositResult lemmaPositCheck(const LabeledTree& tree, const InteractionMatrix& v, const TgiQuadrature& quad) {
  const int n = v.size();
  if (tree.n != n || !tree.valid()) throw DomainError("range", "tree does not match the matrix");
  if (n > 5) throw DomainError("range", "lemma check supports n <= 5");
  checkQuadrature(quad);
  LemmaPositResult out{1.0, 1.0, 0.0};
  double scale = 0.0;
  for (const auto& e : tree.edges) {
    const auto x = v(e.i, e.j);
    if (x.isInfinite()) throw DomainError("unbounded", "tree edges need finite entries");
    out.lhs *= std::abs(std::expm1(-x.value()));
    out.rhs *= std::abs(x.value());
    scale = std::max(scale, std::abs(x.value()));
  }
  if (out.rhs == 0.0) return out;
  const auto [a, b] =
      treeMeasureIntegral(v, tree, Exponent::TreeEdges, axisRule(quad.order, scale), axisRule(quad.order - 8, scale));
  out.errorEstimate = out.rhs * std::abs(a - b);
  out.rhs *= a;
  return out;
}

double lemmaConvexCheck(const InteractionMatrix& v, double b, int samples, std::uint64_t seed) {
  const int n = v.size();
  if (n < 2) throw DomainError("range", "need at least two vertices");
  if (samples < 1) throw DomainError("parameter", "need at least one sample");
  double worst = INFINITY;
  std::vector<int> order(n);
  std::vector<double> t(n), prefix(n);
  for (int k = 0; k < samples; ++k) {
    CounterRng rng(hashCombine(seed, static_cast<std::uint64_t>(k)));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i >= 2; --i) std::swap(order[i], order[1 + rng.below(static_cast<std::uint64_t>(i))]);
    for (int corner = 0; corner < 2; ++corner) {
      prefix[0] = 1.0;
      for (int s = 1; s < n; ++s) prefix[s] = prefix[s - 1] * (corner ? 1.0 : rng.uniform());
      double sum = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          const double weight = prefix[q] / prefix[p];
          const auto x = v(order[p], order[q]);
          if (weight == 0.0) continue;
          sum += x.isInfinite() ? INFINITY : weight * x.value();
        }
      worst = std::min(worst, sum + n * b);
    }
  }
  return worst;
}

namespace {

template <class EdgeFactor>
double treeSum(int n, EdgeFactor&& factor) {
  double total = 0.0;
  enumerateTrees(n, [&](const LabeledTree& tree) {
    double prod = 1.0;
    for (const auto& e : tree.edges) prod *= factor(e.i, e.j);
    total += prod;
  });
  return total;
}

}  // namespace

TreeInequalityResult treeInequalityPenrose(const InteractionMatrix& v, double b) {
  const int n = v.size();
  if (n < 2 || n > kMaxGraphVertices) throw DomainError("range", "tree inequality supports 2 <= n <= 6");
  if (b < 0.0) throw DomainError("parameter", "stability constant must be nonnegative");
  TreeInequalityResult out;
  out.lhsAbs = std::abs(lhsConnectedGraphSum(v));
  out.rhsBound = std::exp(n * b) * treeSum(n, [&](int i, int j) {
                   const auto x = v(i, j);
                   return x.isInfinite() ? 1.0 : std::abs(x.value());
                 });
  return out;
}

TreeInequalityResult treeInequalityRuelle(const InteractionMatrix& phi1, const InteractionMatrix& phi2, double b0) {
  const int n = phi1.size();
  if (phi2.size() != n) throw DomainError("range", "split parts differ in size");
  if (n < 2 || n > kMaxGraphVertices) throw DomainError("range", "tree inequality supports 2 <= n <= 6");
  if (!phi1.isRepulsive()) throw DomainError("split", "phi1 must be nonnegative");
  if (!phi2.isBounded()) throw DomainError("split", "phi2 must be finite");
  if (b0 < 0.0) throw DomainError("parameter", "stability constant must be nonnegative");
  TreeInequalityResult out;
  out.lhsAbs = std::abs(lhsConnectedGraphSum(phi1 + phi2));
  out.rhsBound = std::exp(n * b0) * treeSum(n, [&](int i, int j) {
                   return std::abs(mayerFactor(phi1(i, j))) + std::abs(phi2(i, j).value());
                 });
  return out;
}

}  // namespace clusterrad
