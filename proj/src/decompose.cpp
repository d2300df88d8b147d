#include "clusterrad/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clusterrad/gauss_legendre.hpp"
#include "clusterrad/parallel.hpp"

namespace clusterrad {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

long double unitSphereArea(int d) { return 2.0L * std::pow(kPi, d / 2.0L) / std::tgamma(d / 2.0L); }

/// ∫_a^b f on `panels` equal GL16 panels, in long double.
template <class F>
long double panelIntegral(F&& f, long double a, long double b, int panels, int order = 16) {
  if (!(b > a)) return 0.0L;
  const auto& gl = gaussLegendre<long double>(order);
  const long double h = (b - a) / panels;
  long double sum = 0.0L;
  for (int k = 0; k < panels; ++k) {
    const long double lo = a + h * k, half = h / 2, mid = lo + half;
    long double s = 0.0L;
    for (int i = 0; i < order; ++i) s += gl.weights[i] * f(mid + half * gl.nodes[i]);
    sum += s * half;
  }
  return sum;
}

void checkDimension(int d) {
  if (d != 1 && d != 3) throw DomainError("dimension", "decomposition supports d = 1 and d = 3 only");
}

std::vector<double> uniformGrid(double lo, double hi, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Mollifier

Mollifier::Mollifier(int d) : d_(d) {
  checkDimension(d);
  c_ = 1.0L;
  const long double raw =
      unitSphereArea(d) * panelIntegral([&](long double r) { return std::pow(r, d - 1) * (*this)(r); }, 0.0L, 1.0L, 64);
  c_ = 1.0L / raw;
}

long double Mollifier::operator()(long double r) const {
  if (r >= 1.0L) return 0.0L;
  return c_ * std::exp(-1.0L / (1.0L - r * r));
}

long double Mollifier::scaled(long double r, double a) const { return (*this)(r / a) / std::pow((long double)a, d_); }

long double Mollifier::transform(double q) const {
  FourierSpec spec;
  spec.rMax = 1.0;
  spec.baseWidth = 1.0 / 32;
  return radialFourierAt([this](long double r) { return (*this)(r); }, d_, q, spec);
}

long double Mollifier::mass(double a) const {
  FourierSpec spec;
  spec.rMax = a;
  spec.baseWidth = a / 100;
  spec.panelOrder = 20;
  return radialMass([this, a](long double r) { return scaled(r, a); }, d_, spec);
}

// ---------------------------------------------------------------------------
// BumpChain

namespace {

/// G(u) = ∫_0^u t χ(t) dt.
long double chiMoment(long double u) {
  u = std::min(u, 0.5L);
  if (u <= 0.0L) return 0.0L;
  return panelIntegral([](long double t) { return t * BumpChain::chi(t); }, 0.0L, u, 4);
}

}  // namespace

BumpChain::BumpChain(int d, const BumpChainOptions& options) : d_(d) {
  checkDimension(d);
  // K = max χ2 on [0, 1]
  const auto grid = uniformGrid(0.0, 1.0, options.maxSearchPoints);
  std::vector<long double> values(grid.size());
  k_ = 1.0L;
  parallelFor(grid.size(), options.workers, [&](std::size_t i) { values[i] = chi2(grid[i]); });
  k_ = *std::max_element(values.begin(), values.end());

  // GL table of χ̃² on [0, chiTableMax]
  const auto& gl = gaussLegendre<long double>(16);
  const int panels = static_cast<int>(std::ceil(options.chiTableMax / options.chiTablePanel));
  const long double h = options.chiTableMax / panels;
  for (int k = 0; k < panels; ++k)
    for (int i = 0; i < 16; ++i) {
      tableP_.push_back(h * k + h / 2 * (1 + gl.nodes[i]));
      tableW_.push_back(h / 2 * gl.weights[i]);
    }
  tableChi2_.resize(tableP_.size());
  parallelFor(tableP_.size(), options.workers, [&](std::size_t i) {
    const long double c = chiTilde(static_cast<double>(tableP_[i]));
    tableChi2_[i] = c * c;
  });
}

long double BumpChain::chi(long double r) {
  if (r >= 0.5L) return 0.0L;
  return std::exp(-1.0L / (1.0L - 4.0L * r * r));
}

long double BumpChain::chiTilde(double p) const {
  FourierSpec spec;
  spec.rMax = 0.5;
  spec.baseWidth = 1.0 / 64;
  return radialFourierAt([](long double r) { return chi(r); }, d_, p, spec);
}

long double BumpChain::chi1(long double r) const {
  r = std::abs(r);
  if (r >= 1.0L) return 0.0L;
  if (d_ == 1) {
    return panelIntegral([r](long double s) { return chi(std::abs(s)) * chi(std::abs(r - s)); }, r - 0.5L, 0.5L, 16);
  }
  if (r < 1e-12L) return 4.0L * kPi * panelIntegral([](long double s) { return s * s * chi(s) * chi(s); }, 0.0L, 0.5L, 8);
  auto inner = [r](long double s) { return s * chi(s) * (chiMoment(r + s) - chiMoment(std::abs(r - s))); };
  // kinks of the bracket at s = |1/2 - r| and s = r
  std::vector<long double> cuts{0.0L, 0.5L, std::abs(0.5L - r), r};
  std::erase_if(cuts, [](long double c) { return c < 0.0L || c > 0.5L; });
  std::sort(cuts.begin(), cuts.end());
  long double sum = 0.0L;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) sum += panelIntegral(inner, cuts[k], cuts[k + 1], 2);
  return 2.0L * kPi / r * sum;
}

long double BumpChain::bigPsi(long double r) const {
  r = std::abs(r);
  if (d_ == 1) return kPi * std::exp(-r);
  FourierSpec spec;
  spec.rMax = 4000.0;
  spec.baseWidth = 0.25;
  spec.growth = 0.25;
  return radialFourierAt(
      [](long double p) {
        const long double g = 1.0L / (p * p + 1.0L);
        return g * g * g;
      },
      3, static_cast<double>(r), spec);
}

long double BumpChain::chi2Tilde(double q) const {
  const long double lq = q;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < tableP_.size(); ++i) {
    const long double p = tableP_[i];
    const long double A = (lq + p) * (lq + p) + 1.0L, B = (lq - p) * (lq - p) + 1.0L;
    long double kernel;
    if (d_ == 3)
      kernel = 2.0L * kPi * p * p * (A + B) / (A * A * B * B);
    else
      kernel = 1.0L / A + 1.0L / B;
    sum += tableW_[i] * tableChi2_[i] * kernel;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// truncation

RadialFunction truncated(const RadialPotential& p, double a) {
  if (!(a > 0.0)) throw DomainError("parameter", "truncation radius must be positive");
  if (!classify(p).contains(PotentialLabel::LJType))
    throw DomainError("classification", "truncation needs a Lennard-Jones type potential");
  if (p.envelope() && !(a < p.envelope()->r1)) throw DomainError("parameter", "truncation radius must lie in (0, r1)");
  const double va = p.evaluate(a).value();
  return [p, a, va](long double r) -> long double { return r < a ? va : p.evaluate(static_cast<double>(r)).value(); };
}

RadialGridFunction truncate(const RadialPotential& p, double a, const std::vector<double>& grid) {
  return sampleOnGrid(truncated(p, a), grid, p.dimension());
}

// ---------------------------------------------------------------------------
// decomposition

namespace {

/// ∫_{r2}^{U} (s + a) η(s) ds in closed form.
double shiftedEtaMoment(const DecayProfile& eta, double a, double r2, double upper) {
  double total = 0.0;
  for (const auto& t : eta.terms) {
    auto anti = [&](double s) {
      if (t.form == DecayTerm::Form::Power) {
        const double p = t.param;
        const double first = std::abs(p - 2.0) < 1e-14 ? std::log(s) : std::pow(s, 2.0 - p) / (2.0 - p);
        const double second = std::abs(p - 1.0) < 1e-14 ? std::log(s) : std::pow(s, 1.0 - p) / (1.0 - p);
        return t.coeff * (first + a * second);
      }
      const double k = t.param, e = std::exp(-k * s);
      return t.coeff * (-e * (s / k + 1.0 / (k * k)) - a * e / k);
    };
    total += anti(upper) - anti(r2);
  }
  return total;
}

struct EnvelopePieces {
  Envelope env;
  double a;
  int d;

  double eta1(double r) const { return r <= env.r2 ? env.w : env.eta(r); }
  double eta2(double r) const { return r <= a ? env.w : eta1(r - a); }
  /// D(u) = ∫_0^u t (η2(t) - w) dt.
  double moment(double u) const {
    const double edge = a + env.r2;
    if (u <= edge) return 0.0;
    return shiftedEtaMoment(env.eta, a, env.r2, u - a) - env.w * (u * u - edge * edge) / 2.0;
  }
};

long double eta3At(const EnvelopePieces& e, const Mollifier& psi, double r) {
  const double w = e.env.w, a = e.a;
  if (r <= e.env.r2) return w;
  if (e.d == 3) {
    auto inner = [&](long double s) {
      const double sd = static_cast<double>(s);
      return s * psi.scaled(s, a) * (e.moment(r + sd) - e.moment(std::abs(r - sd)));
    };
    return w + 2.0L * kPi / r * panelIntegral(inner, 0.0L, a, 16);
  }
  auto inner = [&](long double s) {
    const double t = std::abs(r - static_cast<double>(s));
    return psi.scaled(std::abs(s), a) * (e.eta2(t) - w);
  };
  const long double kink = r - a - e.env.r2;
  long double sum = 0.0L;
  if (kink > -a && kink < a) {
    sum = panelIntegral(inner, -a, kink, 8) + panelIntegral(inner, kink, a, 8);
  } else {
    sum = panelIntegral(inner, -a, a, 16);
  }
  return w + sum;
}

bool nonnegativeOnGrid(const std::vector<double>& v, const std::vector<double>& scale) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < -1e-9 * std::max(1.0, std::abs(scale[i]))) return false;
  return true;
}

}  // namespace

DecompositionResult decompose(const RadialPotential& p, const DecomposeOptions& options) {
  const int d = p.dimension();
  checkDimension(d);
  DecompositionResult out;
  const auto labels = classify(p);
  if (!labels.contains(PotentialLabel::LJType)) {
    if (p.finiteEverywhere() && labels.contains(PotentialLabel::AbsolutelySummableCandidate)) {
      out.degenerate = true;
      out.success = true;
      const auto grid = RadialGrid::logUniform(1e-3 * p.lengthScale(), 10.0 * p.lengthScale(), options.rGridPoints).r;
      out.phi2 = sampleOnGrid([&p](long double r) { return (long double)p.evaluate(static_cast<double>(r)).value(); },
                              grid, d);
      out.phi1 = RadialGridFunction{grid, std::vector<double>(grid.size(), 0.0), d};
      return out;
    }
    throw DomainError("classification", "decompose needs a Lennard-Jones type potential");
  }
  if (!p.envelope()) throw DomainError("envelope", "missing envelope");
  const Envelope env = *p.envelope();
  if (env.xi.empty()) throw DomainError("envelope", "envelope missing xi");

  const Mollifier psi(d);
  BumpChainOptions chainOptions;
  chainOptions.workers = options.workers;
  const BumpChain chain(d, chainOptions);

  auto& c = out.constants;
  c.K = chain.K();
  const auto qGrid = uniformGrid(0.0, options.qMax, options.qPoints);
  std::vector<double> cp(qGrid.size()), cpp(qGrid.size());
  parallelFor(qGrid.size(), options.workers, [&](std::size_t i) {
    const long double weight = std::pow(1.0L + (long double)qGrid[i] * qGrid[i], d);
    cp[i] = static_cast<double>(std::abs(psi.transform(qGrid[i])) * weight);
    cpp[i] = static_cast<double>(chain.chi2Tilde(qGrid[i]) * weight);
  });
  c.Cprime = *std::max_element(cp.begin(), cp.end());
  c.Cdoubleprime = *std::min_element(cpp.begin(), cpp.end());
  c.Cstar = c.Cdoubleprime / c.K;
  c.Htail = env.eta.empty() ? 0.0 : static_cast<double>(unitSphereArea(d)) * env.eta.tailMoment(d, env.r2);
  const double eta2Bound = sphereVolume(d, env.r1 + env.r2) * env.w + c.Htail;
  c.C = c.Cprime / c.Cstar * eta2Bound;
  c.C1 = eta2Bound * c.Cprime;

  // largest admissible a on a log-uniform candidate grid in (0, r1)
  const int m = options.aCandidates;
  std::optional<double> chosen;
  out.bestXiMoment = 0.0;
  for (int k = 0; k < m; ++k) {
    const double a = env.r1 * std::pow(options.aMinFraction, 1.0 - static_cast<double>(k) / m);
    out.aCandidates.push_back(a);
    const double moment = env.xi(a) * std::pow(a, d);
    out.bestXiMoment = std::max(out.bestXiMoment, moment);
    if (moment >= c.C) chosen = a;
  }
  if (!chosen) {
    out.success = false;
    out.failure = "no admissible a: max xi(a) a^d = " + std::to_string(out.bestXiMoment) +
                  " < C = " + std::to_string(c.C);
    return out;
  }
  const double a = *chosen;
  out.a = a;
  const double xiA = env.xi(a);
  c.C2 = c.Cstar * std::pow(a, d) * xiA;
  c.eta2Norm = sphereVolume(d, env.r2 + a) * env.w + c.Htail;
  c.mollifierMass = static_cast<double>(psi.mass(a));

  const EnvelopePieces pieces{env, a, d};
  const auto va = truncated(p, a);

  std::vector<double> grid = RadialGrid::logUniform(a * 1e-3, env.r2 + a + 10.0, options.rGridPoints).r;
  for (double x : {a, env.r1, env.r2, env.r2 + a}) grid.push_back(x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::size_t g = grid.size();
  out.Va = sampleOnGrid(va, grid, d, options.workers);
  out.eta1 = sampleOnGrid([&](long double r) { return (long double)pieces.eta1(static_cast<double>(r)); }, grid, d);
  out.eta3 = sampleOnGrid([&](long double r) { return eta3At(pieces, psi, static_cast<double>(r)); }, grid, d,
                          options.workers);
  auto xi1 = [&](long double r) { return r < a ? xiA * chain.chi3(r / a) : 0.0L; };
  out.xi1 = sampleOnGrid(xi1, grid, d, options.workers);
  out.psi1 = out.psi2 = out.phi1 = out.Va;
  out.phi2 = out.Va;
  std::vector<double> vFull(g);
  for (std::size_t i = 0; i < g; ++i) {
    vFull[i] = p.evaluate(grid[i]).value();
    out.psi1.values[i] = out.Va.values[i] + out.eta3.values[i] - out.xi1.values[i];
    out.psi2.values[i] = out.xi1.values[i] - out.eta3.values[i];
    out.phi1.values[i] = vFull[i] - out.Va.values[i];
  }

  auto& ch = out.checks;
  ch.phi1Nonnegative = nonnegativeOnGrid(out.phi1.values, vFull);
  ch.psi1Nonnegative = nonnegativeOnGrid(out.psi1.values, out.Va.values);
  for (std::size_t i = 0; i < g; ++i) {
    const double tol = 1e-9 * std::max(1.0, std::abs(out.Va.values[i]));
    if (out.Va.values[i] < -out.eta3.values[i] - tol) ch.unoHolds = false;
    if (grid[i] <= env.r1 && out.xi1.values[i] > out.Va.values[i] + tol) ch.dueHolds = false;
    if (grid[i] >= a && out.xi1.values[i] != 0.0) ch.dueHolds = false;
    if (out.eta3.values[i] < out.eta1.values[i] - 1e-9 * std::max(1.0, out.eta1.values[i])) ch.eta3AboveEta1 = false;
  }

  // sampled transform of Ψ2 = ξ1 - η3
  auto& fr = out.fourier;
  fr.p = uniformGrid(0.0, options.pMaxTimesA / a, options.pPoints);
  fr.inner.resize(fr.p.size());
  FourierSpec etaSpec;
  etaSpec.rMax = env.r2 + a + options.etaCut;
  etaSpec.breakpoints = {a, env.r2 + a};
  etaSpec.baseWidth = 0.05;
  etaSpec.growth = 0.1;
  const RadialFunction eta2 = [&](long double r) { return (long double)pieces.eta2(static_cast<double>(r)); };
  const long double scale = std::pow((long double)a, d) * xiA;
  parallelFor(fr.p.size(), options.workers, [&](std::size_t i) {
    const double q = a * fr.p[i];
    fr.inner[i] = static_cast<double>(scale * chain.chi3Tilde(q) -
                                      radialFourierAt(eta2, d, fr.p[i], etaSpec) * psi.transform(q));
  });
  fr.min = *std::min_element(fr.inner.begin(), fr.inner.end());
  fr.max = *std::max_element(fr.inner.begin(), fr.inner.end());
  ch.fourierNonnegative = fr.min >= -1e-6 * std::abs(fr.max);

  const double psi2AtZero = static_cast<double>(xiA * chain.chi3(0.0L)) - env.w;
  if (ch.fourierNonnegative) out.btilde = std::max(0.0, psi2AtZero / 2.0);

  out.success = ch.phi1Nonnegative && ch.psi1Nonnegative && ch.unoHolds && ch.dueHolds && ch.eta3AboveEta1 &&
                ch.fourierNonnegative && std::abs(c.mollifierMass - 1.0) <= 1e-10;
  if (!out.success) out.failure = "a construction check failed; see checks";
  return out;
}

double cTildeOfTruncation(const RadialPotential& p, double a, double beta, const QuadratureSpec& spec) {
  if (!(beta > 0.0)) throw DomainError("parameter", "beta must be positive");
  const double va = p.evaluate(a).value();
  auto g = [&](double r) {
    if (r < a) {
      const auto v = p.evaluate(r);
      const double jump = v.isInfinite() ? 1.0 : std::abs(std::expm1(-beta * (v.value() - va)));
      return jump + beta * std::abs(va);
    }
    return beta * std::abs(p.evaluate(r).value());
  };
  auto breaks = p.breakpoints();
  breaks.push_back(a);
  const auto tb = p.tailBound();
  if (!tb.known) throw DomainError("temperedness", "potential has no certified tail");
  RadialTailSpec tail{std::max(tb.from, a), tb.bound};
  for (auto& t : tail.bound.terms) t.coeff = std::abs(t.coeff) * beta;
  return radialIntegral(g, p.dimension(), breaks, tail, spec).value;
}

}  // namespace clusterrad
