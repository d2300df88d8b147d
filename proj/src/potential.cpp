#include "clusterrad/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace clusterrad {

// ---------------------------------------------------------------------------
// InteractionMatrix

InteractionMatrix::InteractionMatrix(int n) : n_(n) {
  if (n < 1) throw DomainError("range", "interaction matrix needs at least one vertex");
  entries_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, ExtendedReal(0.0));
}

std::size_t InteractionMatrix::index(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
    throw DomainError("range", "invalid vertex pair");
  if (i > j) std::swap(i, j);
  // row-major strict upper triangle
  return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

bool InteractionMatrix::isBounded() const {
  return std::all_of(entries_.begin(), entries_.end(), [](ExtendedReal v) { return v.isFinite(); });
}

bool InteractionMatrix::isRepulsive() const {
  return std::all_of(entries_.begin(), entries_.end(), [](ExtendedReal v) { return v.value() >= 0.0; });
}

double InteractionMatrix::maxAbsFinite() const {
  double m = 0.0;
  for (auto v : entries_)
    if (v.isFinite()) m = std::max(m, std::abs(v.value()));
  return m;
}

InteractionMatrix operator+(const InteractionMatrix& a, const InteractionMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("range", "matrix sizes differ");
  InteractionMatrix out(a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

InteractionMatrix InteractionMatrix::capped(double h) const {
  InteractionMatrix out = *this;
  for (auto& v : out.entries_)
    if (v.isInfinite()) v = ExtendedReal(h);
  return out;
}

InteractionMatrix InteractionMatrix::scaled(double c) const {
  InteractionMatrix out = *this;
  for (auto& v : out.entries_) v = c * v;
  return out;
}

// ---------------------------------------------------------------------------
// DecayProfile

double DecayProfile::operator()(double r) const {
  double s = 0.0;
  for (const auto& t : terms) {
    if (t.form == DecayTerm::Form::Power)
      s += t.coeff * std::pow(r, -t.param);
    else
      s += t.coeff * std::exp(-t.param * r);
  }
  return s;
}

namespace {

double termTailMoment(const DecayTerm& t, int d, double from, double coeff) {
  if (coeff == 0.0) return 0.0;
  if (t.form == DecayTerm::Form::Power) {
    if (t.param <= d) return coeff > 0 ? INFINITY : -INFINITY;
    return coeff * std::pow(from, d - t.param) / (t.param - d);
  }
  // ∫_R^∞ r^{d-1} e^{-k r} dr = e^{-kR} Σ_{j<d} (d-1)!/j! R^j / k^{d-j}
  const double k = t.param;
  double sum = 0.0;
  double fact = 1.0;  // (d-1)!/j!, built from j = d-1 downwards
  for (int j = d - 1; j >= 0; --j) {
    sum += fact * std::pow(from, j) / std::pow(k, d - j);
    fact *= j;
  }
  return coeff * std::exp(-k * from) * sum;
}

}  // namespace

double DecayProfile::tailMoment(int d, double from) const {
  double s = 0.0;
  for (const auto& t : terms) s += termTailMoment(t, d, from, t.coeff);
  return s;
}

double DecayProfile::absTailMoment(int d, double from) const {
  double s = 0.0;
  for (const auto& t : terms) s += termTailMoment(t, d, from, std::abs(t.coeff));
  return s;
}

bool DecayProfile::integrableAtInfinity(int d) const {
  return std::all_of(terms.begin(), terms.end(), [d](const DecayTerm& t) {
    return t.coeff == 0.0 || t.form == DecayTerm::Form::Exponential || t.param > d;
  });
}

bool DecayProfile::divergesAtOrigin(int d) const {
  // dominant term at r -> 0 is the largest power exponent
  const DecayTerm* lead = nullptr;
  for (const auto& t : terms)
    if (t.form == DecayTerm::Form::Power && t.coeff != 0.0 && (!lead || t.param > lead->param)) lead = &t;
  return lead && lead->coeff > 0 && lead->param >= d;
}

// ---------------------------------------------------------------------------
// RadialGrid

RadialGrid RadialGrid::logUniform(double rMin, double rMax, int count) {
  if (!(rMin > 0.0) || !(rMax > rMin) || count < 2)
    throw DomainError("grid", "log-uniform grid needs 0 < rMin < rMax and >= 2 points");
  RadialGrid g;
  g.r.resize(count);
  const double step = std::log(rMax / rMin) / (count - 1);
  for (int i = 0; i < count; ++i) g.r[i] = rMin * std::exp(step * i);
  g.r.back() = rMax;
  return g;
}

RadialGrid RadialGrid::uniform(double rMin, double rMax, int count) {
  if (!(rMax > rMin) || count < 2) throw DomainError("grid", "uniform grid needs rMin < rMax");
  RadialGrid g;
  g.r.resize(count);
  for (int i = 0; i < count; ++i) g.r[i] = rMin + (rMax - rMin) * i / (count - 1);
  return g;
}

// ---------------------------------------------------------------------------
// names

std::string toString(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::HardCore: return "hard_core";
    case PotentialKind::SquareWell: return "square_well";
    case PotentialKind::Morse: return "morse";
    case PotentialKind::LennardJones126: return "lennard_jones_126";
    case PotentialKind::LJType: return "lj_type";
    case PotentialKind::Tabulated: return "tabulated";
    case PotentialKind::Sum: return "sum";
  }
  return "unknown";
}

std::string toString(PotentialLabel label) {
  switch (label) {
    case PotentialLabel::Repulsive: return "Repulsive";
    case PotentialLabel::Bounded: return "Bounded";
    case PotentialLabel::HardCore: return "HardCore";
    case PotentialLabel::LJType: return "LJType";
    case PotentialLabel::AbsolutelySummableCandidate: return "AbsolutelySummableCandidate";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// RadialPotential

namespace {

void checkDimension(int d) {
  if (d < 1) throw DomainError("dimension", "dimension must be a positive integer");
}

double mieFactor(const MieParams& p) {
  return (p.m / (p.m - p.n)) * std::pow(p.m / p.n, p.n / (p.m - p.n));
}

double mieMinimum(const MieParams& p) { return p.sigma * std::pow(p.m / p.n, 1.0 / (p.m - p.n)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

RadialPotential::RadialPotential(PotentialParams params, int d) : params_(std::move(params)), dimension_(d) {
  checkDimension(d);
}

RadialPotential RadialPotential::hardCore(int d, double a) {
  if (!(a > 0.0)) throw DomainError("parameter", "hard-core radius must be positive");
  RadialPotential p(HardCoreParams{}, d);
  p.hardCore_ = a;
  return p;
}

RadialPotential RadialPotential::squareWell(int d, double a, double depth, double range) {
  if (a < 0.0 || !(range > a)) throw DomainError("parameter", "square well needs 0 <= a < range");
  RadialPotential p(SquareWellParams{depth, range}, d);
  if (a > 0.0) p.hardCore_ = a;
  return p;
}

RadialPotential RadialPotential::morse(int d, double rho) {
  if (!(rho > 0.0)) throw DomainError("parameter", "Morse rho must be positive");
  return RadialPotential(MorseParams{rho}, d);
}

RadialPotential RadialPotential::lennardJones126(int d, double epsilon, double sigma) {
  if (!(epsilon > 0.0) || !(sigma > 0.0)) throw DomainError("parameter", "LJ epsilon, sigma must be positive");
  return RadialPotential(LennardJonesParams{epsilon, sigma}, d);
}

RadialPotential RadialPotential::mie(int d, double epsilon, double sigma, double m, double n) {
  if (!(epsilon > 0.0) || !(sigma > 0.0) || !(m > n) || !(n > 0.0))
    throw DomainError("parameter", "Mie potential needs epsilon, sigma > 0 and m > n > 0");
  return RadialPotential(MieParams{epsilon, sigma, m, n}, d);
}

RadialPotential RadialPotential::tabulated(int d, RadialGrid grid, std::vector<double> values) {
  if (grid.r.size() < 2 || grid.r.size() != values.size())
    throw DomainError("parameter", "tabulated potential needs matching grid and values (>= 2)");
  if (!std::is_sorted(grid.r.begin(), grid.r.end()) ||
      std::adjacent_find(grid.r.begin(), grid.r.end()) != grid.r.end() || grid.r.front() < 0.0)
    throw DomainError("parameter", "tabulated grid must be strictly increasing and nonnegative");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("parameter", "tabulated values must be finite");
  return RadialPotential(TabulatedParams{std::move(grid), std::move(values)}, d);
}

RadialPotential RadialPotential::sum(std::vector<RadialPotential> terms) {
  if (terms.empty()) throw DomainError("parameter", "sum needs at least one term");
  const int d = terms.front().dimension();
  std::optional<double> core;
  for (const auto& t : terms) {
    if (t.dimension() != d) throw DomainError("dimension", "sum terms must share a dimension");
    if (t.hardCore_) core = std::max(core.value_or(0.0), *t.hardCore_);
  }
  RadialPotential p(SumParams{std::move(terms)}, d);
  p.hardCore_ = core;
  return p;
}

RadialPotential RadialPotential::withEnvelope(Envelope env) const {
  if (!(env.r1 > 0.0) || env.r2 < env.r1 || env.w < 0.0)
    throw DomainError("envelope", "envelope needs 0 < r1 <= r2 and w >= 0");
  // nonnegative and nonincreasing on their domains, by sampling
  auto checkProfile = [](const DecayProfile& f, double lo, double hi, const char* name) {
    double prev = INFINITY;
    for (int i = 0; i <= 512; ++i) {
      const double r = lo * std::pow(hi / lo, i / 512.0);
      const double v = f(r);
      if (v < 0.0 || v > prev * (1.0 + 1e-12))
        throw DomainError("envelope", std::string(name) + " must be nonnegative and nonincreasing");
      prev = v;
    }
  };
  if (!env.xi.empty()) checkProfile(env.xi, env.r1 * 1e-6, env.r1, "xi");
  if (!env.eta.empty()) checkProfile(env.eta, env.r2, env.r2 * 1e6, "eta");
  RadialPotential p = *this;
  p.envelope_ = std::move(env);
  return p;
}

RadialPotential RadialPotential::withHardCore(double a) const {
  if (!(a > 0.0)) throw DomainError("parameter", "hard-core radius must be positive");
  RadialPotential p = *this;
  p.hardCore_ = std::max(a, hardCore_.value_or(0.0));
  return p;
}

PotentialKind RadialPotential::kind() const {
  return std::visit(Overloaded{
                        [](const HardCoreParams&) { return PotentialKind::HardCore; },
                        [](const SquareWellParams&) { return PotentialKind::SquareWell; },
                        [](const MorseParams&) { return PotentialKind::Morse; },
                        [](const LennardJonesParams&) { return PotentialKind::LennardJones126; },
                        [](const MieParams&) { return PotentialKind::LJType; },
                        [](const TabulatedParams&) { return PotentialKind::Tabulated; },
                        [](const SumParams&) { return PotentialKind::Sum; },
                    },
                    params_);
}

ExtendedReal RadialPotential::evaluate(double r) const {
  if (!(r >= 0.0)) throw DomainError("domain", "potential evaluated at a negative radius");
  if (hardCore_ && r <= *hardCore_) return ExtendedReal::infinity();
  return evaluateBody(r);
}

ExtendedReal RadialPotential::evaluateBody(double r) const {
  return std::visit(
      Overloaded{
          [](const HardCoreParams&) { return ExtendedReal(0.0); },
          [r](const SquareWellParams& p) { return ExtendedReal(r <= p.range ? -p.depth : 0.0); },
          [r](const MorseParams& p) {
            const double u = std::exp(p.rho * (1.0 - r));
            return ExtendedReal(u * (u - 2.0));
          },
          [r](const LennardJonesParams& p) {
            if (r == 0.0) return ExtendedReal::infinity();
            const double x6 = std::pow(p.sigma / r, 6);
            const double v = 4.0 * p.epsilon * x6 * (x6 - 1.0);
            return std::isinf(v) ? ExtendedReal::infinity() : ExtendedReal(v);
          },
          [r](const MieParams& p) {
            if (r == 0.0) return ExtendedReal::infinity();
            const double x = p.sigma / r;
            const double v = p.epsilon * mieFactor(p) * (std::pow(x, p.m) - std::pow(x, p.n));
            return std::isinf(v) ? ExtendedReal::infinity() : ExtendedReal(v);
          },
          [r](const TabulatedParams& p) {
            const auto& g = p.grid.r;
            if (r <= g.front()) return ExtendedReal(p.values.front());
            if (r > g.back()) return ExtendedReal(0.0);
            const auto it = std::upper_bound(g.begin(), g.end(), r);
            if (it == g.end()) return ExtendedReal(p.values.back());
            const std::size_t hi = static_cast<std::size_t>(it - g.begin());
            const double t = (r - g[hi - 1]) / (g[hi] - g[hi - 1]);
            return ExtendedReal(p.values[hi - 1] + t * (p.values[hi] - p.values[hi - 1]));
          },
          [r](const SumParams& p) {
            ExtendedReal s(0.0);
            for (const auto& term : p.terms) s = s + term.evaluate(r);
            return s;
          },
      },
      params_);
}

std::vector<double> RadialPotential::breakpoints() const {
  std::vector<double> out = std::visit(
      Overloaded{
          [](const HardCoreParams&) { return std::vector<double>{}; },
          [](const SquareWellParams& p) { return std::vector<double>{p.range}; },
          [](const MorseParams& p) { return std::vector<double>{1.0 - std::numbers::ln2 / p.rho, 1.0}; },
          [](const LennardJonesParams& p) {
            return std::vector<double>{p.sigma, p.sigma * std::pow(2.0, 1.0 / 6.0)};
          },
          [](const MieParams& p) { return std::vector<double>{p.sigma, mieMinimum(p)}; },
          [](const TabulatedParams& p) { return p.grid.r; },
          [](const SumParams& p) {
            std::vector<double> all;
            for (const auto& t : p.terms) {
              auto b = t.breakpoints();
              all.insert(all.end(), b.begin(), b.end());
            }
            return all;
          },
      },
      params_);
  if (hardCore_) out.push_back(*hardCore_);
  if (envelope_) {
    out.push_back(envelope_->r1);
    out.push_back(envelope_->r2);
  }
  std::erase_if(out, [](double r) { return !(r > 0.0); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TailBound RadialPotential::tailBound() const {
  using F = DecayTerm::Form;
  return std::visit(
      Overloaded{
          [this](const HardCoreParams&) { return TailBound{*hardCore_, {}, true}; },
          [this](const SquareWellParams& p) {
            return TailBound{std::max(p.range, hardCore_.value_or(0.0)), {}, true};
          },
          [](const MorseParams& p) {
            // for r >= 1, u = e^{rho(1-r)} in (0,1] and |u^2 - 2u| <= 2u
            return TailBound{1.0, DecayProfile{{{F::Exponential, 2.0 * std::exp(p.rho), p.rho}}}, true};
          },
          [](const LennardJonesParams& p) {
            return TailBound{p.sigma, DecayProfile{{{F::Power, 4.0 * p.epsilon * std::pow(p.sigma, 6), 6.0}}},
                             true};
          },
          [](const MieParams& p) {
            return TailBound{p.sigma,
                             DecayProfile{{{F::Power, p.epsilon * mieFactor(p) * std::pow(p.sigma, p.n), p.n}}},
                             true};
          },
          [](const TabulatedParams& p) { return TailBound{p.grid.r.back(), {}, true}; },
          [](const SumParams& p) {
            TailBound out{0.0, {}, true};
            for (const auto& t : p.terms) {
              const auto b = t.tailBound();
              out.from = std::max(out.from, b.from);
              out.known = out.known && b.known;
              for (auto term : b.bound.terms) {
                term.coeff = std::abs(term.coeff);
                out.bound.terms.push_back(term);
              }
            }
            return out;
          },
      },
      params_);
}

std::optional<double> RadialPotential::finiteRange() const {
  const auto tb = tailBound();
  if (tb.known && tb.bound.empty()) return tb.from;
  return std::nullopt;
}

bool RadialPotential::divergesAtOrigin() const {
  if (hardCore_) return false;
  return std::visit(Overloaded{
                        [this](const LennardJonesParams&) { return 12 >= dimension_; },
                        [this](const MieParams& p) { return p.m >= dimension_; },
                        [](const SumParams& p) {
                          return std::any_of(p.terms.begin(), p.terms.end(),
                                             [](const RadialPotential& t) { return t.divergesAtOrigin(); });
                        },
                        [](const auto&) { return false; },
                    },
                    params_);
}

bool RadialPotential::finiteEverywhere() const {
  if (hardCore_) return false;
  return std::visit(Overloaded{
                        [](const LennardJonesParams&) { return false; },
                        [](const MieParams&) { return false; },
                        [](const SumParams& p) {
                          return std::all_of(p.terms.begin(), p.terms.end(),
                                             [](const RadialPotential& t) { return t.finiteEverywhere(); });
                        },
                        [](const auto&) { return true; },
                    },
                    params_);
}

double RadialPotential::lengthScale() const {
  return std::visit(Overloaded{
                        [this](const HardCoreParams&) { return *hardCore_; },
                        [](const SquareWellParams& p) { return p.range; },
                        [](const MorseParams&) { return 1.0; },
                        [](const LennardJonesParams& p) { return p.sigma * std::pow(2.0, 1.0 / 6.0); },
                        [](const MieParams& p) { return mieMinimum(p); },
                        [](const TabulatedParams& p) { return p.grid.r.back(); },
                        [](const SumParams& p) {
                          double s = 0.0;
                          for (const auto& t : p.terms) s = std::max(s, t.lengthScale());
                          return s;
                        },
                    },
                    params_);
}

std::string RadialPotential::id() const {
  std::ostringstream os;
  os << toString(kind());
  std::visit(Overloaded{
                 [](const HardCoreParams&) {},
                 [&os](const SquareWellParams& p) { os << "(depth=" << p.depth << ",range=" << p.range << ")"; },
                 [&os](const MorseParams& p) { os << "(rho=" << p.rho << ")"; },
                 [&os](const LennardJonesParams& p) { os << "(epsilon=" << p.epsilon << ",sigma=" << p.sigma << ")"; },
                 [&os](const MieParams& p) {
                   os << "(epsilon=" << p.epsilon << ",sigma=" << p.sigma << ",m=" << p.m << ",n=" << p.n << ")";
                 },
                 [&os](const TabulatedParams& p) { os << "(nodes=" << p.grid.r.size() << ")"; },
                 [&os](const SumParams& p) {
                   os << "(";
                   for (std::size_t i = 0; i < p.terms.size(); ++i) os << (i ? "+" : "") << p.terms[i].id();
                   os << ")";
                 },
             },
             params_);
  if (hardCore_) os << "[core=" << *hardCore_ << "]";
  os << "[d=" << dimension_ << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// RuelleSplit and classification

void RuelleSplit::validate(int gridPoints) const {
  if (phi1.dimension() != phi2.dimension()) throw DomainError("dimension", "split parts differ in dimension");
  if (stabilityConstantPhi2 < 0.0) throw DomainError("parameter", "stability constant must be nonnegative");
  const double scale = std::max(phi1.lengthScale(), phi2.lengthScale());
  const auto grid = RadialGrid::logUniform(scale * 1e-6, scale * 50.0, gridPoints);
  auto check = [&](double r) {
    if (phi1.evaluate(r).value() < 0.0) throw DomainError("split", "phi1 must be nonnegative");
    if (phi2.evaluate(r).isInfinite()) throw DomainError("split", "phi2 must be finite");
  };
  check(0.0);
  for (double r : grid.r) check(r);
}

std::set<PotentialLabel> classify(const RadialPotential& p) {
  std::set<PotentialLabel> labels;
  if (p.hardCoreRadius()) labels.insert(PotentialLabel::HardCore);

  const bool repulsive = std::visit(
      Overloaded{
          [](const HardCoreParams&) { return true; },
          [](const SquareWellParams& s) { return s.depth <= 0.0; },
          [](const TabulatedParams& t) {
            return std::all_of(t.values.begin(), t.values.end(), [](double v) { return v >= 0.0; });
          },
          [](const SumParams& s) {
            return std::all_of(s.terms.begin(), s.terms.end(), [](const RadialPotential& t) {
              return classify(t).contains(PotentialLabel::Repulsive);
            });
          },
          [](const auto&) { return false; },
      },
      p.params());
  if (repulsive) labels.insert(PotentialLabel::Repulsive);

  if (p.finiteEverywhere()) {
    labels.insert(PotentialLabel::Bounded);
    const auto tb = p.tailBound();
    if (tb.known && tb.bound.integrableAtInfinity(p.dimension()))
      labels.insert(PotentialLabel::AbsolutelySummableCandidate);
  }
  if (p.divergesAtOrigin() || (p.envelope() && p.envelope()->xi.divergesAtOrigin(p.dimension())))
    labels.insert(PotentialLabel::LJType);
  return labels;
}

bool isPenroseLike(const RadialPotential& p) { return p.hardCoreRadius().has_value() && *p.hardCoreRadius() > 0.0; }

bool isStrictPenroseOnGrid(const RadialPotential& p, double rMax, int points) {
  if (!isPenroseLike(p)) return false;
  const double a = *p.hardCoreRadius();
  for (int i = 0; i <= points; ++i) {
    const double r = a * i / points;
    if (!p.evaluate(r).isInfinite()) return false;
  }
  for (int i = 1; i <= points; ++i) {
    const double r = a + (rMax - a) * i / points;
    if (!(p.evaluate(r).value() < 0.0)) return false;
  }
  return true;
}

bool isNonincreasingOnGrid(const RadialPotential& p, double from, double to, int points) {
  double prev = p.evaluate(from).value();
  for (int i = 1; i <= points; ++i) {
    const double v = p.evaluate(from + (to - from) * i / points).value();
    if (v > prev + 1e-14 * std::abs(prev)) return false;
    prev = v;
  }
  return true;
}

InteractionMatrix interactionMatrix(const RadialPotential& p, double beta, std::span<const Point> points) {
  if (points.size() < 2) throw DomainError("range", "interaction matrix needs at least two points");
  if (!(beta > 0.0)) throw DomainError("parameter", "beta must be positive");
  const int n = static_cast<int>(points.size());
  for (const auto& x : points)
    if (static_cast<int>(x.size()) != p.dimension()) throw DomainError("dimension", "point dimension mismatch");
  InteractionMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double r2 = 0.0;
      for (int k = 0; k < p.dimension(); ++k) r2 += (points[i][k] - points[j][k]) * (points[i][k] - points[j][k]);
      m.set(i, j, beta * p.evaluate(std::sqrt(r2)));
    }
  return m;
}

}  // namespace clusterrad
