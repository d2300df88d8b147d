#include "clusterrad/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "clusterrad/bounds.hpp"
#include "clusterrad/combinat.hpp"
#include "clusterrad/decompose.hpp"
#include "clusterrad/mayer.hpp"
#include "clusterrad/parallel.hpp"
#include "clusterrad/potential_json.hpp"
#include "clusterrad/rng.hpp"
#include "clusterrad/stability.hpp"
#include "clusterrad/tgi.hpp"

namespace clusterrad::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string potential;
  std::optional<double> beta;
  std::string betaSweep;
  std::vector<double> betas;
  std::string out;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::string format;
  int n = 0;
  int trials = 0;
  std::string method;
  double boxSide = 64.0;
  std::uint64_t samples = 1000000;
  int workersFlag = 0;
  int workers = 1;

  Json toJson() const {
    Json j;
    j["subcommand"] = subcommand;
    if (!potential.empty()) j["potential"] = potential;
    if (!betaSweep.empty()) j["beta_sweep"] = betaSweep;
    if (!betas.empty()) j["betas"] = betas;
    if (!out.empty()) j["out"] = out;
    j["seed"] = seed;
    if (tol) j["tol"] = *tol;
    j["format"] = format;
    if (n > 0) j["n"] = n;
    if (trials > 0) j["trials"] = trials;
    if (!method.empty()) j["method"] = method;
    if (subcommand == "mayer") {
      j["box_side"] = boxSide;
      j["samples"] = samples;
    }
    return j;
  }
};

Json realJson(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return nullptr;
  return x > 0 ? "inf" : "-inf";
}

template <class T>
Json optionalJson(const std::optional<T>& x) {
  if (!x) return nullptr;
  return realJson(*x);
}

Json radiusJson(const Radius& r) { return Json{{"log", realJson(r.logValue)}, {"value", realJson(r.value)}}; }

Json optionalRadiusJson(const std::optional<Radius>& r) { return r ? radiusJson(*r) : Json(nullptr); }

Json gridFunctionSummary(const RadialGridFunction& f) {
  if (f.values.empty()) return nullptr;
  return Json{{"min", realJson(f.min())}, {"max", realJson(f.max())}, {"points", f.values.size()}};
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DomainError("io", "cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void writeJson(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void writeCsvHeader(std::ostream& os, const RunConfig& cfg) { os << "# run_config: " << cfg.toJson().dump() << '\n'; }

void writeCsvRow(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

std::string optionalCell(const std::optional<double>& x) { return x ? formatReal(*x) : std::string(); }

QuadratureSpec quadSpec(const RunConfig& cfg) {
  QuadratureSpec spec;
  if (cfg.tol) spec.relTol = *cfg.tol;
  spec.validate();
  return spec;
}

std::vector<double> resolveBetas(RunConfig& cfg) {
  if (!cfg.betaSweep.empty()) return parseBetaSweep(cfg.betaSweep);
  return {cfg.beta.value_or(1.0)};
}

PotentialDocument requirePotential(const RunConfig& cfg) {
  if (cfg.potential.empty()) throw UsageError("--potential is required");
  return loadPotentialDocument(cfg.potential);
}

// bounds

struct LjRuelleSource {
  std::optional<double> a;
  std::optional<double> btilde;
  Json summary;
};

LjRuelleSource ljRuelleSource(const PotentialDocument& doc, const RunConfig& cfg) {
  LjRuelleSource src;
  const auto& p = doc.potential;
  if (doc.split || !classify(p).contains(PotentialLabel::LJType) || !p.envelope()) return src;
  DecomposeOptions options;
  options.workers = cfg.workers;
  const auto result = decompose(p, options);
  src.summary = Json{{"success", result.success}, {"a", realJson(result.a)}, {"btilde", optionalJson(result.btilde)}};
  if (!result.success) src.summary["failure"] = result.failure;
  if (result.success && result.btilde) {
    src.a = result.a;
    src.btilde = result.btilde;
  }
  return src;
}

Json boundReportJson(const BoundReport& r) {
  const auto& in = r.inputs;
  Json j;
  j["potential_id"] = r.potentialId;
  j["beta"] = r.beta;
  j["lj_type"] = r.ljType;
  Json inputs;
  inputs["B"] = optionalJson(in.B);
  inputs["B_source"] = in.bSource;
  inputs["Btilde"] = optionalJson(in.Btilde);
  inputs["ruelle_source"] = in.ruelleSource;
  inputs["c_beta"] = realJson(in.cBeta);
  inputs["c_star_beta"] = optionalJson(in.cStarBeta);
  inputs["c_tilde_beta"] = optionalJson(in.cTildeBeta);
  inputs["v_l1"] = optionalJson(in.vL1);
  inputs["tail_verified"] = in.tailVerified;
  j["inputs"] = inputs;
  j["radii"] = Json{{"penrose_ruelle", optionalRadiusJson(r.penroseRuelle)},
                    {"brydges_federbush", optionalRadiusJson(r.brydgesFederbush)},
                    {"penrose", optionalRadiusJson(r.penrose)},
                    {"ruelle", optionalRadiusJson(r.ruelle)}};
  Json coeffs = Json::array();
  for (const auto& c : r.coefficientBounds)
    coeffs.push_back(Json{{"theorem", toString(c.theorem)}, {"n", c.n}, {"log", realJson(c.bound.logValue)},
                          {"value", realJson(c.bound.value)}});
  j["coefficient_bounds"] = coeffs;
  Json ratios = Json::array();
  for (const auto& q : r.ratios)
    ratios.push_back(Json{{"numerator", toString(q.numerator)}, {"denominator", toString(q.denominator)},
                          {"log", realJson(q.ratio.logValue)}, {"value", realJson(q.ratio.value)}});
  j["ratios"] = ratios;
  j["best"] = r.best ? Json(toString(*r.best)) : Json(nullptr);
  j["recomputation_check"] = verifyReport(r);
  return j;
}

void runBounds(RunConfig& cfg, std::ostream& os) {
  const auto doc = requirePotential(cfg);
  const auto spec = quadSpec(cfg);
  cfg.betas = resolveBetas(cfg);
  const auto lj = ljRuelleSource(doc, cfg);

  std::vector<BoundReport> reports;
  for (double beta : cfg.betas) {
    std::optional<RuelleInputs> ruelle;
    if (lj.a && lj.btilde) {
      std::ostringstream label;
      label << "truncation a=" << formatReal(*lj.a);
      ruelle = RuelleInputs{*lj.btilde, cTildeOfTruncation(doc.potential, *lj.a, beta, spec), label.str()};
    }
    reports.push_back(compareReport(doc.potential, beta, doc.split, doc.stabilityConstant, ruelle, spec));
  }

  if (cfg.format == "csv") {
    writeCsvHeader(os, cfg);
    const Theorem all[] = {Theorem::PenroseRuelle, Theorem::BrydgesFederbush, Theorem::Penrose, Theorem::Ruelle};
    std::vector<std::string> header{"beta"};
    for (Theorem t : all) header.push_back(toString(t));
    for (Theorem t : all) header.push_back("log_" + toString(t));
    writeCsvRow(os, header);
    for (const auto& r : reports) {
      std::vector<std::string> row{formatReal(r.beta)};
      for (Theorem t : all) {
        const auto rad = r.radius(t);
        row.push_back(rad ? formatReal(rad->value) : std::string());
      }
      for (Theorem t : all) {
        const auto rad = r.radius(t);
        row.push_back(rad ? formatReal(rad->logValue) : std::string());
      }
      writeCsvRow(os, row);
    }
    return;
  }
  Json j;
  j["run_config"] = cfg.toJson();
  if (!lj.summary.is_null()) j["decomposition"] = lj.summary;
  if (reports.size() == 1) {
    const Json report = boundReportJson(reports.front());
    for (const auto& [k, v] : report.items()) j[k] = v;
  } else {
    Json sweep = Json::array();
    for (const auto& r : reports) sweep.push_back(boundReportJson(r));
    j["sweep"] = sweep;
  }
  writeJson(os, j);
}

// verify-tgi

struct TgiTrial {
  double lhs = 0.0;
  double rhs = 0.0;
  double errorEstimate = 0.0;
  bool pass = false;
};

void runVerifyTgi(RunConfig& cfg, std::ostream& os) {
  if (cfg.n == 0) cfg.n = 3;
  if (cfg.trials == 0) cfg.trials = 100;
  if (!cfg.tol) cfg.tol = 1e-6;
  if (cfg.n < 2 || cfg.n > 5) throw DomainError("range", "verify-tgi supports n = 2..5");
  const int n = cfg.n;
  const double tol = *cfg.tol;
  std::vector<TgiTrial> trials(static_cast<std::size_t>(cfg.trials));
  parallelFor(trials.size(), cfg.workers, [&](std::size_t t) {
    CounterRng rng(hashCombine(hashCombine(cfg.seed, static_cast<std::uint64_t>(n)), t));
    InteractionMatrix v(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) v.set(i, j, rng.uniform(-1.0, 2.0));
    auto& out = trials[t];
    out.lhs = lhsConnectedGraphSum(v);
    const auto rhs = rhsTreeSum(v);
    out.rhs = rhs.value;
    out.errorEstimate = rhs.errorEstimate;
    out.pass = std::abs(out.lhs - out.rhs) <= std::max(1e-8, tol * std::abs(out.lhs));
  });
  int passes = 0;
  double maxError = 0.0;
  for (const auto& t : trials) {
    passes += t.pass ? 1 : 0;
    maxError = std::max(maxError, std::abs(t.lhs - t.rhs));
  }

  if (cfg.format == "csv") {
    writeCsvHeader(os, cfg);
    writeCsvRow(os, {"trial", "lhs", "rhs", "abs_error", "quadrature_error", "pass"});
    for (std::size_t t = 0; t < trials.size(); ++t)
      writeCsvRow(os, {std::to_string(t), formatReal(trials[t].lhs), formatReal(trials[t].rhs),
                       formatReal(std::abs(trials[t].lhs - trials[t].rhs)), formatReal(trials[t].errorEstimate),
                       trials[t].pass ? "1" : "0"});
    return;
  }
  Json j;
  j["run_config"] = cfg.toJson();
  j["n"] = n;
  j["trials"] = cfg.trials;
  j["passes"] = passes;
  j["tolerance"] = tol;
  j["max_abs_error"] = maxError;
  Json rows = Json::array();
  for (const auto& t : trials)
    rows.push_back(Json{{"lhs", t.lhs}, {"rhs", t.rhs}, {"quadrature_error", t.errorEstimate}, {"pass", t.pass}});
  j["results"] = rows;
  writeJson(os, j);
}

// mayer

void runMayer(RunConfig& cfg, std::ostream& os) {
  const auto doc = requirePotential(cfg);
  if (cfg.n == 0) cfg.n = 2;
  if (cfg.method.empty()) cfg.method = doc.potential.dimension() == 1 ? "exact1d" : "montecarlo";
  if (cfg.format.empty()) cfg.format = "csv";
  cfg.betas = resolveBetas(cfg);
  MayerOptions options;
  options.method = parseMayerMethod(cfg.method);
  cfg.method = toString(options.method);
  options.seed = cfg.seed;
  options.samples = cfg.samples;
  options.workers = cfg.workers;
  if (cfg.tol) options.relTol = *cfg.tol;
  const Box box{doc.potential.dimension(), cfg.boxSide};

  std::vector<std::pair<double, MayerEstimate>> rows;
  for (double beta : cfg.betas) rows.emplace_back(beta, mayerCoefficient(doc.potential, beta, box, cfg.n, options));

  if (cfg.format == "csv") {
    writeCsvHeader(os, cfg);
    writeCsvRow(os, {"n", "value", "std_error", "method", "box_side", "samples"});
    for (const auto& [beta, e] : rows)
      writeCsvRow(os, {std::to_string(e.n), formatReal(e.value), formatReal(e.standardError), toString(e.method),
                       formatReal(e.boxSide), std::to_string(e.samples)});
    return;
  }
  Json j;
  j["run_config"] = cfg.toJson();
  Json list = Json::array();
  for (const auto& [beta, e] : rows)
    list.push_back(Json{{"beta", beta},
                        {"n", e.n},
                        {"value", realJson(e.value)},
                        {"std_error", realJson(e.standardError)},
                        {"method", toString(e.method)},
                        {"box_side", e.boxSide},
                        {"samples", e.samples},
                        {"boundary_flag", e.boundaryFlag}});
  j["estimates"] = list;
  writeJson(os, j);
}

// stability

void runStability(RunConfig& cfg, std::ostream& os) {
  const auto doc = requirePotential(cfg);
  if (cfg.n == 0) cfg.n = 8;
  if (cfg.trials == 0) cfg.trials = 4;
  StabilitySearchOptions options;
  options.nMax = cfg.n;
  options.restarts = cfg.trials;
  options.seed = cfg.seed;
  options.workers = cfg.workers;
  const auto est = configurationLowerBound(doc.potential, options);

  if (cfg.format == "csv") {
    writeCsvHeader(os, cfg);
    writeCsvRow(os, {"lower_bound", "upper_bound", "n_max", "restarts", "seed", "method"});
    writeCsvRow(os, {formatReal(est.lowerBound), optionalCell(est.upperBound), std::to_string(cfg.n),
                     std::to_string(cfg.trials), std::to_string(cfg.seed), est.method});
    os << '\n';
    std::vector<std::string> header{"point"};
    for (int k = 0; k < doc.potential.dimension(); ++k) header.push_back("x" + std::to_string(k));
    writeCsvRow(os, header);
    for (std::size_t i = 0; i < est.witness.size(); ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (double x : est.witness[i]) row.push_back(formatReal(x));
      writeCsvRow(os, row);
    }
    return;
  }
  Json j;
  j["run_config"] = cfg.toJson();
  j["lower_bound"] = realJson(est.lowerBound);
  if (est.upperBound) j["upper_bound"] = realJson(*est.upperBound);
  j["witness"] = est.witness;
  j["n_max"] = cfg.n;
  j["restarts"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["method"] = est.method;
  writeJson(os, j);
}

// decompose

void writeDecompositionTables(std::ostream& rOut, std::ostream& pOut, const DecompositionResult& r,
                              const RunConfig& cfg) {
  writeCsvHeader(rOut, cfg);
  if (r.degenerate) {
    writeCsvRow(rOut, {"r", "phi1", "phi2"});
    for (std::size_t i = 0; i < r.phi2.grid.size(); ++i)
      writeCsvRow(rOut, {formatReal(r.phi2.grid[i]), formatReal(r.phi1.values[i]), formatReal(r.phi2.values[i])});
  } else {
    writeCsvRow(rOut, {"r", "v_a", "eta1", "eta3", "xi1", "psi1", "psi2", "phi1", "phi2"});
    for (std::size_t i = 0; i < r.Va.grid.size(); ++i)
      writeCsvRow(rOut, {formatReal(r.Va.grid[i]), formatReal(r.Va.values[i]), formatReal(r.eta1.values[i]),
                         formatReal(r.eta3.values[i]), formatReal(r.xi1.values[i]), formatReal(r.psi1.values[i]),
                         formatReal(r.psi2.values[i]), formatReal(r.phi1.values[i]), formatReal(r.phi2.values[i])});
  }
  writeCsvHeader(pOut, cfg);
  writeCsvRow(pOut, {"p", "inner_transform"});
  for (std::size_t i = 0; i < r.fourier.p.size(); ++i)
    writeCsvRow(pOut, {formatReal(r.fourier.p[i]), formatReal(r.fourier.inner[i])});
}

std::string siblingPath(const std::string& path, const std::string& suffix) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix;
}

void runDecompose(RunConfig& cfg, std::ostream& os) {
  const auto doc = requirePotential(cfg);
  DecomposeOptions options;
  options.workers = cfg.workers;
  const auto r = decompose(doc.potential, options);

  if (cfg.format == "csv") {
    std::ostringstream pTable;
    writeDecompositionTables(os, pTable, r, cfg);
    os << '\n' << pTable.str();
    return;
  }
  const auto& c = r.constants;
  const auto& ch = r.checks;
  Json j;
  j["run_config"] = cfg.toJson();
  j["potential_id"] = doc.potential.id();
  j["degenerate"] = r.degenerate;
  j["success"] = r.success;
  if (!r.failure.empty()) j["failure"] = r.failure;
  j["a"] = realJson(r.a);
  j["best_xi_moment"] = realJson(r.bestXiMoment);
  j["a_candidates"] = r.aCandidates;
  j["btilde"] = optionalJson(r.btilde);
  j["psi"] = r.psiDescription;
  j["chi"] = r.chiDescription;
  j["constants"] = Json{{"C1", c.C1},         {"C2", c.C2},         {"Cprime", c.Cprime},
                        {"Cdoubleprime", c.Cdoubleprime}, {"Cstar", c.Cstar}, {"K", c.K},
                        {"H", c.Htail},       {"C", c.C},           {"eta2_norm", c.eta2Norm},
                        {"mollifier_mass", c.mollifierMass}};
  j["checks"] = Json{{"phi1_nonnegative", ch.phi1Nonnegative},
                     {"psi1_nonnegative", ch.psi1Nonnegative},
                     {"va_above_minus_eta3", ch.unoHolds},
                     {"xi1_below_va", ch.dueHolds},
                     {"eta3_above_eta1", ch.eta3AboveEta1},
                     {"fourier_nonnegative_sampled", ch.fourierNonnegative}};
  j["fourier"] = Json{{"points", r.fourier.p.size()},
                      {"min", realJson(r.fourier.min)},
                      {"max", realJson(r.fourier.max)},
                      {"note", "sampled transform check, not a proof"}};
  j["functions"] = Json{{"v_a", gridFunctionSummary(r.Va)},     {"eta3", gridFunctionSummary(r.eta3)},
                        {"xi1", gridFunctionSummary(r.xi1)},    {"psi1", gridFunctionSummary(r.psi1)},
                        {"psi2", gridFunctionSummary(r.psi2)},  {"phi1", gridFunctionSummary(r.phi1)},
                        {"phi2", gridFunctionSummary(r.phi2)}};
  if (!cfg.out.empty()) {
    const auto rPath = siblingPath(cfg.out, "_r.csv");
    const auto pPath = siblingPath(cfg.out, "_p.csv");
    std::ofstream rFile(rPath, std::ios::binary), pFile(pPath, std::ios::binary);
    if (!rFile || !pFile) throw DomainError("io", "cannot open table files next to " + cfg.out);
    writeDecompositionTables(rFile, pFile, r, cfg);
    j["tables"] = Json{{"r_grid", rPath}, {"p_grid", pPath}};
  }
  writeJson(os, j);
}

// integrals

void runIntegrals(RunConfig& cfg, std::ostream& os) {
  const auto doc = requirePotential(cfg);
  const auto spec = quadSpec(cfg);
  cfg.betas = resolveBetas(cfg);
  std::vector<std::pair<double, IntegralConstants>> rows;
  for (double beta : cfg.betas) rows.emplace_back(beta, integralConstants(doc.potential, beta, doc.split, spec));

  if (cfg.format == "csv") {
    writeCsvHeader(os, cfg);
    writeCsvRow(os, {"beta", "c_beta", "c_star_beta", "c_tilde_beta", "v_l1", "sphere_volume", "tail_verified"});
    for (const auto& [beta, c] : rows)
      writeCsvRow(os, {formatReal(beta), formatReal(c.cBeta), optionalCell(c.cStarBeta), optionalCell(c.cTildeBeta),
                       optionalCell(c.vL1), formatReal(c.sphereVolume), c.tailVerified ? "1" : "0"});
    return;
  }
  Json j;
  j["run_config"] = cfg.toJson();
  j["potential_id"] = doc.potential.id();
  Json list = Json::array();
  for (const auto& [beta, c] : rows)
    list.push_back(Json{{"beta", beta},
                        {"c_beta", realJson(c.cBeta)},
                        {"c_star_beta", optionalJson(c.cStarBeta)},
                        {"c_tilde_beta", optionalJson(c.cTildeBeta)},
                        {"v_l1", optionalJson(c.vL1)},
                        {"sphere_volume", c.sphereVolume},
                        {"tail_verified", c.tailVerified}});
  j["integrals"] = list;
  writeJson(os, j);
}

void writeError(std::ostream& err, const std::string& category, const std::string& message) {
  err << Json{{"error", category}, {"message", message}}.dump() << '\n';
}

}  // namespace

std::string formatReal(double x) {
  if (std::isnan(x)) return {};
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> parseBetaSweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4) throw UsageError("--beta-sweep expects A:B:N[:log]");
  bool logScale = false;
  if (parts.size() == 4) {
    if (parts[3] == "log") logScale = true;
    else if (parts[3] != "linear") throw UsageError("--beta-sweep scale must be log or linear");
  }
  double a = 0.0, b = 0.0;
  long steps = 0;
  try {
    std::size_t used = 0;
    a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("a");
    b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("b");
    steps = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("n");
  } catch (const std::logic_error&) {
    throw UsageError("--beta-sweep has a malformed number");
  }
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw UsageError("--beta-sweep endpoints must be positive");
  if (steps < 1) throw UsageError("--beta-sweep needs at least one step");
  std::vector<double> betas;
  for (long k = 0; k < steps; ++k) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(k) / (steps - 1);
    betas.push_back(logScale ? std::exp(std::log(a) + t * (std::log(b) - std::log(a))) : a + t * (b - a));
  }
  return betas;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convergence-radius bounds for the Mayer series of continuous gases", "cluster-radius"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto addPotential = [&](CLI::App* sub) { sub->add_option("--potential", cfg.potential, "potential JSON file"); };
  auto addBeta = [&](CLI::App* sub) {
    auto* beta = sub->add_option("--beta", cfg.beta, "inverse temperature")->check(CLI::PositiveNumber);
    auto* sweep = sub->add_option("--beta-sweep", cfg.betaSweep, "A:B:N[:log]");
    beta->excludes(sweep);
  };
  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "output file");
    sub->add_option("--workers", cfg.workersFlag, "worker threads")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol", cfg.tol, "tolerance override")->check(CLI::PositiveNumber);
  };

  auto* bounds = app.add_subcommand("bounds", "radius bounds and comparison report");
  addPotential(bounds);
  addBeta(bounds);
  addCommon(bounds);

  auto* tgi = app.add_subcommand("verify-tgi", "check the tree-graph identity on random matrices");
  tgi->add_option("--n", cfg.n, "number of vertices");
  tgi->add_option("--trials", cfg.trials, "number of random matrices")->check(CLI::PositiveNumber);
  addCommon(tgi);

  auto* mayer = app.add_subcommand("mayer", "finite-volume Mayer coefficient");
  addPotential(mayer);
  addBeta(mayer);
  mayer->add_option("--n", cfg.n, "coefficient order");
  mayer->add_option("--method", cfg.method, "exact1d or montecarlo");
  mayer->add_option("--box-side", cfg.boxSide, "box side L")->check(CLI::PositiveNumber);
  mayer->add_option("--samples", cfg.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  addCommon(mayer);

  auto* stability = app.add_subcommand("stability", "stability constant search");
  addPotential(stability);
  stability->add_option("--n", cfg.n, "largest configuration size")->check(CLI::Range(2, 64));
  stability->add_option("--trials", cfg.trials, "restarts per size")->check(CLI::PositiveNumber);
  addCommon(stability);

  auto* decomp = app.add_subcommand("decompose", "Lennard-Jones type decomposition");
  addPotential(decomp);
  addCommon(decomp);

  auto* integrals = app.add_subcommand("integrals", "integral constants C, C*, C~ and the L1 norm");
  addPotential(integrals);
  addBeta(integrals);
  addCommon(integrals);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.workers = resolveWorkers(cfg.workersFlag);
  try {
    if (cfg.format.empty()) cfg.format = cfg.subcommand == "mayer" ? "csv" : "json";
    std::ostringstream buffer;
    if (cfg.subcommand == "bounds") runBounds(cfg, buffer);
    else if (cfg.subcommand == "verify-tgi") runVerifyTgi(cfg, buffer);
    else if (cfg.subcommand == "mayer") runMayer(cfg, buffer);
    else if (cfg.subcommand == "stability") runStability(cfg, buffer);
    else if (cfg.subcommand == "decompose") runDecompose(cfg, buffer);
    else runIntegrals(cfg, buffer);
    Sink sink(cfg.out, out);
    *sink << buffer.str();
    (*sink).flush();
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    writeError(err, e.category(), e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    writeError(err, "internal", e.what());
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace clusterrad::cli
